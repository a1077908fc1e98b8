#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rlag {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(static_cast<long>(v)) {}
  Rational(long v) : q_(v) {}
  Rational(const Integer& v) : q_(v) {}
  /// Any gmpxx integer or rational expression, e.g. factorial(n) * factorial(m).
  template <class T, class U>
  Rational(const __gmp_expr<T, U>& e) : q_(e)
  {
  }
  /// Throws std::domain_error when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Throws std::domain_error on zero.
  Rational inverse() const;
  Rational abs() const;

  bool fits_int64() const;
  std::int64_t to_int64() const;

  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
  {
    return cmp(a.q_, b.q_) <=> 0;
  }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::optional<Rational> try_inverse(const Rational& r);
inline std::string to_string(const Rational& r) { return r.str(); }

Integer factorial(unsigned long n);

// C(a, b) over the integers; zero whenever b < 0 or b > a.
Integer binomial(long a, long b);

} // namespace rlag
