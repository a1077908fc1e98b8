#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "rlag/rational.hpp"

namespace rlag {

enum class Var { x, y };

struct Monomial {
  unsigned dx = 0;
  unsigned dy = 0;

  unsigned degree() const { return dx + dy; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with x > y: lower total degree first, then the
// larger power of x first. So 1, x, y, x^2, x*y, y^2, x^3, ...
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const
  {
    if (a.degree() != b.degree())
      return a.degree() < b.degree();
    return a.dx > b.dx;
  }
};

/// Sparse polynomial in x and y over the rationals. No stored coefficient is
/// ever zero, so the zero polynomial has no terms.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(const Integer& c) : Polynomial(Rational(c)) {}
  Polynomial(const Rational& c);

  static Polynomial monomial(const Rational& c, unsigned dx, unsigned dy);
  static Polynomial x() { return monomial(1, 1, 0); }
  static Polynomial y() { return monomial(1, 0, 1); }
  static Polynomial var(Var v) { return v == Var::x ? x() : y(); }

  const Terms& terms() const { return terms_; }
  Rational coefficient(unsigned dx, unsigned dy) const;
  Rational constant_term() const { return coefficient(0, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool contains(Var v) const { return degree_in(v) > 0; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(Var v) const;

  Polynomial pow(unsigned e) const;
  Polynomial derivative(Var v) const;

  /// Simultaneous substitution x -> at_x, y -> at_y.
  Polynomial substitute(const Polynomial& at_x, const Polynomial& at_y) const;
  Polynomial swap_xy() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Graded-lex order, explicit signs, '*' between factors, '^' for powers,
  /// e.g. "2 - 2*x - 2*y + x*y".
  std::string str() const;
  /// Same order as str() but in TeX notation, e.g. "2 - 2x - 2y + xy".
  std::string latex() const;

private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Defined only for nonzero constants.
std::optional<Polynomial> try_inverse(const Polynomial& p);
inline std::string to_string(const Polynomial& p) { return p.str(); }

/// q -> q' - q. This is d/dx acting on e^{-x} q(x), written back in the basis e^{-x}.
/// Throws std::invalid_argument when p contains y.
Polynomial rodrigues_step_uni(const Polynomial& p);

/// p -> p_x + p_y - p. The operator d/dx + d/dy acting on e^{-(x+y)/2} p.
Polynomial rodrigues_step_biv(const Polynomial& p);

/// p / v^k. Throws NotDivisibleError if some term has exponent below k in v.
Polynomial exact_divide_by_power(const Polynomial& p, Var v, unsigned k);

} // namespace rlag
