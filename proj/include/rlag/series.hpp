#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rlag/errors.hpp"
#include "rlag/polynomial.hpp"
#include "rlag/rational.hpp"

namespace rlag {

/// Coefficient rings usable inside a Series. Both Rational and Polynomial
/// qualify: they are commutative, contain the rationals, and expose
/// try_inverse() for the units.
template <class R>
concept CoefficientRing = requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { q * a } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { try_inverse(a) } -> std::convertible_to<std::optional<R>>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

/// Formal power series c_0 + c_1 t + ... + c_N t^N known exactly up to and
/// including t^N (the truncation order). Everything past N is unknown, not zero.
template <CoefficientRing R>
class Series {
public:
  /// coeffs must be non-empty; the truncation order is coeffs.size() - 1.
  explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs))
  {
    if (c_.empty())
      throw std::invalid_argument("Series: needs at least one coefficient");
  }

  static Series zero(unsigned order) { return Series(std::vector<R>(order + 1)); }
  static Series constant(const R& c, unsigned order)
  {
    auto s = zero(order);
    s.c_[0] = c;
    return s;
  }
  static Series one(unsigned order) { return constant(R(Rational(1)), order); }
  /// c t^power, truncated at `order`.
  static Series monomial(const R& c, unsigned power, unsigned order)
  {
    auto s = zero(order);
    if (power <= order)
      s.c_[power] = c;
    return s;
  }
  static Series t(unsigned order) { return monomial(R(Rational(1)), 1, order); }

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const std::vector<R>& coefficients() const { return c_; }

  /// [t^n] of the series.
  const R& coeff(unsigned n) const
  {
    if (n > order())
      throw TruncationError("Series::coeff: index " + std::to_string(n) + " beyond truncation order " +
                            std::to_string(order()));
    return c_[n];
  }

  /// Index of the first nonzero coefficient, or nullopt when all known
  /// coefficients vanish.
  std::optional<unsigned> vanishing_order() const
  {
    for (unsigned i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero())
        return i;
    return std::nullopt;
  }

  Series truncate(unsigned order) const
  {
    if (order > this->order())
      throw TruncationError("Series::truncate: cannot extend a truncated series");
    return Series(std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  Series& operator+=(const Series& o)
  {
    shrink_to(o.order());
    for (unsigned i = 0; i < c_.size(); ++i)
      c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o)
  {
    shrink_to(o.order());
    for (unsigned i = 0; i < c_.size(); ++i)
      c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a)
  {
    for (auto& c : a.c_)
      c = -c;
    return a;
  }

  /// Cauchy product truncated to the smaller order.
  friend Series operator*(const Series& a, const Series& b)
  {
    const unsigned n = std::min(a.order(), b.order());
    std::vector<R> out(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero())
        continue;
      for (unsigned j = 0; i + j <= n; ++j)
        if (!b.c_[j].is_zero())
          out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Series(std::move(out));
  }

  /// Coefficient-wise scaling.
  friend Series operator*(const R& k, Series a)
  {
    for (auto& c : a.c_)
      c = k * c;
    return a;
  }

  Series scaled(const Rational& q) const
  {
    Series r = *this;
    for (auto& c : r.c_)
      c = q * c;
    return r;
  }

  Series pow(unsigned e) const
  {
    Series result = one(order());
    Series base = *this;
    while (e > 0) {
      if (e & 1u)
        result = result * base;
      e >>= 1;
      if (e > 0)
        base = base * base;
    }
    return result;
  }

  /// Multiplicative inverse. Throws NonUnitError unless c_0 is a unit.
  Series reciprocal() const
  {
    auto inv0 = try_inverse(c_[0]);
    if (!inv0)
      throw NonUnitError("Series::reciprocal: constant term " + to_string(c_[0]) + " is not a unit");
    std::vector<R> out(c_.size());
    out[0] = *inv0;
    for (unsigned n = 1; n < c_.size(); ++n) {
      R acc{};
      for (unsigned k = 1; k <= n; ++k)
        if (!c_[k].is_zero())
          acc = acc + c_[k] * out[n - k];
      out[n] = -(*inv0 * acc);
    }
    return Series(std::move(out));
  }

  /// this(u). Needs u_0 = 0; the result is truncated to min of both orders.
  Series compose(const Series& u) const
  {
    if (!u.c_[0].is_zero())
      throw NonUnitError("Series::compose: inner series has nonzero constant term " + to_string(u.c_[0]));
    const unsigned n = std::min(order(), u.order());
    const Series inner = u.truncate(n);
    // Horner; ord(u^i) >= i so terms past n never contribute.
    Series acc = constant(c_[n], n);
    for (unsigned i = n; i-- > 0;) {
      acc = acc * inner;
      acc.c_[0] = acc.c_[0] + c_[i];
    }
    return acc;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  /// Debug rendering "c0 + c1*t + c2*t^2 + ...", zero terms omitted.
  std::string str() const
  {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero())
        continue;
      std::string c = to_string(c_[i]);
      const bool compound = c.find_first_of(" /") != std::string::npos;
      if (!first && !compound && c.front() == '-') {
        os << " - ";
        c.erase(0, 1);
      } else if (!first) {
        os << " + ";
      }
      first = false;
      if (i == 0)
        os << c;
      else
        os << (compound ? "(" + c + ")" : c) << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first)
      os << "0";
    os << " + O(t^" << order() + 1 << ")";
    return os.str();
  }

private:
  void shrink_to(unsigned order)
  {
    if (order < this->order())
      c_.resize(order + 1);
  }

  std::vector<R> c_;
};

/// e^u via the recurrence n e_n = sum_{k=1}^{n} k u_k e_{n-k}.
template <CoefficientRing R>
Series<R> exp(const Series<R>& u)
{
  if (!u.coeff(0).is_zero())
    throw NonUnitError("exp: argument has nonzero constant term " + to_string(u.coeff(0)));
  const unsigned n = u.order();
  std::vector<R> e(n + 1);
  e[0] = R(Rational(1));
  for (unsigned i = 1; i <= n; ++i) {
    R acc{};
    for (unsigned k = 1; k <= i; ++k)
      if (!u.coeff(k).is_zero())
        acc = acc + Rational(static_cast<long>(k)) * (u.coeff(k) * e[i - k]);
    e[i] = Rational(1, static_cast<long>(i)) * acc;
  }
  return Series<R>(std::move(e));
}

// Standard series of the Laguerre/Pascal arrays.

/// 1/(1-t)^a.
template <CoefficientRing R>
Series<R> inverse_power_of_one_minus_t(unsigned a, unsigned order)
{
  const auto one_minus_t = Series<R>::one(order) - Series<R>::t(order);
  return one_minus_t.reciprocal().pow(a);
}

/// -t/(1-t).
template <CoefficientRing R>
Series<R> neg_t_over_one_minus_t(unsigned order)
{
  return -(Series<R>::t(order) * inverse_power_of_one_minus_t<R>(1, order));
}

/// -t*y/(1-t).
inline Series<Polynomial> neg_ty_over_one_minus_t(unsigned order)
{
  return Polynomial::y() * neg_t_over_one_minus_t<Polynomial>(order);
}

/// Lifts a rational series into the polynomial ring.
inline Series<Polynomial> to_polynomial_series(const Series<Rational>& s)
{
  std::vector<Polynomial> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coefficients())
    out.emplace_back(c);
  return Series<Polynomial>(std::move(out));
}

/// Truncated power series in two indeterminates s, t with polynomial
/// coefficients, known for all s^i t^j with i + j <= N.
class BiSeries {
public:
  static BiSeries zero(unsigned order);
  static BiSeries constant(const Polynomial& c, unsigned order);
  static BiSeries one(unsigned order) { return constant(Polynomial(1), order); }
  static BiSeries s(unsigned order);
  static BiSeries t(unsigned order);

  unsigned order() const { return order_; }

  /// [s^i t^j]; throws TruncationError when i + j > order().
  const Polynomial& coeff(unsigned i, unsigned j) const;
  bool constant_is_zero() const { return c_[0].is_zero(); }

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator-(const BiSeries& a);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const Polynomial& k, BiSeries a);

  BiSeries reciprocal() const;

  friend bool operator==(const BiSeries& a, const BiSeries& b)
  {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

private:
  explicit BiSeries(unsigned order);
  static std::size_t index(unsigned i, unsigned j);
  Polynomial& at(unsigned i, unsigned j) { return c_[index(i, j)]; }
  void shrink_to(unsigned order);

  unsigned order_ = 0;
  // Packed by total degree d = i + j, then by i within a degree.
  std::vector<Polynomial> c_;
};

/// e^u for a BiSeries with zero constant term: sum of u^i/i! for i <= N.
BiSeries exp(const BiSeries& u);

} // namespace rlag
