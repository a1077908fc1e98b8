#pragma once

#include <string>
#include <utility>

#include "rlag/errors.hpp"
#include "rlag/series.hpp"
#include "rlag/table.hpp"

namespace rlag {

enum class Flavor { ordinary, exponential };

inline const char* to_string(Flavor f) { return f == Flavor::ordinary ? "ordinary" : "exponential"; }

namespace detail {

template <CoefficientRing R>
void require_order(const Series<R>& s, unsigned expected, const char* what)
{
  auto v = s.vanishing_order();
  if (!v || *v != expected)
    throw std::invalid_argument(std::string(what) + " must have order " + std::to_string(expected) +
                                ", got " + (v ? std::to_string(*v) : std::string("zero series")));
}

// n!/k! as a rational.
inline Rational factorial_ratio(unsigned n, unsigned k) { return Rational(factorial(n), factorial(k)); }

} // namespace detail

/// Riordan array (g, f): entry (n, k) is [t^n] g f^k, scaled by n!/k! for the
/// exponential flavor. The scaling is applied at access time only, so the group
/// law is the same for both flavors.
template <CoefficientRing R>
class RiordanArray {
public:
  /// Requires g of order 0 and f of order 1.
  RiordanArray(Series<R> g, Series<R> f, Flavor flavor = Flavor::ordinary)
      : g_(std::move(g)), f_(std::move(f)), flavor_(flavor)
  {
    detail::require_order(g_, 0, "RiordanArray: g");
    detail::require_order(f_, 1, "RiordanArray: f");
  }

  static RiordanArray identity(unsigned order, Flavor flavor = Flavor::ordinary)
  {
    return RiordanArray(Series<R>::one(order), Series<R>::t(order), flavor);
  }

  const Series<R>& g() const { return g_; }
  const Series<R>& f() const { return f_; }
  Flavor flavor() const { return flavor_; }
  unsigned order() const { return std::min(g_.order(), f_.order()); }

  R entry(unsigned n, unsigned k) const
  {
    check_index(n, k);
    if (k > n)
      return R{};
    return scale(n, k, (g_ * f_.pow(k)).coeff(n));
  }

  /// rows x cols lower-triangular table; rows, cols <= order() + 1.
  Table<R> matrix(unsigned rows, unsigned cols) const
  {
    if (rows > order() + 1 || cols > order() + 1)
      throw TruncationError("RiordanArray::matrix: " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds truncation order " + std::to_string(order()));
    Table<R> m = make_table<R>(rows, cols);
    Series<R> column = g_.truncate(order());
    for (unsigned k = 0; k < cols; ++k) {
      for (unsigned n = k; n < rows; ++n)
        m[n][k] = scale(n, k, column.coeff(n));
      column = column * f_;
    }
    return m;
  }

private:
  void check_index(unsigned n, unsigned k) const
  {
    if (n > order() || k > order())
      throw TruncationError("RiordanArray::entry: (" + std::to_string(n) + ", " + std::to_string(k) +
                            ") beyond truncation order " + std::to_string(order()));
  }

  R scale(unsigned n, unsigned k, const R& c) const
  {
    if (flavor_ == Flavor::ordinary || c.is_zero())
      return c;
    return detail::factorial_ratio(n, k) * c;
  }

  Series<R> g_;
  Series<R> f_;
  Flavor flavor_;
};

/// Group law (g1, f1)(g2, f2) = (g1 * g2(f1), f2(f1)).
template <CoefficientRing R>
RiordanArray<R> riordan_mul(const RiordanArray<R>& a, const RiordanArray<R>& b)
{
  if (a.flavor() != b.flavor())
    throw FlavorMismatchError("riordan_mul: cannot multiply ordinary and exponential arrays");
  return RiordanArray<R>(a.g() * b.g().compose(a.f()), b.f().compose(a.f()), a.flavor());
}

template <CoefficientRing R>
RiordanArray<R> operator*(const RiordanArray<R>& a, const RiordanArray<R>& b)
{
  return riordan_mul(a, b);
}

/// Fundamental theorem: (g, f) applied to a column with generating function
/// A(t) has generating function g * A(f). For exponential arrays both sides are
/// exponential generating functions.
template <CoefficientRing R>
Series<R> ftra_apply(const RiordanArray<R>& a, const Series<R>& column_gf)
{
  return a.g() * column_gf.compose(a.f());
}

} // namespace rlag
