#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rlag/riordan2.hpp"

namespace rlag {

/// 3-D Riordan array (g, f, h) with g, h of order 0 and f of order 1.
/// Entry (i, j, k) is [t^i] g f^j h^k, times i!/j! for the exponential flavor.
/// Layer k is the 2-D array (g h^k, f).
template <CoefficientRing R>
class RiordanTriple {
public:
  RiordanTriple(Series<R> g, Series<R> f, Series<R> h, Flavor flavor = Flavor::ordinary)
      : g_(std::move(g)), f_(std::move(f)), h_(std::move(h)), flavor_(flavor)
  {
    detail::require_order(g_, 0, "RiordanTriple: g");
    detail::require_order(f_, 1, "RiordanTriple: f");
    detail::require_order(h_, 0, "RiordanTriple: h");
  }

  static RiordanTriple identity(unsigned order, Flavor flavor = Flavor::ordinary)
  {
    return RiordanTriple(Series<R>::one(order), Series<R>::t(order), Series<R>::one(order), flavor);
  }

  const Series<R>& g() const { return g_; }
  const Series<R>& f() const { return f_; }
  const Series<R>& h() const { return h_; }
  Flavor flavor() const { return flavor_; }
  unsigned order() const { return std::min({g_.order(), f_.order(), h_.order()}); }

  RiordanArray<R> layer(unsigned k) const { return RiordanArray<R>(g_ * h_.pow(k), f_, flavor_); }

  R entry(unsigned i, unsigned j, unsigned k) const
  {
    if (i > order() || j > order())
      throw TruncationError("RiordanTriple::entry: (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                            std::to_string(k) + ") beyond truncation order " + std::to_string(order()));
    if (j > i)
      return R{};
    const R c = (g_ * f_.pow(j) * h_.pow(k)).coeff(i);
    if (flavor_ == Flavor::ordinary || c.is_zero())
      return c;
    return detail::factorial_ratio(i, j) * c;
  }

  friend bool operator==(const RiordanTriple& a, const RiordanTriple& b)
  {
    return a.flavor_ == b.flavor_ && a.g_ == b.g_ && a.f_ == b.f_ && a.h_ == b.h_;
  }

private:
  Series<R> g_;
  Series<R> f_;
  Series<R> h_;
  Flavor flavor_;
};

/// (g1, f1, h1) * (g2, f2, h2) = (g1 g2(f1), f2(f1), h1 h2(f1)).
template <CoefficientRing R>
RiordanTriple<R> triple_mul(const RiordanTriple<R>& a, const RiordanTriple<R>& b)
{
  if (a.flavor() != b.flavor())
    throw FlavorMismatchError("triple_mul: cannot multiply ordinary and exponential triples");
  return RiordanTriple<R>(a.g() * b.g().compose(a.f()), b.f().compose(a.f()), a.h() * b.h().compose(a.f()),
                          a.flavor());
}

template <CoefficientRing R>
RiordanTriple<R> operator*(const RiordanTriple<R>& a, const RiordanTriple<R>& b)
{
  return triple_mul(a, b);
}

/// (2,1)-multiplication entry: c_{i,j,k} = sum_x a_{i,x,k} b_{x,j,k}. The sum
/// stops at x = i since a is lower triangular in (i, x).
template <CoefficientRing R>
R prod21(const RiordanTriple<R>& a, const RiordanTriple<R>& b, unsigned i, unsigned j, unsigned k)
{
  R sum{};
  for (unsigned x = 0; x <= i; ++x)
    sum = sum + a.entry(i, x, k) * b.entry(x, j, k);
  return sum;
}

/// Indexed family of columns b_0, b_1, ... for the formal bullet product. Each
/// column is either an explicit list of entries or a generating function; a
/// generating function is read as ordinary or exponential to match the triple.
template <CoefficientRing R>
class ColumnFamily {
public:
  using Column = std::variant<std::vector<R>, Series<R>>;

  explicit ColumnFamily(std::vector<Column> columns) : columns_(std::move(columns)) {}

  static ColumnFamily repeated(const Column& c, std::size_t count)
  {
    return ColumnFamily(std::vector<Column>(count, c));
  }

  /// Column k of the family is column k of the table.
  static ColumnFamily from_table(const Table<R>& t)
  {
    std::vector<Column> cols;
    const std::size_t width = t.empty() ? 0 : t[0].size();
    for (std::size_t k = 0; k < width; ++k) {
      std::vector<R> c;
      c.reserve(t.size());
      for (const auto& row : t)
        c.push_back(row[k]);
      cols.emplace_back(std::move(c));
    }
    return ColumnFamily(std::move(cols));
  }

  std::size_t size() const { return columns_.size(); }
  const Column& column(std::size_t k) const { return columns_.at(k); }

  /// First `rows` entries of column k.
  std::vector<R> materialize(std::size_t k, unsigned rows, Flavor flavor) const
  {
    if (k >= columns_.size())
      throw std::out_of_range("ColumnFamily: missing column " + std::to_string(k));
    if (const auto* explicit_column = std::get_if<std::vector<R>>(&columns_[k])) {
      if (explicit_column->size() < rows)
        throw TruncationError("ColumnFamily: column " + std::to_string(k) + " has " +
                              std::to_string(explicit_column->size()) + " entries, " + std::to_string(rows) +
                              " needed");
      return {explicit_column->begin(), explicit_column->begin() + rows};
    }
    const auto& gf = std::get<Series<R>>(columns_[k]);
    if (rows > 0 && gf.order() < rows - 1)
      throw TruncationError("ColumnFamily: generating function of column " + std::to_string(k) +
                            " is truncated too early");
    std::vector<R> out;
    out.reserve(rows);
    for (unsigned n = 0; n < rows; ++n)
      out.push_back(flavor == Flavor::exponential ? Rational(factorial(n)) * gf.coeff(n) : gf.coeff(n));
    return out;
  }

private:
  std::vector<Column> columns_;
};

/// Formal bullet product [L_0(A) b_0, L_1(A) b_1, ...]: column k of the result
/// is layer k of A times column k of the family. Result is rows x family.size().
template <CoefficientRing R>
Table<R> bullet21(const RiordanTriple<R>& a, const ColumnFamily<R>& b, unsigned rows)
{
  if (rows > a.order() + 1)
    throw TruncationError("bullet21: " + std::to_string(rows) + " rows exceed truncation order " +
                          std::to_string(a.order()));
  Table<R> out = make_table<R>(rows, b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    const auto layer = a.layer(static_cast<unsigned>(k)).matrix(rows, rows);
    const auto column = matvec(layer, b.materialize(k, rows, a.flavor()));
    for (unsigned i = 0; i < rows; ++i)
      out[i][k] = column[i];
  }
  return out;
}

/// Fundamental theorem applied to layer k: g h^k (column o f).
template <CoefficientRing R>
Series<R> ftra3(const RiordanTriple<R>& a, const Series<R>& column_gf, unsigned k)
{
  return ftra_apply(a.layer(k), column_gf);
}

/// (1/(1-t), -t/(1-t), 1/(1-t)), the signed 3-D Pascal array.
template <CoefficientRing R>
RiordanTriple<R> signed_pascal_triple(unsigned order, Flavor flavor)
{
  const auto geo = inverse_power_of_one_minus_t<R>(1, order);
  return RiordanTriple<R>(geo, neg_t_over_one_minus_t<R>(order), geo, flavor);
}

/// (1/(1-t), -ty/(1-t), 1/(1-t)).
inline RiordanTriple<Polynomial> signed_pascal_triple_y(unsigned order, Flavor flavor)
{
  const auto geo = inverse_power_of_one_minus_t<Polynomial>(1, order);
  return RiordanTriple<Polynomial>(geo, neg_ty_over_one_minus_t(order), geo, flavor);
}

} // namespace rlag
