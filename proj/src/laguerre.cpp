#include "rlag/laguerre.hpp"

#include <algorithm>

#include "rlag/riordan3.hpp"

namespace rlag {

namespace {

Rational ratio(unsigned n, unsigned k) { return Rational(factorial(n), factorial(k)); }

Rational binom(long a, long b) { return Rational(binomial(a, b)); }

Polynomial x_pow(unsigned k) { return Polynomial::monomial(1, k, 0); }

// (-v)^k as a monomial.
Polynomial neg_pow(Var v, unsigned k)
{
  const Rational sign = k % 2 == 0 ? 1 : -1;
  return v == Var::x ? Polynomial::monomial(sign, k, 0) : Polynomial::monomial(sign, 0, k);
}

// Series order used for arrays that must expose `rows` rows. f in F_1 needs at
// least the t^1 coefficient.
unsigned series_order_for(unsigned rows) { return std::max(rows, 2u) - 1; }

} // namespace

std::string to_string(Route r)
{
  switch (r) {
  case Route::explicit_sum: return "explicit";
  case Route::recurrence: return "recurrence";
  case Route::riordan: return "riordan";
  case Route::rodrigues: return "rodrigues";
  case Route::via_univariate: return "via-univariate";
  }
  return "unknown";
}

LaguerrePolynomial uni_explicit(unsigned n, unsigned alpha, Mutation mutation)
{
  Polynomial p;
  for (unsigned k = 0; k <= n; ++k) {
    const Polynomial power = mutation == Mutation::flip_sign ? x_pow(k) : neg_pow(Var::x, k);
    p += (ratio(n, k) * binom(n + alpha, n - k)) * power;
  }
  return {p, UniIndex{n, alpha}, Route::explicit_sum};
}

LaguerrePolynomial uni_recurrence(unsigned n, unsigned alpha)
{
  const Polynomial x = Polynomial::x();
  const Rational a = static_cast<long>(alpha);
  Polynomial prev(1);
  if (n == 0)
    return {prev, UniIndex{n, alpha}, Route::recurrence};
  Polynomial cur = Polynomial(a + 1) - x;
  for (unsigned j = 1; j < n; ++j) {
    const Rational jj = static_cast<long>(j);
    Polynomial next = (Polynomial(2 * jj + 1 + a) - x) * cur - (jj * jj + a * jj) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur, UniIndex{n, alpha}, Route::recurrence};
}

LaguerrePolynomial uni_riordan(unsigned n, unsigned alpha)
{
  const auto pascal = signed_pascal_triple<Polynomial>(series_order_for(n + 1), Flavor::exponential);
  const auto layer = pascal.layer(alpha).matrix(n + 1, n + 1);
  Polynomial p;
  for (unsigned j = 0; j <= n; ++j)
    p += layer[n][j] * x_pow(j);
  return {p, UniIndex{n, alpha}, Route::riordan};
}

LaguerrePolynomial uni_rodrigues(unsigned n, unsigned alpha)
{
  Polynomial p = x_pow(n + alpha);
  for (unsigned i = 0; i < n; ++i)
    p = rodrigues_step_uni(p);
  return {exact_divide_by_power(p, Var::x, alpha), UniIndex{n, alpha}, Route::rodrigues};
}

LaguerrePolynomial biv_explicit(unsigned n, unsigned m)
{
  Polynomial p;
  const Rational nm = Rational(factorial(n) * factorial(m));
  for (unsigned i = 0; i <= m; ++i)
    for (unsigned s = 0; s <= n; ++s) {
      const Rational c = nm / Rational(factorial(i) * factorial(s)) * binom(m + n, static_cast<long>(m) - i) *
                         binom(n + i, static_cast<long>(n) - s);
      p += c * (neg_pow(Var::x, s) * neg_pow(Var::y, i));
    }
  return {p, BivIndex{n, m}, Route::explicit_sum};
}

LaguerrePolynomial biv_via_uni(unsigned n, unsigned m, UniForm form, Mutation mutation)
{
  Polynomial p;
  if (form == UniForm::x_form) {
    for (unsigned i = 0; i <= m; ++i)
      p += (ratio(m, i) * binom(m + n, static_cast<long>(m) - i)) *
           (uni_explicit(n, i, mutation).value * neg_pow(Var::y, i));
  } else {
    for (unsigned i = 0; i <= n; ++i)
      p += (ratio(n, i) * binom(n + m, static_cast<long>(n) - i)) *
           (uni_explicit(m, i, mutation).value.swap_xy() * neg_pow(Var::x, i));
  }
  return {p, BivIndex{n, m}, Route::via_univariate};
}

LaguerrePolynomial biv_rodrigues(unsigned n, unsigned m)
{
  Polynomial p = Polynomial::monomial(1, n, m);
  for (unsigned i = 0; i < n + m; ++i)
    p = rodrigues_step_biv(p);
  return {p, BivIndex{n, m}, Route::rodrigues};
}

Table<Polynomial> uni_riordan_table(unsigned rows, unsigned cols)
{
  const auto pascal = signed_pascal_triple<Polynomial>(series_order_for(rows), Flavor::exponential);
  std::vector<Polynomial> powers;
  for (unsigned j = 0; j < rows; ++j)
    powers.push_back(x_pow(j));
  return bullet21(pascal, ColumnFamily<Polynomial>::repeated(powers, cols), rows);
}

Table<Polynomial> biv_riordan_table(unsigned max_n, unsigned max_m)
{
  // inner[n][k] = L_n^{(k)}(x); column n of its transpose is (L_n^{(k)})_k.
  const auto inner = uni_riordan_table(max_n + 1, max_m + 1);
  const auto family = ColumnFamily<Polynomial>::from_table(transpose(inner));
  const auto outer = signed_pascal_triple_y(series_order_for(max_m + 1), Flavor::exponential);
  // Column n of the bullet product holds (L_{n,m})_m, so transpose to index by n first.
  return transpose(bullet21(outer, family, max_m + 1));
}

} // namespace rlag
