#pragma once

#include <string>
#include <variant>

#include "rlag/polynomial.hpp"
#include "rlag/table.hpp"

namespace rlag {

/// How a Laguerre polynomial was obtained. Routes are cross-checked against
/// each other by the verification harness.
enum class Route { explicit_sum, recurrence, riordan, rodrigues, via_univariate };

std::string to_string(Route r);

struct UniIndex {
  unsigned n = 0;
  unsigned alpha = 0;
  friend bool operator==(const UniIndex&, const UniIndex&) = default;
};

struct BivIndex {
  unsigned n = 0;
  unsigned m = 0;
  friend bool operator==(const BivIndex&, const BivIndex&) = default;
};

/// All constructors produce the integer-coefficient normalization
/// (L_n^{(a)}(0) = n! C(n+a, n)), not L_n/n!.
struct LaguerrePolynomial {
  Polynomial value;
  std::variant<UniIndex, BivIndex> indices;
  Route route = Route::explicit_sum;
};

/// Deliberate corruption of the explicit univariate sum, used to show that the
/// harness can fail. `flip_sign` replaces (-x)^k by x^k.
enum class Mutation { none, flip_sign };

// Univariate L_n^{(alpha)}(x).

/// sum_k n!/k! C(n+alpha, n-k) (-x)^k.
LaguerrePolynomial uni_explicit(unsigned n, unsigned alpha, Mutation mutation = Mutation::none);

/// Three-term recurrence from L_0 = 1, L_1 = alpha + 1 - x.
LaguerrePolynomial uni_recurrence(unsigned n, unsigned alpha);

/// Row n of layer alpha of the exponential signed 3-D Pascal array applied to (x^j).
LaguerrePolynomial uni_riordan(unsigned n, unsigned alpha);

/// e^x x^{-alpha} D^n (e^{-x} x^{n+alpha}).
LaguerrePolynomial uni_rodrigues(unsigned n, unsigned alpha);

// Bivariate L_{n,m}(x, y).

/// Double sum over (i, s) of n! m! / (i! s!) C(m+n, m-i) C(n+i, n-s) (-x)^s (-y)^i.
LaguerrePolynomial biv_explicit(unsigned n, unsigned m);

enum class UniForm {
  x_form, ///< sum_i m!/i! C(m+n, m-i) L_n^{(i)}(x) (-y)^i
  y_form  ///< sum_i n!/i! C(n+m, n-i) L_m^{(i)}(y) (-x)^i
};

LaguerrePolynomial biv_via_uni(unsigned n, unsigned m, UniForm form, Mutation mutation = Mutation::none);

/// e^{(x+y)/2} (d/dx + d/dy)^{n+m} (e^{-(x+y)/2} x^n y^m).
LaguerrePolynomial biv_rodrigues(unsigned n, unsigned m);

/// [L_n^{(k)}(x)] for n < rows, k < cols: the exponential signed Pascal triple
/// bullet the constant family of columns (x^j).
Table<Polynomial> uni_riordan_table(unsigned rows, unsigned cols);

/// table[n][m] = L_{n,m}(x, y) for n <= max_n, m <= max_m, built as
/// [1/(1-t), -ty/(1-t), 1/(1-t)] bullet (uni_riordan_table)^T.
Table<Polynomial> biv_riordan_table(unsigned max_n, unsigned max_m);

} // namespace rlag
