#pragma once

// Seeded random inputs for the property tests. Small coefficients keep the
// exact arithmetic fast; the seed is fixed so failures reproduce.

#include <random>

#include "rlag/polynomial.hpp"
#include "rlag/riordan3.hpp"

namespace gen {

using rlag::Polynomial;
using rlag::Rational;
using rlag::Series;

class Gen {
public:
  explicit Gen(unsigned seed = 20240611) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long span = 5)
  {
    const long num = integer(-span, span);
    const long den = integer(1, 4);
    return Rational(num, den);
  }

  Rational nonzero_rational(long span = 5)
  {
    Rational r;
    while (r.is_zero())
      r = rational(span);
    return r;
  }

  // Up to `terms` monomials of total degree <= max_degree.
  Polynomial polynomial(unsigned terms = 4, unsigned max_degree = 3)
  {
    Polynomial p;
    const long n = integer(0, terms);
    for (long i = 0; i < n; ++i) {
      const unsigned dx = static_cast<unsigned>(integer(0, max_degree));
      const unsigned dy = static_cast<unsigned>(integer(0, max_degree - dx));
      p += Polynomial::monomial(rational(), dx, dy);
    }
    return p;
  }

  Polynomial univariate(unsigned terms = 4, unsigned max_degree = 4)
  {
    Polynomial p;
    const long n = integer(0, terms);
    for (long i = 0; i < n; ++i)
      p += Polynomial::monomial(rational(), static_cast<unsigned>(integer(0, max_degree)), 0);
    return p;
  }

  // Sparse series: each coefficient is nonzero with probability 1/2.
  Series<Rational> series(unsigned order, unsigned start = 0)
  {
    std::vector<Rational> c(order + 1);
    for (unsigned i = start; i <= order; ++i)
      if (integer(0, 1))
        c[i] = rational(3);
    return Series<Rational>(std::move(c));
  }

  // g in F_0 (integer constant term +-1 so that inverses stay integral).
  Series<Rational> unit_series(unsigned order)
  {
    auto s = series(order);
    auto c = s.coefficients();
    c[0] = integer(0, 1) ? 1 : -1;
    return Series<Rational>(std::move(c));
  }

  // f in F_1.
  Series<Rational> f_series(unsigned order)
  {
    auto c = series(order).coefficients();
    c[0] = 0;
    c[1] = integer(0, 1) ? 1 : -1;
    return Series<Rational>(std::move(c));
  }

  Series<Polynomial> poly_series(unsigned order, unsigned start = 0)
  {
    std::vector<Polynomial> c(order + 1);
    for (unsigned i = start; i <= order; ++i)
      c[i] = polynomial(2, 2);
    return Series<Polynomial>(std::move(c));
  }

  // Small integer polynomial series, as used for Riordan pairs.
  Series<Rational> small_integer_series(unsigned order, unsigned nonzero_terms, long span, unsigned start)
  {
    std::vector<Rational> c(order + 1);
    for (unsigned i = start; i < start + nonzero_terms && i <= order; ++i)
      c[i] = integer(-span, span);
    return Series<Rational>(std::move(c));
  }

  rlag::RiordanArray<Rational> riordan(unsigned order, rlag::Flavor flavor = rlag::Flavor::ordinary)
  {
    return {unit_series(order), f_series(order), flavor};
  }

  rlag::RiordanTriple<Rational> triple(unsigned order, rlag::Flavor flavor = rlag::Flavor::ordinary)
  {
    return {unit_series(order), f_series(order), unit_series(order), flavor};
  }

private:
  std::mt19937 rng_;
};

} // namespace gen
