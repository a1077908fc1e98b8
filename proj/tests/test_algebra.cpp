#include <gtest/gtest.h>

#include "rlag/errors.hpp"
#include "rlag/polynomial.hpp"
#include "rlag/rational.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rlag;

namespace {

const Polynomial x = Polynomial::x();
const Polynomial y = Polynomial::y();

Polynomial P(long c) { return Polynomial(c); }

} // namespace

TEST(Rational, CanonicalForm)
{
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).str(), "0");
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).denominator(), 1);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rational, Parse)
{
  EXPECT_EQ(Rational::parse("10/-4"), Rational(Integer(-5), Integer(2)));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("3/6").str(), "1/2");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, ArithmeticAndOrder)
{
  const Rational half(Integer(1), Integer(2));
  const Rational third(Integer(1), Integer(3));
  EXPECT_EQ(half + third, Rational(Integer(5), Integer(6)));
  EXPECT_EQ(half - third, Rational(Integer(1), Integer(6)));
  EXPECT_EQ(half * third, Rational(Integer(1), Integer(6)));
  EXPECT_EQ(half / third, Rational(Integer(3), Integer(2)));
  EXPECT_LT(third, half);
  EXPECT_EQ((-half).sign(), -1);
  EXPECT_EQ(half.inverse(), Rational(2));
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_FALSE(try_inverse(Rational(0)).has_value());
}

TEST(Rational, Int64Range)
{
  const Rational big(factorial(25));
  EXPECT_FALSE(big.fits_int64());
  EXPECT_TRUE(Rational(factorial(20)).fits_int64());
  EXPECT_EQ(Rational(factorial(20)).to_int64(), 2432902008176640000LL);
  EXPECT_FALSE(Rational(Integer(1), Integer(2)).fits_int64());
}

TEST(Rational, FactorialAndBinomialAgreeWithOracles)
{
  for (long n = 0; n <= 25; ++n) {
    EXPECT_EQ(factorial(n), oracle::fact(n));
    for (long k = -1; k <= n + 1; ++k)
      EXPECT_EQ(binomial(n, k), oracle::pascal(n, k)) << n << " " << k;
  }
}

TEST(Polynomial, ZeroIsEmpty)
{
  const Polynomial p = x - x;
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
  EXPECT_EQ(p.degree(), -1);
  EXPECT_EQ(p.str(), "0");
}

TEST(Polynomial, ArithmeticExamples)
{
  const Polynomial l11 = P(2) - Rational(2) * x - Rational(2) * y + x * y;
  EXPECT_EQ(l11 + Polynomial(), l11);
  EXPECT_EQ((x - P(2)) * (x - P(6)), x.pow(2) - Rational(8) * x + P(12));
  EXPECT_EQ((P(1) - x) * (P(1) - y), P(1) - x - y + x * y);
  EXPECT_EQ(Rational(3) * x, x + x + x);
}

TEST(Polynomial, GradedLexRendering)
{
  const Polynomial p = -x.pow(2) * y + Rational(3) * x.pow(2) + Rational(6) * x * y - Rational(6) * y -
                       Rational(12) * x + P(6);
  EXPECT_EQ(p.str(), "6 - 12*x - 6*y + 3*x^2 + 6*x*y - x^2*y");
  EXPECT_EQ(p.latex(), "6 - 12x - 6y + 3x^2 + 6xy - x^2y");
  EXPECT_EQ((Rational(Integer(1), Integer(2)) * x.pow(2) - x).str(), "-x + 1/2*x^2");
  EXPECT_EQ((Rational(Integer(-1), Integer(2)) * x).latex(), "-\\frac{1}{2}x");
}

TEST(Polynomial, Degrees)
{
  const Polynomial p = x.pow(3) * y + y.pow(2) + P(1);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.degree_in(Var::x), 3);
  EXPECT_EQ(p.degree_in(Var::y), 2);
  EXPECT_TRUE(p.contains(Var::y));
  EXPECT_FALSE((x + P(1)).contains(Var::y));
  EXPECT_TRUE(P(5).is_constant());
}

TEST(Polynomial, Substitute)
{
  EXPECT_EQ((x * y).substitute(P(1), P(1)), P(1));
  const Polynomial l1 = P(1) - x;
  const Polynomial mid = Rational(Integer(1), Integer(2)) * (x + y);
  EXPECT_EQ(l1.substitute(mid, y), P(1) - mid);
  EXPECT_EQ(x.pow(2).substitute(-x, y), x.pow(2));
  EXPECT_EQ((x + Rational(2) * y).swap_xy(), y + Rational(2) * x);
}

TEST(Polynomial, RodriguesSteps)
{
  EXPECT_EQ(rodrigues_step_uni(P(1)), P(-1));
  EXPECT_EQ(rodrigues_step_uni(x), P(1) - x);
  EXPECT_EQ(rodrigues_step_uni(x.pow(2)), Rational(2) * x - x.pow(2));
  EXPECT_THROW(rodrigues_step_uni(y), std::invalid_argument);

  EXPECT_EQ(rodrigues_step_biv(P(1)), P(-1));
  EXPECT_EQ(rodrigues_step_biv(x * y), y + x - x * y);
  EXPECT_EQ(rodrigues_step_biv(rodrigues_step_biv(x * y)), P(2) - Rational(2) * x - Rational(2) * y + x * y);
}

TEST(Polynomial, ExactDivide)
{
  EXPECT_EQ(exact_divide_by_power(x.pow(3) - Rational(2) * x.pow(2), Var::x, 2), x - P(2));
  EXPECT_EQ(exact_divide_by_power(rodrigues_step_uni(x.pow(2)), Var::x, 1), P(2) - x);
  EXPECT_THROW(exact_divide_by_power(x, Var::x, 2), NotDivisibleError);
  EXPECT_EQ(exact_divide_by_power(x * y.pow(3), Var::y, 3), x);
}

TEST(Polynomial, InverseOnlyForNonzeroConstants)
{
  EXPECT_EQ(*try_inverse(P(4)), Polynomial(Rational(Integer(1), Integer(4))));
  EXPECT_FALSE(try_inverse(x).has_value());
  EXPECT_FALSE(try_inverse(Polynomial()).has_value());
}

TEST(PolynomialProperty, RingAxioms)
{
  gen::Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = g.polynomial(), b = g.polynomial(), c = g.polynomial();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Polynomial());
    EXPECT_EQ(a * P(1), a);
  }
}

TEST(PolynomialProperty, NoStoredZerosAndDegreeConsistency)
{
  gen::Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = g.polynomial() * g.polynomial() - g.polynomial();
    int deg = -1, dx = -1, dy = -1;
    for (const auto& [m, c] : p.terms()) {
      EXPECT_FALSE(c.is_zero());
      deg = std::max(deg, static_cast<int>(m.degree()));
      dx = std::max(dx, static_cast<int>(m.dx));
      dy = std::max(dy, static_cast<int>(m.dy));
    }
    EXPECT_EQ(p.degree(), deg);
    if (!p.is_zero()) {
      EXPECT_EQ(p.degree_in(Var::x), dx);
      EXPECT_EQ(p.degree_in(Var::y), dy);
    }
  }
}

TEST(PolynomialProperty, EvaluationIsAHomomorphism)
{
  gen::Gen g;
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = g.polynomial(), b = g.polynomial();
    const Rational px = g.rational(), py = g.rational();
    EXPECT_EQ(oracle::eval(a * b, px, py), oracle::eval(a, px, py) * oracle::eval(b, px, py));
    EXPECT_EQ((a * b).substitute(px, py), Polynomial(oracle::eval(a * b, px, py)));
  }
}

TEST(PolynomialProperty, RodriguesStepIsLinear)
{
  gen::Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = g.univariate(), q = g.univariate();
    const Rational a = g.rational(), b = g.rational();
    EXPECT_EQ(rodrigues_step_uni(a * p + b * q), a * rodrigues_step_uni(p) + b * rodrigues_step_uni(q));
  }
}

TEST(PolynomialProperty, DivideUndoesMultiply)
{
  gen::Gen g;
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = g.polynomial();
    for (unsigned k = 0; k <= 8; ++k) {
      EXPECT_EQ(exact_divide_by_power(p * x.pow(k), Var::x, k), p);
      EXPECT_EQ(exact_divide_by_power(p * y.pow(k), Var::y, k), p);
    }
  }
}
