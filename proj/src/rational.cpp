#include "rlag/rational.hpp"

#include <limits>
#include <stdexcept>

namespace rlag {

Rational::Rational(const Integer& num, const Integer& den)
{
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
  auto parse_int = [](std::string_view s) {
    if (s.empty())
      throw std::invalid_argument("Rational::parse: empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
      throw std::invalid_argument("Rational::parse: sign without digits");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::inverse() const
{
  if (is_zero())
    throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational Rational::abs() const
{
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

bool Rational::fits_int64() const
{
  if (!is_integer())
    return false;
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
  const Integer& n = q_.get_num();
  return n >= lo && n <= hi;
}

std::int64_t Rational::to_int64() const
{
  if (!fits_int64())
    throw std::overflow_error("Rational: value does not fit in int64");
  return std::stoll(q_.get_num().get_str());
}

std::string Rational::str() const
{
  if (is_integer())
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a)
{
  Rational r;
  r.q_ = -a.q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> try_inverse(const Rational& r)
{
  if (r.is_zero())
    return std::nullopt;
  return r.inverse();
}

Integer factorial(unsigned long n)
{
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long a, long b)
{
  if (b < 0 || b > a)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

} // namespace rlag
