#include "rlag/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rlag/errors.hpp"

namespace rlag {

namespace {

// "x^2*y" in plain form, "x^2y" in TeX form.
std::string render_monomial(const Monomial& m, bool tex)
{
  std::string out;
  auto emit = [&](char name, unsigned e) {
    if (e == 0)
      return;
    if (!out.empty() && !tex)
      out += '*';
    out += name;
    if (e > 1) {
      if (tex)
        out += e < 10 ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
      else
        out += "^" + std::to_string(e);
    }
  };
  emit('x', m.dx);
  emit('y', m.dy);
  return out;
}

std::string render_coefficient(const Rational& a, bool tex)
{
  if (!tex || a.is_integer())
    return a.str();
  return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string render(const Polynomial::Terms& terms, bool tex)
{
  if (terms.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    const Rational a = c.abs();
    const std::string mono = render_monomial(m, tex);
    if (mono.empty()) {
      os << render_coefficient(a, tex);
    } else if (a == 1) {
      os << mono;
    } else {
      os << render_coefficient(a, tex) << (tex ? "" : "*") << mono;
    }
  }
  return os.str();
}

} // namespace

Polynomial::Polynomial(const Rational& c)
{
  if (!c.is_zero())
    terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::monomial(const Rational& c, unsigned dx, unsigned dy)
{
  Polynomial p;
  if (!c.is_zero())
    p.terms_.emplace(Monomial{dx, dy}, c);
  return p;
}

Rational Polynomial::coefficient(unsigned dx, unsigned dy) const
{
  auto it = terms_.find(Monomial{dx, dy});
  return it == terms_.end() ? Rational() : it->second;
}

bool Polynomial::is_constant() const
{
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::degree() const
{
  // Graded order: the last term has maximal total degree.
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::degree_in(Var v) const
{
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<int>(v == Var::x ? m.dx : m.dy));
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, a] : terms_)
    a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term(Monomial{ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
  return r;
}

Polynomial operator-(const Polynomial& a)
{
  Polynomial r = a;
  for (auto& [m, c] : r.terms_)
    c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const
{
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u)
      result *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(Var v) const
{
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    const unsigned e = v == Var::x ? m.dx : m.dy;
    if (e == 0)
      continue;
    Monomial dm = m;
    (v == Var::x ? dm.dx : dm.dy) -= 1;
    r.add_term(dm, c * Rational(static_cast<long>(e)));
  }
  return r;
}

Polynomial Polynomial::substitute(const Polynomial& at_x, const Polynomial& at_y) const
{
  // Powers are cached since terms share bases.
  std::map<unsigned, Polynomial> px, py;
  auto power = [](std::map<unsigned, Polynomial>& cache, const Polynomial& base, unsigned e) -> const Polynomial& {
    auto it = cache.find(e);
    if (it == cache.end())
      it = cache.emplace(e, base.pow(e)).first;
    return it->second;
  };
  Polynomial r;
  for (const auto& [m, c] : terms_)
    r += c * (power(px, at_x, m.dx) * power(py, at_y, m.dy));
  return r;
}

Polynomial Polynomial::swap_xy() const
{
  Polynomial r;
  for (const auto& [m, c] : terms_)
    r.terms_.emplace(Monomial{m.dy, m.dx}, c);
  return r;
}

std::string Polynomial::str() const { return render(terms_, false); }
std::string Polynomial::latex() const { return render(terms_, true); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

std::optional<Polynomial> try_inverse(const Polynomial& p)
{
  if (p.is_zero() || !p.is_constant())
    return std::nullopt;
  return Polynomial(p.constant_term().inverse());
}

Polynomial rodrigues_step_uni(const Polynomial& p)
{
  if (p.contains(Var::y))
    throw std::invalid_argument("rodrigues_step_uni: polynomial contains y: " + p.str());
  return p.derivative(Var::x) - p;
}

Polynomial rodrigues_step_biv(const Polynomial& p)
{
  return p.derivative(Var::x) + p.derivative(Var::y) - p;
}

Polynomial exact_divide_by_power(const Polynomial& p, Var v, unsigned k)
{
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = v == Var::x ? m.dx : m.dy;
    if (e < k)
      throw NotDivisibleError("exact_divide_by_power: " + p.str() + " is not divisible by " +
                              (v == Var::x ? "x" : "y") + "^" + std::to_string(k));
    Monomial q = m;
    (v == Var::x ? q.dx : q.dy) -= k;
    r += Polynomial::monomial(c, q.dx, q.dy);
  }
  return r;
}

} // namespace rlag
