#include "rlag/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rlag/exprparse.hpp"
#include "rlag/riordan2.hpp"
#include "rlag/series.hpp"

namespace rlag::verify {

using Params = std::vector<std::pair<std::string, long>>;

CheckReport CheckReport::pass(std::string name, Params params, std::string note)
{
  return CheckReport{std::move(name), std::move(params), true, std::nullopt, std::move(note)};
}

CheckReport CheckReport::fail(std::string name, Params params, Witness w, std::string note)
{
  return CheckReport{std::move(name), std::move(params), false, std::move(w), std::move(note)};
}

namespace {

long as_long(unsigned v) { return static_cast<long>(v); }

Polynomial from_text(const std::string& text) { return expr::eval_expr(expr::parse(text), 0).coeff(0); }

Rational inv_factorial(unsigned n) { return Rational(1, factorial(n)); }

// Compares two coefficient sequences; returns the first mismatching index.
template <class R>
std::optional<Witness> first_mismatch(const std::vector<R>& lhs, const std::vector<R>& rhs)
{
  for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i)
    if (!(lhs[i] == rhs[i]))
      return Witness{{static_cast<long>(i)}, to_string(lhs[i]), to_string(rhs[i])};
  if (lhs.size() != rhs.size())
    return Witness{{static_cast<long>(std::min(lhs.size(), rhs.size()))}, "<length " + std::to_string(lhs.size()) + ">",
                   "<length " + std::to_string(rhs.size()) + ">"};
  return std::nullopt;
}

// Univariate Laurent polynomial in x, used to clear 1/x exactly.
using Laurent = std::map<long, Rational>;

void add_to(Laurent& l, long e, const Rational& c)
{
  if (c.is_zero())
    return;
  auto& slot = l[e];
  slot += c;
  if (slot.is_zero())
    l.erase(e);
}

Laurent to_laurent(const Polynomial& p)
{
  Laurent l;
  for (const auto& [m, c] : p.terms()) {
    if (m.dy != 0)
      throw std::logic_error("to_laurent: expected a polynomial in x only");
    add_to(l, m.dx, c);
  }
  return l;
}

Polynomial shift_to_polynomial(const Laurent& l, long shift)
{
  Polynomial p;
  for (const auto& [e, c] : l) {
    if (e + shift < 0)
      throw std::logic_error("shift_to_polynomial: shift does not clear negative powers");
    p += Polynomial::monomial(c, static_cast<unsigned>(e + shift), 0);
  }
  return p;
}

} // namespace

CheckReport check_egf_uni(unsigned alpha, unsigned order, Mutation mutation)
{
  const Params params{{"alpha", as_long(alpha)}, {"order", as_long(order)}};
  std::vector<Polynomial> lhs;
  for (unsigned n = 0; n <= order; ++n)
    lhs.push_back(inv_factorial(n) * uni_explicit(n, alpha, mutation).value);

  const unsigned o = std::max(order, 1u);
  const auto u = Polynomial::x() * neg_t_over_one_minus_t<Polynomial>(o);
  const auto rhs = exp(u) * inverse_power_of_one_minus_t<Polynomial>(alpha + 1, o);
  const std::vector<Polynomial> rhs_c(rhs.coefficients().begin(), rhs.coefficients().begin() + order + 1);

  if (auto w = first_mismatch(lhs, rhs_c))
    return CheckReport::fail("egf_uni", params, *w, "index is the power of t");
  return CheckReport::pass("egf_uni", params);
}

CheckReport check_egf_biv(unsigned order)
{
  const Params params{{"order", as_long(order)}};
  const unsigned o = order;
  const auto s = BiSeries::s(o);
  const auto t = BiSeries::t(o);
  const auto inv = (BiSeries::one(o) - s - t).reciprocal();
  const Polynomial x = Polynomial::x();
  const Polynomial y = Polynomial::y();
  const auto statement = exp((-x * s) * inv - (y * t) * inv) * inv;
  const auto swapped = exp((-x * t) * inv - (y * s) * inv) * inv;

  std::optional<Witness> statement_w, swapped_w;
  for (unsigned d = 0; d <= o; ++d)
    for (unsigned n = 0; n <= d; ++n) {
      const unsigned m = d - n;
      const Polynomial expected = (inv_factorial(n) * inv_factorial(m)) * biv_explicit(n, m).value;
      if (!statement_w && !(statement.coeff(n, m) == expected))
        statement_w = Witness{{as_long(n), as_long(m)}, expected.str(), statement.coeff(n, m).str()};
      if (!swapped_w && !(swapped.coeff(n, m) == expected))
        swapped_w = Witness{{as_long(n), as_long(m)}, expected.str(), swapped.coeff(n, m).str()};
    }

  auto describe = [](const std::optional<Witness>& w) {
    if (!w)
      return std::string("matches");
    return "differs first at s^" + std::to_string(w->index[0]) + " t^" + std::to_string(w->index[1]);
  };
  const std::string note = "pairing s<->x, t<->y e^{(-sx-ty)/(1-s-t)}: " + describe(statement_w) +
                           "; pairing s<->y, t<->x e^{(-xt-sy)/(1-s-t)}: " + describe(swapped_w);
  if (statement_w)
    return CheckReport::fail("egf_biv", params, *statement_w, note);
  return CheckReport::pass("egf_biv", params, note);
}

CheckReport check_orthogonality(unsigned n, unsigned m, unsigned alpha, Mutation mutation)
{
  const Params params{{"n", as_long(n)}, {"m", as_long(m)}, {"alpha", as_long(alpha)}};
  const Polynomial integrand = Polynomial::monomial(1, alpha, 0) * uni_explicit(n, alpha, mutation).value *
                               uni_explicit(m, alpha, mutation).value;
  Rational value;
  for (const auto& [mono, c] : integrand.terms())
    value += c * Rational(factorial(mono.dx));
  const Rational expected =
      n == m ? Rational(factorial(n) * factorial(m) * factorial(alpha) * binomial(n + alpha, n)) : Rational(0);
  if (value != expected)
    return CheckReport::fail("orthogonality", params,
                             Witness{{as_long(n), as_long(m), as_long(alpha)}, value.str(), expected.str()});
  return CheckReport::pass("orthogonality", params);
}

std::string to_string(Theorem2Identity which)
{
  switch (which) {
  case Theorem2Identity::sum: return "Sum";
  case Theorem2Identity::alternating: return "ASum";
  case Theorem2Identity::reflected: return "xySum";
  case Theorem2Identity::reciprocal: return "xSum";
  }
  return "?";
}

std::optional<Theorem2Identity> theorem2_identity_from_string(const std::string& s)
{
  for (auto w : {Theorem2Identity::sum, Theorem2Identity::alternating, Theorem2Identity::reflected,
                 Theorem2Identity::reciprocal})
    if (to_string(w) == s)
      return w;
  return std::nullopt;
}

CheckReport check_theorem2(unsigned k, Theorem2Identity which)
{
  if (k == 0)
    throw std::invalid_argument("check_theorem2: k must be at least 1");
  const std::string name = "theorem2";
  const Params params{{"k", as_long(k)}};
  const std::string note = to_string(which);
  const Polynomial x = Polynomial::x();
  const Polynomial y = Polynomial::y();

  Polynomial lhs, rhs;
  switch (which) {
  case Theorem2Identity::sum: {
    for (unsigned n = 0; n <= k; ++n)
      lhs += Rational(binomial(k, n)) * biv_explicit(n, k - n).value;
    const Polynomial mid = Rational(1, 2) * (x + y);
    rhs = Rational(Integer(1) << k) * uni_explicit(k, 0).value.substitute(mid, y);
    break;
  }
  case Theorem2Identity::alternating:
  case Theorem2Identity::reflected: {
    const Polynomial at_x = which == Theorem2Identity::reflected ? -x : x;
    for (unsigned n = 0; n <= k; ++n) {
      const Rational sign = (k - n) % 2 == 0 ? 1 : -1;
      lhs += (sign * Rational(binomial(k, n))) * biv_explicit(n, k - n).value.substitute(at_x, y);
    }
    rhs = (which == Theorem2Identity::reflected ? y + x : y - x).pow(k);
    break;
  }
  case Theorem2Identity::reciprocal: {
    // y -> x^{-1} as a Laurent monomial, then both sides are shifted by the
    // same power of x so that no negative exponent remains.
    Laurent left;
    for (unsigned n = 0; n <= k; ++n) {
      const Rational c = Rational(binomial(k, n));
      const Polynomial l = biv_explicit(n, k - n).value;
      for (const auto& [mono, a] : l.terms())
        add_to(left, static_cast<long>(mono.dx) - static_cast<long>(mono.dy) + static_cast<long>(k - n), c * a);
    }
    const Rational lk1 = uni_explicit(k, 0).value.substitute(Polynomial(1), Polynomial(0)).constant_term();
    const Laurent right = to_laurent(lk1 * (Polynomial(1) + x).pow(k));
    long low = 0;
    for (const Laurent* side : std::initializer_list<const Laurent*>{&left, &right})
      if (!side->empty())
        low = std::min(low, side->begin()->first);
    lhs = shift_to_polynomial(left, -low);
    rhs = shift_to_polynomial(right, -low);
    break;
  }
  }

  if (!(lhs == rhs))
    return CheckReport::fail(name, params, Witness{{as_long(k)}, lhs.str(), rhs.str()}, note);
  return CheckReport::pass(name, params, note);
}

CheckReport check_theorem1(unsigned max_n, unsigned max_m)
{
  const Params params{{"max_n", as_long(max_n)}, {"max_m", as_long(max_m)}};
  const auto table = biv_riordan_table(max_n, max_m);
  for (unsigned n = 0; n <= max_n; ++n)
    for (unsigned m = 0; m <= max_m; ++m) {
      const Polynomial expected = biv_explicit(n, m).value;
      if (!(table[n][m] == expected))
        return CheckReport::fail("theorem1", params, Witness{{as_long(n), as_long(m)}, table[n][m].str(), expected.str()});
    }
  return CheckReport::pass("theorem1", params);
}

CheckReport check_ftra_chain(unsigned n, unsigned max_m, Mutation mutation)
{
  const Params params{{"n", as_long(n)}, {"max_m", as_long(max_m)}};
  const unsigned o = std::max(max_m, 1u);
  const RiordanArray<Polynomial> array(inverse_power_of_one_minus_t<Polynomial>(n + 1, o),
                                       neg_t_over_one_minus_t<Polynomial>(o));

  std::vector<Polynomial> column;
  for (unsigned k = 0; k <= o; ++k)
    column.push_back(inv_factorial(k) * (uni_explicit(n, k, mutation).value * Polynomial::monomial(1, 0, k)));
  std::vector<Polynomial> expected;
  for (unsigned m = 0; m <= max_m; ++m)
    expected.push_back(inv_factorial(m) * biv_explicit(n, m).value);

  const auto product = matvec(array.matrix(max_m + 1, max_m + 1),
                              std::vector<Polynomial>(column.begin(), column.begin() + max_m + 1));
  if (auto w = first_mismatch(product, expected))
    return CheckReport::fail("ftra_chain", params, *w, "matrix-vector route; index is m");

  const auto gf = ftra_apply(array, Series<Polynomial>(column));
  const std::vector<Polynomial> via_gf(gf.coefficients().begin(), gf.coefficients().begin() + max_m + 1);
  if (auto w = first_mismatch(via_gf, expected))
    return CheckReport::fail("ftra_chain", params, *w, "generating-function route; index is m");
  return CheckReport::pass("ftra_chain", params);
}

CheckReport check_uni_routes(unsigned max_n, unsigned max_alpha, Mutation mutation)
{
  const Params params{{"max_n", as_long(max_n)}, {"max_alpha", as_long(max_alpha)}};
  using Builder = std::function<LaguerrePolynomial(unsigned, unsigned)>;
  const std::array<Builder, 3> others{uni_recurrence, uni_riordan, uni_rodrigues};
  for (unsigned alpha = 0; alpha <= max_alpha; ++alpha)
    for (unsigned n = 0; n <= max_n; ++n) {
      const Polynomial reference = uni_explicit(n, alpha, mutation).value;
      for (const auto& build : others) {
        const auto other = build(n, alpha);
        if (!(other.value == reference))
          return CheckReport::fail("uni_routes", params,
                                   Witness{{as_long(n), as_long(alpha)}, reference.str(), other.value.str()},
                                   "explicit vs " + to_string(other.route));
      }
    }
  return CheckReport::pass("uni_routes", params);
}

CheckReport check_biv_routes(unsigned max_nm, Mutation mutation)
{
  const Params params{{"max_nm", as_long(max_nm)}};
  const auto table = biv_riordan_table(max_nm, max_nm);
  for (unsigned n = 0; n <= max_nm; ++n)
    for (unsigned m = 0; m <= max_nm; ++m) {
      const Polynomial reference = biv_explicit(n, m).value;
      const std::array<std::pair<const char*, Polynomial>, 4> routes{{
          {"via-univariate x-form", biv_via_uni(n, m, UniForm::x_form, mutation).value},
          {"via-univariate y-form", biv_via_uni(n, m, UniForm::y_form, mutation).value},
          {"rodrigues", biv_rodrigues(n, m).value},
          {"riordan", table[n][m]},
      }};
      for (const auto& [route, value] : routes)
        if (!(value == reference))
          return CheckReport::fail("biv_routes", params, Witness{{as_long(n), as_long(m)}, reference.str(), value.str()},
                                   std::string("explicit vs ") + route);
    }
  return CheckReport::pass("biv_routes", params);
}

CheckReport check_table1(Mutation mutation)
{
  struct Entry {
    unsigned n, m;
    const char* text;
  };
  static constexpr std::array<Entry, 4> table{{
      {1, 1, "2 - 2*x - 2*y + x*y"},
      {2, 1, "6 - 6*y - 12*x + 6*x*y + 3*x^2 - x^2*y"},
      {1, 2, "6 - 6*x - 12*y + 6*x*y + 3*y^2 - x*y^2"},
      {2, 2, "24 - 48*x + 12*x^2 - 48*y + 48*x*y - 8*x^2*y + 12*y^2 - 8*x*y^2 + x^2*y^2"},
  }};
  const auto riordan = biv_riordan_table(2, 2);
  for (const auto& e : table) {
    const Polynomial golden = from_text(e.text);
    const std::array<std::pair<const char*, Polynomial>, 5> routes{{
        {"explicit", biv_explicit(e.n, e.m).value},
        {"via-univariate x-form", biv_via_uni(e.n, e.m, UniForm::x_form, mutation).value},
        {"via-univariate y-form", biv_via_uni(e.n, e.m, UniForm::y_form, mutation).value},
        {"rodrigues", biv_rodrigues(e.n, e.m).value},
        {"riordan", riordan[e.n][e.m]},
    }};
    for (const auto& [route, value] : routes)
      if (!(value == golden))
        return CheckReport::fail("table1", {}, Witness{{as_long(e.n), as_long(e.m)}, value.str(), golden.str()},
                                 std::string("route ") + route);
  }
  return CheckReport::pass("table1", {});
}

HarnessConfig HarnessConfig::none()
{
  HarnessConfig c;
  c.table1 = false;
  c.uni_routes_n = {1, 0};
  c.uni_routes_alpha = {1, 0};
  c.biv_routes_nm = {1, 0};
  c.egf_alphas.clear();
  c.egf_biv_order.reset();
  c.orthogonality_nm = {1, 0};
  c.orthogonality_alphas.clear();
  c.theorem2_k = {1, 0};
  c.theorem1.reset();
  c.ftra_chain_n = {1, 0};
  return c;
}

const std::vector<std::string>& check_names()
{
  static const std::vector<std::string> names{"table1",        "uni_routes", "biv_routes", "egf_uni",   "egf_biv",
                                              "orthogonality", "theorem2",   "theorem1",   "ftra_chain"};
  return names;
}

std::vector<CheckReport> run_all(const HarnessConfig& c)
{
  if (c.only && std::find(check_names().begin(), check_names().end(), *c.only) == check_names().end())
    throw std::invalid_argument("run_all: unknown check '" + *c.only + "'");
  auto enabled = [&](const char* name) { return !c.only || *c.only == name; };
  const Mutation mut = c.mutation;
  std::vector<CheckReport> out;

  if (enabled("table1") && c.table1)
    out.push_back(check_table1(mut));
  if (enabled("uni_routes") && !c.uni_routes_n.empty() && !c.uni_routes_alpha.empty())
    out.push_back(check_uni_routes(c.uni_routes_n.hi, c.uni_routes_alpha.hi, mut));
  if (enabled("biv_routes") && !c.biv_routes_nm.empty())
    out.push_back(check_biv_routes(c.biv_routes_nm.hi, mut));
  if (enabled("egf_uni"))
    for (unsigned a : c.egf_alphas)
      out.push_back(check_egf_uni(a, c.egf_order, mut));
  if (enabled("egf_biv") && c.egf_biv_order)
    out.push_back(check_egf_biv(*c.egf_biv_order));
  if (enabled("orthogonality") && !c.orthogonality_nm.empty())
    for (unsigned a : c.orthogonality_alphas)
      for (unsigned n = c.orthogonality_nm.lo; n <= c.orthogonality_nm.hi; ++n)
        for (unsigned m = c.orthogonality_nm.lo; m <= c.orthogonality_nm.hi; ++m)
          out.push_back(check_orthogonality(n, m, a, mut));
  if (enabled("theorem2") && !c.theorem2_k.empty())
    for (unsigned k = std::max(c.theorem2_k.lo, 1u); k <= c.theorem2_k.hi; ++k)
      for (auto w : {Theorem2Identity::sum, Theorem2Identity::alternating, Theorem2Identity::reflected,
                     Theorem2Identity::reciprocal})
        out.push_back(check_theorem2(k, w));
  if (enabled("theorem1") && c.theorem1)
    out.push_back(check_theorem1(c.theorem1->first, c.theorem1->second));
  if (enabled("ftra_chain") && !c.ftra_chain_n.empty())
    for (unsigned n = c.ftra_chain_n.lo; n <= c.ftra_chain_n.hi; ++n)
      out.push_back(check_ftra_chain(n, c.ftra_chain_m, mut));
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports)
{
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

std::string to_text(const CheckReport& r)
{
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name;
  for (const auto& [k, v] : r.parameters)
    os << ' ' << k << '=' << v;
  if (!r.note.empty())
    os << " [" << r.note << ']';
  if (r.witness) {
    os << "\n  at (";
    for (std::size_t i = 0; i < r.witness->index.size(); ++i)
      os << (i ? ", " : "") << r.witness->index[i];
    os << "): lhs = " << r.witness->lhs << "\n        rhs = " << r.witness->rhs;
  }
  return os.str();
}

std::string to_json_line(const CheckReport& r)
{
  nlohmann::ordered_json j;
  j["check"] = r.name;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters)
    j["parameters"][k] = v;
  j["status"] = r.passed ? "pass" : "fail";
  if (r.witness)
    j["witness"] = {{"index", r.witness->index}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  else
    j["witness"] = nullptr;
  if (!r.note.empty())
    j["note"] = r.note;
  return j.dump();
}

} // namespace rlag::verify
