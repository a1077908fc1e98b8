#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlag/laguerre.hpp"

namespace rlag::verify {

/// Where a failing check first disagreed.
struct Witness {
  std::vector<long> index;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one exact identity check. A passing report never carries a
/// witness and a failing one always does; use the factories.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, long>> parameters;
  bool passed = true;
  std::optional<Witness> witness;
  std::string note;

  static CheckReport pass(std::string name, std::vector<std::pair<std::string, long>> params, std::string note = {});
  static CheckReport fail(std::string name, std::vector<std::pair<std::string, long>> params, Witness w,
                          std::string note = {});
};

/// sum_n L_n^{(alpha)} t^n/n! against e^{-xt/(1-t)} / (1-t)^{alpha+1} to order N.
CheckReport check_egf_uni(unsigned alpha, unsigned order, Mutation mutation = Mutation::none);

/// sum L_{n,m} s^n/n! t^m/m! against e^{(-sx-ty)/(1-s-t)} / (1-s-t) to total
/// degree N. The note also states whether the form with s and t exchanged
/// against x and y, e^{(-xt-sy)/(1-s-t)} / (1-s-t), matches.
CheckReport check_egf_biv(unsigned order);

/// int_0^inf e^{-x} x^alpha L_n L_m dx through the moments int e^{-x} x^j = j!,
/// compared with n! m! alpha! C(n+alpha, n) delta_{nm}.
CheckReport check_orthogonality(unsigned n, unsigned m, unsigned alpha, Mutation mutation = Mutation::none);

enum class Theorem2Identity {
  sum,            ///< sum C(k,n) L_{n,k-n}(x,y) = 2^k L_k((x+y)/2)
  alternating,    ///< sum (-1)^{k-n} C(k,n) L_{n,k-n}(x,y) = (y-x)^k
  reflected,      ///< sum (-1)^{k-n} C(k,n) L_{n,k-n}(-x,y) = (y+x)^k
  reciprocal      ///< sum x^{k-n} C(k,n) L_{n,k-n}(x,1/x) = L_k(1) (1+x)^k
};

std::string to_string(Theorem2Identity which);
std::optional<Theorem2Identity> theorem2_identity_from_string(const std::string& s);

/// Requires k >= 1.
CheckReport check_theorem2(unsigned k, Theorem2Identity which);

/// The 3-D Riordan product table against the explicit double sum for n <= N, m <= M.
CheckReport check_theorem1(unsigned max_n, unsigned max_m);

/// (1/(1-t)^{1+n}, -t/(1-t)) applied to (L_n^{(k)}(x) y^k / k!)_k against
/// (L_{n,m}(x,y) / m!)_m, both as a matrix-vector product and through the
/// generating function of the column.
CheckReport check_ftra_chain(unsigned n, unsigned max_m, Mutation mutation = Mutation::none);

/// uni_explicit = uni_recurrence = uni_riordan = uni_rodrigues for n <= N, alpha <= A.
CheckReport check_uni_routes(unsigned max_n, unsigned max_alpha, Mutation mutation = Mutation::none);

/// biv_explicit = biv_via_uni (both forms) = biv_rodrigues = riordan table for n, m <= N.
CheckReport check_biv_routes(unsigned max_nm, Mutation mutation = Mutation::none);

/// L_{1,1}, L_{2,1}, L_{1,2}, L_{2,2} through every bivariate route against their known expansions.
CheckReport check_table1(Mutation mutation = Mutation::none);

/// Inclusive index range; empty when lo > hi.
struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
  bool empty() const { return lo > hi; }
};

struct HarnessConfig {
  bool table1 = true;
  Range uni_routes_n{0, 10};
  Range uni_routes_alpha{0, 6};
  Range biv_routes_nm{0, 6};
  std::vector<unsigned> egf_alphas{0, 1, 3, 5};
  unsigned egf_order = 12;
  std::optional<unsigned> egf_biv_order = 8;
  Range orthogonality_nm{0, 5};
  std::vector<unsigned> orthogonality_alphas{0, 1, 2, 3};
  Range theorem2_k{1, 10};
  std::optional<std::pair<unsigned, unsigned>> theorem1 = std::pair{5u, 5u};
  Range ftra_chain_n{0, 2};
  unsigned ftra_chain_m = 5;
  Mutation mutation = Mutation::none;
  /// Restrict to checks with this name (e.g. "theorem2").
  std::optional<std::string> only;

  /// Nothing enabled.
  static HarnessConfig none();
};

/// Names accepted by HarnessConfig::only, in run order.
const std::vector<std::string>& check_names();

/// Runs the configured checks in a fixed order.
std::vector<CheckReport> run_all(const HarnessConfig& config);

bool all_passed(const std::vector<CheckReport>& reports);

std::string to_text(const CheckReport& r);
/// Single-line JSON object.
std::string to_json_line(const CheckReport& r);

} // namespace rlag::verify
