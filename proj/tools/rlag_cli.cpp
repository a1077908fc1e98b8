// Command-line front end: Laguerre polynomials, Riordan arrays from textual
// (g, f[, h]) specifications, the L_{n,m} table and the identity harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rlag/exprparse.hpp"
#include "rlag/format.hpp"
#include "rlag/laguerre.hpp"
#include "rlag/riordan3.hpp"
#include "rlag/verify.hpp"

namespace {

using namespace rlag;

constexpr unsigned kDefaultTruncation = 16;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_truncation()
{
  if (const char* env = std::getenv("RLAG_TRUNCATION")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("RLAG_TRUNCATION is not a non-negative integer: ") + env);
    }
  }
  return kDefaultTruncation;
}

// Truncation must cover the largest requested index + 1. An explicit value
// that is too small is an error; the default is raised as needed.
unsigned truncation_for(std::optional<unsigned> requested, unsigned max_index)
{
  if (requested) {
    if (*requested < max_index + 1)
      throw UsageError("--trunc " + std::to_string(*requested) + " is below the required " +
                       std::to_string(max_index + 1));
    return *requested;
  }
  return std::max(default_truncation(), max_index + 1);
}

Flavor flavor_from(const std::string& s)
{
  if (s == "ordinary")
    return Flavor::ordinary;
  if (s == "exponential")
    return Flavor::exponential;
  throw UsageError("unknown flavor '" + s + "'");
}

Series<Polynomial> eval_arg(const char* flag, const std::string& text, unsigned order)
{
  try {
    return expr::eval_expr(expr::parse(text), order);
  } catch (const expr::ParseError& e) {
    throw UsageError(std::string(flag) + " \"" + text + "\": " + e.what());
  } catch (const expr::EvalError& e) {
    throw UsageError(std::string(flag) + " \"" + text + "\": " + e.what());
  }
}

void emit(const std::string& out_path, const std::string& content)
{
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open output file " + out_path);
  f << content;
}

std::string polynomial_output(const Polynomial& p, format::Output out, nlohmann::ordered_json meta)
{
  switch (out) {
  case format::Output::json:
    meta["polynomial"] = p.str();
    return meta.dump() + "\n";
  case format::Output::latex:
    return p.latex() + "\n";
  default:
    return p.str() + "\n";
  }
}

LaguerrePolynomial uni_by_route(unsigned n, unsigned alpha, const std::string& route)
{
  if (route == "explicit")
    return uni_explicit(n, alpha);
  if (route == "recurrence")
    return uni_recurrence(n, alpha);
  if (route == "riordan")
    return uni_riordan(n, alpha);
  if (route == "rodrigues")
    return uni_rodrigues(n, alpha);
  throw UsageError("unknown univariate route '" + route + "'");
}

LaguerrePolynomial biv_by_route(unsigned n, unsigned m, const std::string& route)
{
  if (route == "explicit")
    return biv_explicit(n, m);
  if (route == "via-uni-x")
    return biv_via_uni(n, m, UniForm::x_form);
  if (route == "via-uni-y")
    return biv_via_uni(n, m, UniForm::y_form);
  if (route == "rodrigues")
    return biv_rodrigues(n, m);
  if (route == "riordan")
    return {biv_riordan_table(n, m)[n][m], BivIndex{n, m}, Route::riordan};
  throw UsageError("unknown bivariate route '" + route + "'");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact Riordan arrays and Laguerre polynomials"};
  app.require_subcommand(1);

  std::string fmt = "text";
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "text | json | csv | latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    sub->add_option("-o,--output", out_path, "Write to this file instead of standard output");
  };

  // uni
  unsigned uni_n = 0, uni_alpha = 0;
  std::string uni_route = "explicit";
  auto* uni = app.add_subcommand("uni", "Print L_n^(alpha)(x)");
  uni->add_option("--n", uni_n)->required();
  uni->add_option("--alpha", uni_alpha)->required();
  uni->add_option("--route", uni_route, "explicit | recurrence | riordan | rodrigues");
  add_common(uni);

  // biv
  unsigned biv_n = 0, biv_m = 0;
  std::string biv_route = "explicit";
  auto* biv = app.add_subcommand("biv", "Print L_{n,m}(x,y)");
  biv->add_option("--n", biv_n)->required();
  biv->add_option("--m", biv_m)->required();
  biv->add_option("--route", biv_route, "explicit | via-uni-x | via-uni-y | rodrigues | riordan");
  add_common(biv);

  // array
  std::string g_text, f_text, h_text, flavor_text = "ordinary";
  std::optional<unsigned> layer, layers, trunc;
  unsigned rows = 0, cols = 0;
  auto* array = app.add_subcommand("array", "Print a Riordan array or one layer of a 3-D Riordan array");
  array->set_help_flag("--help", "Print this help message and exit");
  array->add_option("--g", g_text, "g(t)")->required();
  array->add_option("--f", f_text, "f(t)")->required();
  auto* h_opt = array->add_option("--h", h_text, "h(t); makes the array three-dimensional");
  array->add_option("--flavor", flavor_text, "ordinary | exponential");
  auto* layer_opt = array->add_option("--layer", layer, "Layer k of the 3-D array (default 0)")->needs(h_opt);
  array->add_option("--layers", layers, "Emit layers 0..K of the 3-D array")->needs(h_opt)->excludes(layer_opt);
  std::string apply_text;
  std::vector<std::string> column_text;
  auto* apply_opt = array->add_option("--apply", apply_text,
                                      "Apply the array to the column with this generating function (EGF when exponential)");
  array->add_option("--column", column_text, "Multiply by this column of polynomials (comma separated)")
      ->delimiter(',')
      ->excludes(apply_opt);
  array->add_option("--rows", rows)->required();
  array->add_option("--cols", cols)->required();
  array->add_option("--trunc", trunc, "Series truncation order (default $RLAG_TRUNCATION or 16)");
  add_common(array);

  // table
  unsigned table_rows = 0, table_cols = 0;
  auto* table = app.add_subcommand("table", "Print [L_{n,m}(x,y)] for n < rows, m < cols");
  table->add_option("--rows", table_rows)->required();
  table->add_option("--cols", table_cols)->required();
  add_common(table);

  // verify
  verify::HarnessConfig config;
  std::optional<std::string> only;
  std::optional<unsigned> max_n, max_alpha, max_m, max_k, order;
  bool mutate = false;
  auto* ver = app.add_subcommand("verify", "Run the exact identity harness");
  ver->add_option("--only", only, "Run only this check")->check(CLI::IsMember(verify::check_names()));
  ver->add_option("--max-n", max_n, "Largest n for the univariate route check");
  ver->add_option("--max-alpha", max_alpha, "Largest alpha for the univariate route check");
  ver->add_option("--max-m", max_m, "Largest n and m for the bivariate route check");
  ver->add_option("--max-k", max_k, "Largest k for the four summation identities");
  ver->add_option("--order", order, "Truncation order of the univariate generating-function check");
  ver->add_flag("--mutate", mutate, "Flip the sign of x in the explicit univariate sum");
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every other parse failure is a usage error.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const auto out = format::output_from_string(fmt);

    if (*uni) {
      const auto p = uni_by_route(uni_n, uni_alpha, uni_route);
      nlohmann::ordered_json meta{{"n", uni_n}, {"alpha", uni_alpha}, {"route", to_string(p.route)}};
      emit(out_path, polynomial_output(p.value, out, meta));
      return 0;
    }

    if (*biv) {
      const auto p = biv_by_route(biv_n, biv_m, biv_route);
      nlohmann::ordered_json meta{{"n", biv_n}, {"m", biv_m}, {"route", to_string(p.route)}};
      emit(out_path, polynomial_output(p.value, out, meta));
      return 0;
    }

    if (*array) {
      if (rows == 0 || cols == 0)
        throw UsageError("--rows and --cols must be positive");
      const unsigned order = truncation_for(trunc, std::max(rows, cols) - 1);
      const Flavor flavor = flavor_from(flavor_text);
      const auto g = eval_arg("--g", g_text, order);
      const auto f = eval_arg("--f", f_text, order);
      std::optional<RiordanTriple<Polynomial>> triple;
      if (!h_text.empty())
        triple.emplace(g, f, eval_arg("--h", h_text, order), flavor);
      if (!triple || !layers) {
        const RiordanArray<Polynomial> a =
            triple ? triple->layer(layer.value_or(0)) : RiordanArray<Polynomial>(g, f, flavor);
        if (!apply_text.empty()) {
          const auto result = ftra_apply(a, eval_arg("--apply", apply_text, order));
          Table<Polynomial> column;
          for (unsigned n = 0; n < rows; ++n)
            column.push_back({flavor == Flavor::exponential ? Rational(factorial(n)) * result.coeff(n)
                                                            : result.coeff(n)});
          emit(out_path, format::table(column, out));
        } else if (!column_text.empty()) {
          if (column_text.size() != cols)
            throw UsageError("--column has " + std::to_string(column_text.size()) + " entries, expected --cols " +
                             std::to_string(cols));
          std::vector<Polynomial> v;
          for (const auto& e : column_text)
            v.push_back(eval_arg("--column", e, 0).coeff(0));
          Table<Polynomial> column;
          for (auto& p : matvec(a.matrix(rows, cols), v))
            column.push_back({std::move(p)});
          emit(out_path, format::table(column, out));
        } else {
          emit(out_path, format::table(a.matrix(rows, cols), out));
        }
        return 0;
      }
      if (!apply_text.empty() || !column_text.empty())
        throw UsageError("--apply and --column need a single layer");
      const auto& a = *triple;
      std::vector<Table<Polynomial>> stack;
      for (unsigned k = 0; k <= *layers; ++k)
        stack.push_back(a.layer(k).matrix(rows, cols));
      if (out == format::Output::json) {
        emit(out_path, format::layers_json(stack));
      } else {
        std::string text;
        for (unsigned k = 0; k < stack.size(); ++k)
          text += (k ? "\n" : "") + std::string(out == format::Output::latex ? "% " : "# ") + "layer " +
                  std::to_string(k) + "\n" + format::table(stack[k], out);
        emit(out_path, text);
      }
      return 0;
    }

    if (*table) {
      if (table_rows == 0 || table_cols == 0)
        throw UsageError("--rows and --cols must be positive");
      emit(out_path, format::table(biv_riordan_table(table_rows - 1, table_cols - 1), out));
      return 0;
    }

    if (*ver) {
      config.only = only;
      if (max_n)
        config.uni_routes_n.hi = *max_n;
      if (max_alpha)
        config.uni_routes_alpha.hi = *max_alpha;
      if (max_m)
        config.biv_routes_nm.hi = *max_m;
      if (max_k)
        config.theorem2_k.hi = *max_k;
      if (order)
        config.egf_order = *order;
      if (mutate)
        config.mutation = Mutation::flip_sign;
      const auto reports = verify::run_all(config);
      std::ostringstream os;
      std::size_t failed = 0;
      for (const auto& r : reports) {
        os << (out == format::Output::json ? verify::to_json_line(r) : verify::to_text(r)) << '\n';
        failed += r.passed ? 0 : 1;
      }
      if (out != format::Output::json)
        os << reports.size() - failed << " passed, " << failed << " failed\n";
      emit(out_path, os.str());
      return failed == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
