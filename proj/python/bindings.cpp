#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rlag/exprparse.hpp"
#include "rlag/laguerre.hpp"
#include "rlag/riordan3.hpp"
#include "rlag/verify.hpp"

namespace py = pybind11;
using namespace rlag;

namespace {

py::object fraction(const Rational& r)
{
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::str(r.str()));
}

Rational rational_from(const py::handle& v)
{
  if (py::isinstance<py::bool_>(v))
    throw py::type_error("expected int, Fraction or str");
  if (py::isinstance<py::int_>(v) || py::isinstance<py::str>(v))
    return Rational::parse(py::str(v).cast<std::string>());
  if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator"))
    return Rational::parse(py::str(v.attr("numerator")).cast<std::string>() + "/" +
                           py::str(v.attr("denominator")).cast<std::string>());
  throw py::type_error("expected int, Fraction or str");
}

Flavor flavor_from(const std::string& s)
{
  if (s == "ordinary")
    return Flavor::ordinary;
  if (s == "exponential")
    return Flavor::exponential;
  throw py::value_error("unknown flavor '" + s + "'");
}

Polynomial univariate(unsigned n, unsigned alpha, const std::string& route)
{
  if (route == "explicit")
    return uni_explicit(n, alpha).value;
  if (route == "recurrence")
    return uni_recurrence(n, alpha).value;
  if (route == "riordan")
    return uni_riordan(n, alpha).value;
  if (route == "rodrigues")
    return uni_rodrigues(n, alpha).value;
  throw py::value_error("unknown univariate route '" + route + "'");
}

Polynomial bivariate(unsigned n, unsigned m, const std::string& route)
{
  if (route == "explicit")
    return biv_explicit(n, m).value;
  if (route == "via-uni-x")
    return biv_via_uni(n, m, UniForm::x_form).value;
  if (route == "via-uni-y")
    return biv_via_uni(n, m, UniForm::y_form).value;
  if (route == "rodrigues")
    return biv_rodrigues(n, m).value;
  if (route == "riordan")
    return biv_riordan_table(n, m)[n][m];
  throw py::value_error("unknown bivariate route '" + route + "'");
}

Table<Polynomial> riordan_matrix(const std::string& g, const std::string& f, unsigned rows, unsigned cols,
                                 const std::string& flavor, const std::optional<std::string>& h, unsigned layer)
{
  const unsigned order = std::max(rows, cols);
  const Flavor fl = flavor_from(flavor);
  auto series = [&](const std::string& text) { return expr::eval_expr(expr::parse(text), order); };
  if (h)
    return RiordanTriple<Polynomial>(series(g), series(f), series(*h), fl).layer(layer).matrix(rows, cols);
  if (layer != 0)
    throw py::value_error("layer needs h");
  return RiordanArray<Polynomial>(series(g), series(f), fl).matrix(rows, cols);
}

py::dict report_dict(const verify::CheckReport& r)
{
  py::dict d;
  d["check"] = r.name;
  py::dict params;
  for (const auto& [k, v] : r.parameters)
    params[py::str(k)] = v;
  d["parameters"] = params;
  d["passed"] = r.passed;
  if (r.witness) {
    py::dict w;
    w["index"] = r.witness->index;
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  d["note"] = r.note;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Exact Riordan arrays and Laguerre polynomials";

  py::register_exception<expr::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<expr::EvalError>(m, "EvalError", PyExc_ArithmeticError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def(py::init([](const py::object& c) { return Polynomial(rational_from(c)); }))
      .def_static("x", &Polynomial::x)
      .def_static("y", &Polynomial::y)
      .def("__str__", &Polynomial::str)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.str() + "')"; })
      .def("latex", &Polynomial::latex)
      .def("degree", &Polynomial::degree)
      .def("coefficient", [](const Polynomial& p, unsigned dx, unsigned dy) { return fraction(p.coefficient(dx, dy)); },
           py::arg("dx"), py::arg("dy") = 0)
      .def("terms",
           [](const Polynomial& p) {
             py::dict d;
             for (const auto& [mono, c] : p.terms())
               d[py::make_tuple(mono.dx, mono.dy)] = fraction(c);
             return d;
           })
      .def(
          "__call__",
          [](const Polynomial& p, const py::object& x, const py::object& y) {
            return fraction(p.substitute(Polynomial(rational_from(x)), Polynomial(rational_from(y))).constant_term());
          },
          py::arg("x"), py::arg("y") = 0)
      .def("swap_xy", &Polynomial::swap_xy)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__pow__", &Polynomial::pow)
      .def(py::self == py::self)
      .def("__hash__", [](const Polynomial& p) { return py::hash(py::str(p.str())); });

  m.def("laguerre", &univariate, "L_n^(alpha)(x), integer normalization", py::arg("n"), py::arg("alpha") = 0,
        py::arg("route") = "explicit");
  m.def("bivariate_laguerre", &bivariate, "L_{n,m}(x, y)", py::arg("n"), py::arg("m"), py::arg("route") = "explicit");
  m.def("laguerre_table", &biv_riordan_table, "[L_{n,m}] for n <= max_n, m <= max_m", py::arg("max_n"),
        py::arg("max_m"));
  m.def("riordan_matrix", &riordan_matrix, "Leading rows x cols block of a Riordan array given by expressions in t",
        py::arg("g"), py::arg("f"), py::arg("rows"), py::arg("cols"), py::arg("flavor") = "ordinary",
        py::arg("h") = py::none(), py::arg("layer") = 0);
  m.def("check_names", &verify::check_names);
  m.def(
      "verify",
      [](const std::optional<std::string>& only, bool mutate) {
        verify::HarnessConfig config;
        config.only = only;
        if (mutate)
          config.mutation = Mutation::flip_sign;
        std::vector<verify::CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify::run_all(config);
        }
        py::list out;
        for (const auto& r : reports)
          out.append(report_dict(r));
        return out;
      },
      "Run the exact identity harness at default ranges", py::arg("only") = py::none(), py::arg("mutate") = false);
}
