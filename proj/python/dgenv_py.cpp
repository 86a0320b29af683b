// Python bindings.  Polynomials cross the boundary as text in the same
// grammar the command-line tool uses.

#include "dgenv/analysis.hpp"
#include "dgenv/cli.hpp"
#include "dgenv/format.hpp"
#include "dgenv/parse.hpp"
#include "dgenv/presets.hpp"
#include "dgenv/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace dgenv;

namespace {

struct PyEnveloping {
  EnvelopingAlgebra env;

  const Signature& sig() const { return env.signature(); }
  NCPolynomial parse(const std::string& e) const { return parse_nc_polynomial(sig(), e); }
};

std::vector<std::tuple<std::string, std::string, std::string, std::string>> report_rows(const ValidationReport& r) {
  std::vector<std::tuple<std::string, std::string, std::string, std::string>> rows;
  for (const auto& o : r.outcomes) rows.emplace_back(to_string(o.status), o.check, o.witness, o.detail);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_dgenv, m) {
  m.doc() = "Enveloping algebras of DG Poisson algebras";

  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  (void)parse_error;

  py::class_<Presentation>(m, "Presentation")
      .def_static("parse", [](const std::string& text) { return parse_presentation(text); }, py::arg("text"))
      .def_static("builtin", &builtin, py::arg("name"))
      .def_static("builtin_names", &builtin_names)
      .def_property_readonly("generators",
                             [](const Presentation& p) {
                               std::vector<std::pair<std::string, int>> g;
                               for (const auto& x : p.signature().generators()) g.emplace_back(x.name, x.degree);
                               return g;
                             })
      .def_property_readonly("bracket_degree", &Presentation::bracket_degree)
      .def_property_readonly("graded", &Presentation::graded)
      .def("text", &write_presentation)
      .def("validate", [](const Presentation& p) { return report_rows(validate(p)); })
      .def("is_valid", [](const Presentation& p) { return validate(p).ok(); })
      .def("bracket",
           [](const Presentation& p, const std::string& f, const std::string& g) {
             const Signature& s = p.signature();
             return to_string(s, p.bracket(parse_polynomial(s, f), parse_polynomial(s, g)));
           })
      .def("d",
           [](const Presentation& p, const std::string& f) {
             const Signature& s = p.signature();
             return to_string(s, p.differential(parse_polynomial(s, f)));
           })
      .def("psi",
           [](const Presentation& p, const std::string& gen, const std::string& f) {
             const Signature& s = p.signature();
             const auto i = s.find(gen);
             if (!i) throw py::key_error("unknown generator '" + gen + "'");
             return to_string(s, p.anti_differential(*i, parse_polynomial(s, f)));
           })
      .def("__repr__", [](const Presentation& p) {
        std::string names;
        for (const auto& g : p.signature().generators()) names += (names.empty() ? "" : ", ") + g.name;
        return "<Presentation " + names + ">";
      });

  py::class_<PyEnveloping>(m, "Enveloping")
      .def(py::init([](const Presentation& p, int complete_to) {
             return PyEnveloping{EnvelopingAlgebra::build(ValidatedPresentation::from(p), complete_to)};
           }),
           py::arg("presentation"), py::arg("complete_to") = 12)
      .def("nf", [](const PyEnveloping& e, const std::string& x) { return to_string(e.sig(), e.env.nf(e.parse(x))); })
      .def("right_nf",
           [](const PyEnveloping& e, const std::string& x) {
             return to_string(e.sig(), e.env.right_normal_form(e.parse(x)));
           })
      .def("partial",
           [](const PyEnveloping& e, const std::string& x) { return to_string(e.sig(), e.env.partial(e.parse(x))); })
      .def("m",
           [](const PyEnveloping& e, const std::string& f) {
             return to_string(e.sig(), e.env.nf(e.env.m(parse_polynomial(e.sig(), f))));
           })
      .def("h",
           [](const PyEnveloping& e, const std::string& f) {
             return to_string(e.sig(), e.env.nf(e.env.h(parse_polynomial(e.sig(), f))));
           })
      .def("completion_rules",
           [](const PyEnveloping& e) {
             std::vector<std::string> out;
             for (const Word& w : e.env.completion().added) out.push_back(to_string(e.sig(), w));
             return out;
           })
      .def("basis",
           [](const PyEnveloping& e, int max_degree) {
             std::vector<std::vector<std::string>> by_degree(max_degree + 1);
             for (const Word& w : e.env.rules().standard_monomials(max_degree))
               by_degree[e.env.algebra().degree(w)].push_back(to_string(e.sig(), w));
             return by_degree;
           },
           py::arg("max_degree"))
      .def("dimension_table",
           [](const PyEnveloping& e, int max_degree) {
             QuotientOracle oracle = QuotientOracle::enveloping(e.env.presentation());
             std::vector<std::tuple<int, std::size_t, std::size_t, bool>> rows;
             for (const auto& r : dimension_table(e.env, oracle, max_degree))
               rows.emplace_back(r.degree, r.oracle, r.standard, r.ok());
             return rows;
           },
           py::arg("max_degree"))
      .def("adjudicate", [](const PyEnveloping& e, int max_degree) {
        return to_text(e.sig(), adjudicate(e.env, max_degree));
      });

  m.def(
      "oracle_dimensions",
      [](const Presentation& p, int max_degree) {
        QuotientOracle o = QuotientOracle::enveloping(p);
        std::vector<std::size_t> dims;
        for (int d = 0; d <= max_degree; ++d) dims.push_back(o.dimension(d));
        return dims;
      },
      py::arg("presentation"), py::arg("max_degree"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
