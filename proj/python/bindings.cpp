#include "galreal/catalog.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/fixtures.hpp"
#include "galreal/jets.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>

namespace py = pybind11;
using namespace galreal;

namespace {

bool is_file(const std::string & s) { return std::filesystem::is_regular_file(s); }

LieAlgebra algebra_arg(const std::string & s) { return is_file(s) ? load_algebra(s) : catalog_algebra(s); }

std::string text_or_file(const std::string & s) { return is_file(s) ? read_file(s) : s; }

std::map<Symbol, RatExpr> bindings(const std::map<std::string, std::string> & at)
{
  std::map<Symbol, RatExpr> out;
  for (const auto & [k, v] : at) {
    out[Symbol(k)] = parse_ratexpr(v);
  }
  return out;
}

py::dict jacobi(const std::string & algebra)
{
  const LieAlgebra l = algebra_arg(algebra);
  const JacobiReport r = jacobi_check(l);
  py::dict d;
  d["name"] = l.name();
  d["basis"] = l.basis();
  d["holds"] = r.holds;
  d["violations"] = r.violations.size();
  d["text"] = render_algebra(l);
  return d;
}

std::string realize_text(const std::string & algebra, const std::string & splitting, const std::vector<std::string> & promote, bool latex)
{
  const LieAlgebra l = algebra_arg(algebra);
  Realization r = realize(l, parse_splitting(text_or_file(splitting), l));
  for (const auto & p : promote) {
    r = promote_parameter(r, Symbol(p));
  }
  return latex ? render_realization_latex(r) : render_realization(r);
}

bool relations_hold(const std::string & algebra, const std::string & realization)
{
  const LieAlgebra l = algebra_arg(algebra);
  return check_relations(parse_realization(text_or_file(realization), l)).ok;
}

py::dict suite(const std::string & selector)
{
  const SuiteReport rep = run_suite(selector);
  py::list results;
  for (const auto & r : rep.results) {
    py::dict d;
    d["fixture"] = r.fixture;
    d["check"] = r.check;
    d["ok"] = r.ok;
    d["detail"] = r.detail;
    results.append(d);
  }
  py::dict d;
  d["passed"] = rep.passed();
  d["failed"] = rep.failed();
  d["results"] = results;
  d["unverified"] = rep.unverified;
  return d;
}

std::string deform(const std::string & family, const std::string & source, const std::string & param, bool limit,
                   const std::map<std::string, std::string> & at)
{
  const Symbol q(param);
  DeformationFamily f;
  if (!source.empty()) {
    const ContractionMatrix u = is_file(family) ? parse_matrix(read_file(family)) : catalog_matrix(family);
    f = deform_via_contraction(algebra_arg(source), u, q);
  } else {
    f = is_file(family) ? parse_family(read_file(family)) : catalog_family(family);
  }
  if (limit) {
    return render_algebra(contraction_limit(f));
  }
  return render_algebra(at.empty() ? f.algebra : specialize(f, bindings(at)).algebra);
}

py::list symmetry(const std::string & path)
{
  py::list out;
  for (const auto & p : load_symmetry_file(path)) {
    const SymmetryReport r = verify_symmetry_problem(p);
    py::dict d;
    d["problem"] = p.name;
    d["sample"] = p.sample;
    d["operators"] = r.operators;
    d["algebra_ok"] = r.algebra_ok;
    d["ok"] = r.ok();
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_galreal, m)
{
  m.doc() = "Exact Lie algebra realizations by vector fields";

  py::register_exception<Error>(m, "Error");

  m.def("canonicalize", [](const std::string & s) { return to_text(parse_ratexpr(s)); }, py::arg("expr"));
  m.def("latex", [](const std::string & s) { return to_latex(parse_ratexpr(s)); }, py::arg("expr"));
  m.def("evaluate", [](const std::string & s, const std::map<std::string, double> & at) { return parse_ratexpr(s).evaluate(at); },
        py::arg("expr"), py::arg("values"));
  m.def("algebra_ids", &catalog_algebra_ids);
  m.def("family_ids", &catalog_family_ids);
  m.def("table_ids", &fixture_table_ids);
  m.def("check_algebra", &jacobi, py::arg("algebra"), "Jacobi check of a catalog id or algebra file.");
  m.def("realize", &realize_text, py::arg("algebra"), py::arg("splitting"), py::arg("promote") = std::vector<std::string>{},
        py::arg("latex") = false);
  m.def("check_relations", &relations_hold, py::arg("algebra"), py::arg("realization"));
  m.def("verify", &suite, py::arg("selector") = "all");
  m.def("deform", &deform, py::arg("family"), py::arg("source") = "", py::arg("param") = "q", py::arg("limit") = false,
        py::arg("at") = std::map<std::string, std::string>{});
  m.def("check_symmetry", &symmetry, py::arg("path"));
  m.def("data_dir", &data_dir);
}
