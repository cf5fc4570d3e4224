#include "galreal/catalog.hpp"
#include "galreal/combination.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/fixtures.hpp"
#include "galreal/jets.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace galreal;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

bool is_file(const std::string & s) { return std::filesystem::is_regular_file(s); }

/// A path, or a catalog id such as "A48".
LieAlgebra algebra_arg(const std::string & s) { return is_file(s) ? load_algebra(s) : catalog_algebra(s); }

std::map<Symbol, RatExpr> parse_bindings(const std::vector<std::string> & items)
{
  std::map<Symbol, RatExpr> out;
  for (const auto & item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("expected name=value, got '" + item + "'");
    }
    std::string name = item.substr(0, eq);
    name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
    out[Symbol(name)] = parse_ratexpr(item.substr(eq + 1));
  }
  return out;
}

int cmd_check(const std::string & arg, bool latex, json & report)
{
  const LieAlgebra l = algebra_arg(arg);
  const JacobiReport jr = jacobi_check(l);
  std::cout << (latex ? render_algebra_latex(l) + "\n" : render_algebra(l));
  for (std::size_t i = 0; i < l.dim(); ++i) {
    std::cout << "ad(" << l.basis()[i] << ") =\n" << to_text(adjoint(l, l.unit(i))) << "\n";
  }
  for (const auto & v : jr.violations) {
    std::cout << "Jacobi fails on (" << l.basis()[v.i] << ", " << l.basis()[v.j] << ", " << l.basis()[v.k]
              << "): " << render_combination(v.residual, l.basis()) << "\n";
  }
  std::cout << "Jacobi " << (jr.holds ? "holds" : "FAILS") << "\n";
  report = {{"command", "check"}, {"algebra", l.name()}, {"dim", l.dim()}, {"jacobi", jr.holds}, {"violations", jr.violations.size()}};
  return jr.holds ? kOk : kFailed;
}

int cmd_realize(const std::string & alg, const std::string & split, const std::vector<std::string> & promote, bool latex, json & report)
{
  const LieAlgebra l = algebra_arg(alg);
  const Splitting s = parse_splitting(read_file(split), l);
  Realization r = realize(l, s);
  std::vector<std::string> warnings;
  for (const auto & p : promote) {
    std::string w;
    r = promote_parameter(r, Symbol(p), &w);
    if (!w.empty()) {
      warnings.push_back(w);
      std::cerr << "warning: " << w << "\n";
    }
  }
  const bool rel = check_relations(r).ok;
  std::cout << (latex ? render_realization_latex(r) + "\n" : render_realization(r));
  if (!rel) {
    std::cout << "relations FAIL\n";
  }
  report = {{"command", "realize"},
            {"algebra", l.name()},
            {"m", r.m},
            {"realization", render_realization(r)},
            {"relations", rel},
            {"kernel_dim", realization_kernel(r).size()},
            {"warnings", warnings}};
  return rel ? kOk : kFailed;
}

int cmd_verify(const std::string & selector, bool quiet, json & report)
{
  const SuiteReport rep = run_suite(selector);
  if (quiet) {
    for (const auto & r : rep.results) {
      if (!r.ok) {
        std::cout << "FAIL " << r.fixture << " " << r.check << ": " << r.detail << "\n";
      }
    }
    std::cout << rep.passed() << " passed, " << rep.failed() << " failed\n";
  } else {
    std::cout << rep.render();
  }
  report = json::parse(rep.render_json());
  report["command"] = "verify";
  report["selector"] = selector;
  return rep.ok() ? kOk : kFailed;
}

int cmd_deform(const std::string & arg, const std::string & source, const std::string & qname, bool limit,
               const std::vector<std::string> & at, bool latex, json & report)
{
  const Symbol q(qname);
  DeformationFamily f;
  if (arg.ends_with(".mat")) {
    if (source.empty()) {
      throw InputError("a contraction matrix needs --source <algebra>");
    }
    const ContractionMatrix u = is_file(arg) ? parse_matrix(read_file(arg)) : catalog_matrix(arg.substr(0, arg.size() - 4));
    f = deform_via_contraction(algebra_arg(source), u, q);
  } else {
    f = is_file(arg) ? parse_family(read_file(arg)) : catalog_family(arg);
  }
  LieAlgebra out = f.algebra;
  std::string what = "family";
  if (!at.empty()) {
    f = specialize(f, parse_bindings(at));
    out = f.algebra;
    what = "specialization";
  }
  if (limit) {
    out = contraction_limit(out, f.q);
    what = "limit";
  }
  const bool jacobi = jacobi_check(out).holds;
  std::cout << (latex ? render_algebra_latex(out) + "\n" : render_algebra(out));
  if (!limit && at.empty()) {
    std::cout << "deformation_parameter: " << f.q.name() << "\n";
  }
  std::cout << "Jacobi " << (jacobi ? "holds" : "FAILS") << "\n";
  report = {{"command", "deform"}, {"result", what}, {"algebra", render_algebra(out)}, {"jacobi", jacobi}};
  return jacobi ? kOk : kFailed;
}

int cmd_symmetry(const std::vector<std::string> & files, json & report)
{
  bool all = true;
  report = {{"command", "symmetry"}, {"problems", json::array()}};
  for (const auto & path : files) {
    for (const auto & p : load_symmetry_file(path)) {
      const SymmetryReport r = verify_symmetry_problem(p);
      const std::string title = p.name + (p.sample.empty() ? "" : " [" + p.sample + "]");
      json ops = json::object();
      for (const auto & [name, ok] : r.operators) {
        std::cout << (ok ? "PASS " : "FAIL ") << title << " " << name << "\n";
        ops[name] = ok;
      }
      if (r.algebra_ok) {
        std::cout << (*r.algebra_ok ? "PASS " : "FAIL ") << title << " algebra " << p.algebra << ": " << r.algebra_detail << "\n";
      }
      all = all && r.ok();
      report["problems"].push_back({{"problem", title},
                                    {"operators", ops},
                                    {"algebra", p.algebra},
                                    {"algebra_ok", r.algebra_ok ? json(*r.algebra_ok) : json(nullptr)},
                                    {"ok", r.ok()}});
    }
  }
  report["ok"] = all;
  return all ? kOk : kFailed;
}

int cmd_tables(const std::vector<std::string> & ids, bool latex, json & report)
{
  const auto which = ids.empty() ? fixture_table_ids() : ids;
  report = {{"command", "tables"}, {"tables", which}};
  bool first = true;
  for (const auto & id : which) {
    std::cout << (first ? "" : "\n") << render_table(load_table(id), latex);
    first = false;
  }
  return kOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Realizations of Galilei algebras: structure constants, realizations, deformations, symmetries"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_path;
  app.add_option("--report", report_path, "write a JSON summary to this path");

  bool latex = false;

  auto * check = app.add_subcommand("check", "Jacobi identity and adjoint matrices of an algebra");
  std::string check_arg;
  check->add_option("algebra", check_arg, "algebra file or catalog id")->required();
  check->add_flag("--latex", latex, "LaTeX output");

  auto * real = app.add_subcommand("realize", "realization from a splitting");
  std::string real_alg, real_split;
  std::vector<std::string> promote;
  real->add_option("algebra", real_alg, "algebra file or catalog id")->required();
  real->add_option("splitting", real_split, "splitting file")->required()->check(CLI::ExistingFile);
  real->add_option("--promote", promote, "parameter to turn into a new coordinate");
  real->add_flag("--latex", latex, "LaTeX output");

  auto * ver = app.add_subcommand("verify", "run the table fixtures");
  std::string selector = "all";
  bool quiet = false;
  ver->add_option("selector", selector, "all, a table id (table4) or a row (table4/h1.3)");
  ver->add_flag("-q,--quiet", quiet, "print failures and the summary only");

  auto * def = app.add_subcommand("deform", "deformation family, contraction, limit or specialization");
  std::string def_arg, def_source, def_q = "q";
  bool def_limit = false;
  std::vector<std::string> def_at;
  def->add_option("family", def_arg, "family, or a contraction matrix ending in .mat (file or catalog id)")->required();
  def->add_option("--source", def_source, "algebra the contraction matrix acts on");
  def->add_option("--param", def_q, "deformation parameter name");
  auto * lim = def->add_flag("--limit", def_limit, "limit q -> 0");
  def->add_option("--at", def_at, "bindings such as q=1/2 or beta=-1/2")->excludes(lim);
  def->add_flag("--latex", latex, "LaTeX output");

  auto * sym = app.add_subcommand("symmetry", "point symmetry checks for an equation file");
  std::vector<std::string> sym_files;
  sym->add_option("equations", sym_files, "equation files")->required()->check(CLI::ExistingFile);

  auto * tab = app.add_subcommand("tables", "print the encoded realization tables");
  std::vector<std::string> tab_ids;
  tab->add_option("ids", tab_ids, "table ids (all when omitted)");
  tab->add_flag("--latex", latex, "LaTeX output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  json report;
  int code = kOk;
  try {
    if (*check) {
      code = cmd_check(check_arg, latex, report);
    } else if (*real) {
      code = cmd_realize(real_alg, real_split, promote, latex, report);
    } else if (*ver) {
      code = cmd_verify(selector, quiet, report);
    } else if (*def) {
      code = cmd_deform(def_arg, def_source, def_q, def_limit, def_at, latex, report);
    } else if (*sym) {
      code = cmd_symmetry(sym_files, report);
    } else if (*tab) {
      code = cmd_tables(tab_ids, latex, report);
    }
  } catch (const Error & e) {
    std::cerr << "error: " << e.what() << "\n";
    report = {{"error", e.what()}};
    code = kInputError;
  }
  report["exit_code"] = code;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return kInputError;
    }
    out << report.dump(1) << "\n";
  }
  return code;
}
