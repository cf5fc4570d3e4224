#pragma once

#include "galreal/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galreal {

struct FixtureRow {
  std::string id;
  std::vector<std::string> subalgebra;
  /// Empty for tables quoted without a construction.
  std::vector<std::string> complement;
  std::vector<std::string> realization;
  /// Number of coordinates when there is no complement to count.
  std::size_t m = 0;
  bool generic = false;
  /// Faithfulness as stated by the ideal remarks, when stated.
  std::optional<bool> faithful;
  std::optional<std::string> promote;
  std::vector<std::string> promoted;
  /// Coordinate map "yK = ..." and basis map rows used when regeneration does not match verbatim.
  std::vector<std::string> match_coordinates;
  std::vector<std::string> match_basis;
};

/// A claimed equivalence between two realizations of the same algebra.
/// References are "table/row", "table/row@promoted" or "table/row[p=value]".
struct Equivalence {
  std::string from, to;
  std::vector<std::string> coordinates;
  /// Images of the basis elements under the automorphism, as combinations.
  std::vector<std::string> basis;
  /// False when the transformation was found while encoding rather than quoted.
  bool stated = true;
};

struct FixtureTable {
  std::string id;
  std::string algebra;
  std::string title;
  std::map<std::string, std::string> bindings;
  /// Algebra the rows are carried to for comparisons, with the target basis
  /// written in the table's basis.
  std::string target;
  std::vector<std::string> target_basis;
  std::vector<FixtureRow> rows;
  std::vector<Equivalence> equivalences;
  std::vector<std::string> unverified;

  LieAlgebra load_algebra() const;
};

struct Fixture {
  std::string id;
  LieAlgebra algebra;
  std::optional<Splitting> splitting;
  Realization table;
  FixtureRow row;
};

std::vector<std::string> fixture_table_ids();
FixtureTable load_table(const std::string & id);
FixtureTable parse_table(std::string_view json_text);

/// "table2/h1.1", "table2/row/h1.1" or "table2/generic".
Fixture load_fixture(const std::string & id);

/// Realization named by an equivalence reference, expressed in the target algebra when the table has one.
Realization resolve_realization(const std::string & ref);

/// Substitutes parameters in every image; the algebra is substituted too.
Realization substitute(const Realization & r, const std::map<Symbol, RatExpr> & bindings);

/// Realization of `target` given by r(u e_i); u must be a homomorphism target -> r.algebra.
Realization transport(const Realization & r, const LieAlgebra & target, const LinearMap & u);

std::vector<Vec> intersect_spans(const std::vector<Vec> & a, const std::vector<Vec> & b, std::size_t dim);

struct CheckResult {
  std::string fixture;
  std::string check;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> results;
  std::vector<std::string> unverified;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  std::string render() const;
  std::string render_json() const;
};

/// "all", "deformations", a table id, or a fixture id. Unknown selectors throw NotFound.
SuiteReport run_suite(const std::string & selector);

/// One table in plain or LaTeX form.
std::string render_table(const FixtureTable & t, bool latex);

}  // namespace galreal
