#include "doctest.h"

#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/fixtures.hpp"

#include <set>

using namespace galreal;

namespace {

RatExpr R(const char * s) { return parse_ratexpr(s); }

}  // namespace

TEST_CASE("generic row of the Heisenberg table")
{
  const Fixture f = load_fixture("table2/generic");
  CHECK(f.algebra.name() == "AbarG1(1)");
  REQUIRE(f.splitting);
  CHECK(f.splitting->sub.empty());
  CHECK(render_realization(f.table) == "P = d1\nT = d2\nG = -x2*d1 + d3\n");
  CHECK(load_fixture("table2/row/h0").row.id == "h0");
}

TEST_CASE("special Galilei row with an exponential")
{
  const Fixture f = load_fixture("table8/h2.4");
  const LieAlgebra & l = f.algebra;
  CHECK(f.table.images[l.index_of("S")] == Field{R("x1^2"), R("x1"), R("exp(2*x2)")});
  CHECK(check_relations(f.table).ok);
}

TEST_CASE("unknown fixtures")
{
  CHECK_THROWS_AS(load_fixture("table2/h9.9"), NotFound);
  CHECK_THROWS_AS(load_fixture("table99/h0"), NotFound);
  CHECK_THROWS_AS(run_suite("bogus"), NotFound);
}

TEST_CASE("table ids")
{
  const auto ids = fixture_table_ids();
  const std::set<std::string> have(ids.begin(), ids.end());
  for (const char * t : {"table2", "table3", "table4", "table5", "table6", "table7", "table8"}) {
    CHECK(have.count(t) == 1);
  }
}

TEST_CASE("Heisenberg table suite")
{
  const SuiteReport rep = run_suite("table2");
  CHECK(rep.ok());
  std::set<std::string> rows, promoted;
  for (const auto & r : rep.results) {
    if (r.check == "relations") {
      rows.insert(r.fixture);
    }
    if (r.check == "promoted") {
      promoted.insert(r.fixture);
    }
  }
  CHECK(rows.size() == 4);
  CHECK(promoted.size() == 2);
}

TEST_CASE("single row selector")
{
  const SuiteReport rep = run_suite("table8/h3.5");
  CHECK(rep.ok());
  CHECK(rep.passed() >= 4);
  for (const auto & r : rep.results) {
    CHECK(r.fixture.starts_with("table8/h3.5"));
  }
}

TEST_CASE("a damaged table entry fails")
{
  const FixtureTable t = load_table("table2");
  const LieAlgebra l = t.load_algebra();
  const Realization good = parse_realization("P = d1\nT = d2\nG = -x2*d1 + d3\n", l, 3);
  const Realization bad = parse_realization("P = d1\nT = d2\nG = x2*d1 + d3\n", l, 3);
  CHECK(check_relations(good).ok);
  CHECK_FALSE(check_relations(bad).ok);
  CHECK_FALSE(compare_realizations(good, bad, CoordinateMap::identity(3)));
}

TEST_CASE("equivalence references")
{
  const Realization promoted = resolve_realization("table4/h1.3@x4");
  CHECK(promoted.m == 4);
  CHECK(check_relations(promoted).ok);
  const Realization at0 = resolve_realization("table4/h1.3[beta=0]");
  CHECK(at0.algebra.symbols().empty());
  CHECK_THROWS_AS(resolve_realization("table4/h7.7"), NotFound);
}

TEST_CASE("transport needs a homomorphism")
{
  const Fixture f = load_fixture("table2/generic");
  const LieAlgebra & l = f.algebra;
  const LinearMap swap = map_from_image_rows({l.vector("-P"), l.vector("G"), l.vector("T")});
  const Realization moved = transport(f.table, l, swap);
  CHECK(check_relations(moved).ok);
  const LinearMap bad = map_from_image_rows({l.vector("P"), l.vector("G"), l.vector("T")});
  CHECK_THROWS_AS(transport(f.table, l, bad), InputError);
}

TEST_CASE("report rendering")
{
  const SuiteReport rep = run_suite("table2/h1.1");
  CHECK(rep.render().find(" passed, 0 failed") != std::string::npos);
  CHECK(rep.render_json().find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("table rendering")
{
  const std::string plain = render_table(load_table("table2"), false);
  CHECK(plain.find("G = -x2*d1 + d3") != std::string::npos);
  const std::string tex = render_table(load_table("table2"), true);
  CHECK(tex.find("x_2\\partial_1") != std::string::npos);
}
