#include "doctest.h"

#include "galreal/catalog.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

using namespace galreal;

namespace {

RatExpr R(const char * s) { return parse_ratexpr(s); }

}  // namespace

TEST_CASE("parse and render an algebra")
{
  const LieAlgebra l = parse_algebra("name: h\nbasis: a b c\n# Heisenberg\n[b,c] = a\n");
  CHECK(l.dim() == 3);
  CHECK(l.bracket_basis(1, 2) == Vec{R("1"), R("0"), R("0")});
  CHECK(l.bracket_basis(2, 1) == Vec{R("-1"), R("0"), R("0")});
  const LieAlgebra back = parse_algebra(render_algebra(l));
  CHECK(back.same_constants(l));
  CHECK(back.basis() == l.basis());
}

TEST_CASE("malformed algebra files")
{
  CHECK_THROWS_AS(parse_algebra("name: x\nbasis: a b\n[a,c] = b\n"), Error);
  CHECK_THROWS_AS(parse_algebra("name: x\nbasis: a b\n[a,a] = b\n"), Error);
  CHECK_THROWS_AS(parse_algebra("name: x\n[a,b] = a\n"), Error);
}

TEST_CASE("Jacobi holds on the catalog")
{
  for (const auto & id : catalog_algebra_ids()) {
    CAPTURE(id);
    CHECK(jacobi_check(catalog_algebra(id)).holds);
  }
}

TEST_CASE("Jacobi failure is reported with a residual")
{
  const LieAlgebra l = parse_algebra("name: bad\nbasis: a b c\n[a,b] = c\n[b,c] = a\n[a,c] = a\n");
  const JacobiReport r = jacobi_check(l);
  CHECK_FALSE(r.holds);
  REQUIRE_FALSE(r.violations.empty());
  bool nonzero = false;
  for (const auto & c : r.violations.front().residual) {
    nonzero = nonzero || !c.is_zero();
  }
  CHECK(nonzero);
}

TEST_CASE("Jacobi holds identically in a parameter")
{
  const LieAlgebra a48 = catalog_algebra("A48");
  CHECK(jacobi_check(a48).holds);
  // breaking one constant by a parameter-dependent amount is caught
  LieAlgebra broken = a48;
  broken.set_bracket("e2", "e3", "(1 + beta)*e1");
  CHECK(jacobi_check(broken).holds);
  broken.set_bracket("e1", "e4", "e1");
  CHECK_FALSE(jacobi_check(broken).holds);
}

TEST_CASE("adjoint columns hold brackets")
{
  const LieAlgebra l = catalog_algebra("A41");
  const SymMatrix ad4 = adjoint(l, l.vector("e4"));
  // [e4, e2] = -e1, [e4, e3] = -e2
  CHECK(ad4.col(1) == Vec{R("-1"), R("0"), R("0"), R("0")});
  CHECK(ad4.col(2) == Vec{R("0"), R("-1"), R("0"), R("0")});
  CHECK(ad4.col(3) == Vec(4));
}

TEST_CASE("change of basis")
{
  const LieAlgebra a41 = catalog_algebra("A41");
  const LieAlgebra ag1 = catalog_algebra("AG1");
  // M = e1, P = e2, T = e3, G = -e4
  const LieAlgebra moved = in_basis(a41, {"e1", "e2", "e3", "-e4"}, {"M", "P", "T", "G"});
  CHECK(moved.same_constants(ag1));
  CHECK(moved.basis() == ag1.basis());
}

TEST_CASE("homomorphism and automorphism checks")
{
  const LieAlgebra l = catalog_algebra("A31");
  CHECK(is_automorphism(l, SymMatrix::identity(3)));
  // e1 -> 2 e1, e2 -> 2 e2, e3 -> e3 scales [e2,e3] = e1 consistently
  CHECK(is_automorphism(l, map_from_image_rows({{R("2"), R("0"), R("0")}, {R("0"), R("2"), R("0")}, {R("0"), R("0"), R("1")}})));
  CHECK_FALSE(is_automorphism(l, map_from_image_rows({{R("1"), R("0"), R("0")}, {R("0"), R("2"), R("0")}, {R("0"), R("0"), R("1")}})));
}

TEST_CASE("subalgebras and ideals")
{
  const LieAlgebra g = catalog_algebra("AbarG3");
  CHECK(subalgebra_closed(g, {g.vector("D"), g.vector("S")}));
  CHECK_FALSE(subalgebra_closed(g, {g.vector("T"), g.vector("S")}));
  CHECK(is_ideal(g, {g.vector("P"), g.vector("G")}));
  CHECK(largest_ideal_in(g, {g.vector("D"), g.vector("S")}).empty());
  const auto ideal = largest_ideal_in(g, {g.vector("D"), g.vector("G"), g.vector("P")});
  CHECK(same_span(ideal, {g.vector("G"), g.vector("P")}, g.dim()));
}

TEST_CASE("substituting a parameter")
{
  const LieAlgebra a = catalog_algebra("A48").substitute({{Symbol("beta"), R("-1/2")}});
  CHECK(a.symbols().empty());
  CHECK(a.bracket_basis(0, 3) == Vec{R("1/2"), R("0"), R("0"), R("0")});
}
