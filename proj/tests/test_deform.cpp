#include "doctest.h"

#include "galreal/catalog.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/fixtures.hpp"

using namespace galreal;

namespace {

RatExpr R(const char * s) { return parse_ratexpr(s); }

const Symbol q("q");

}  // namespace

TEST_CASE("contraction of A3.4 gives the deformed Heisenberg brackets")
{
  const DeformationFamily f = deform_via_contraction(catalog_algebra("A34"), catalog_matrix("AbarG1_q"), q, {"P", "G", "T"});
  const LieAlgebra & l = f.algebra;
  CHECK(l.bracket(l.vector("P"), l.vector("T")) == l.vector("q*P"));
  CHECK(l.bracket(l.vector("G"), l.vector("T")) == l.vector("P + alpha*q*G"));
  CHECK(l.bracket(l.vector("P"), l.vector("G")) == l.vector("0*P"));
  CHECK(jacobi_check(l).holds);
}

TEST_CASE("contraction of A4.8 gives the deformed classical Galilei brackets")
{
  const DeformationFamily f = deform_via_contraction(catalog_algebra("A48"), catalog_matrix("AG1_q"), q);
  // P = f2, G = -f4, T = -f3, M = f1
  const LieAlgebra l = in_basis(f.algebra, {"e2", "-e4", "-e3", "e1"}, {"P", "G", "T", "M"});
  CHECK(l.bracket(l.vector("P"), l.vector("G")) == l.vector("-M"));
  CHECK(l.bracket(l.vector("M"), l.vector("T")) == l.vector("(1 + beta)/(1 - beta)*q*M"));
  CHECK(l.bracket(l.vector("P"), l.vector("T")) == l.vector("q/(1 - beta)*P"));
  CHECK(l.bracket(l.vector("G"), l.vector("T")) == l.vector("P + beta/(1 - beta)*q*G"));
  CHECK(f.rational_in_q == false);
}

TEST_CASE("identity matrix leaves the algebra constant in q")
{
  const LieAlgebra a = catalog_algebra("A41");
  const DeformationFamily f = deform_via_contraction(a, SymMatrix::identity(4), q);
  CHECK(f.algebra.same_constants(a));
  CHECK(contraction_limit(f).same_constants(a));
}

TEST_CASE("limits")
{
  const DeformationFamily f = catalog_family("AbarG1_q");
  const LieAlgebra lim = contraction_limit(f);
  CHECK(lim.bracket(lim.vector("G"), lim.vector("T")) == lim.vector("P"));
  CHECK(lim.bracket(lim.vector("P"), lim.vector("T")) == lim.vector("0*P"));
  CHECK(lim.same_constants(f.base()));

  LieAlgebra pole = f.algebra;
  pole.set_bracket("P", "G", "1/q*P");
  CHECK_THROWS_AS(contraction_limit(pole, q), LimitDoesNotExist);

  CHECK(limit_at_zero(R("(q^2 + q)/(q + 2)"), q).is_zero());
  CHECK(limit_at_zero(R("(3*q + 1)/(q + 2)"), q) == R("1/2"));
  CHECK_THROWS_AS(limit_at_zero(R("1/(q^2 + q)"), q), LimitDoesNotExist);
}

TEST_CASE("specialization")
{
  const DeformationFamily f = catalog_family("AbarG1_q");
  const LieAlgebra undeformed = in_basis(catalog_algebra("AbarG1"), {"P", "G", "T"}, {"P", "G", "T"});
  CHECK(specialize_at(f, Rational(0)).same_constants(undeformed));
  CHECK(specialize(f, {}).algebra.same_constants(f.algebra));

  const DeformationFamily g = catalog_family("AG1_q");
  const std::map<Symbol, RatExpr> b{{Symbol("beta"), R("-1/2")}};
  CHECK(contraction_limit(specialize(g, b)).same_constants(contraction_limit(g).substitute(b)));
  const LieAlgebra one = specialize_at(specialize(g, b), Rational(1));
  CHECK(one.symbols().empty());
  CHECK(jacobi_check(one).holds);
}

TEST_CASE("recorded isomorphism certificates")
{
  const SuiteReport rep = run_suite("deformations");
  int certificates = 0;
  for (const auto & r : rep.results) {
    if (r.check == "isomorphism") {
      ++certificates;
      CHECK(r.ok);
    }
  }
  CHECK(certificates == 2);
}

TEST_CASE("a wrong certificate is rejected")
{
  const LieAlgebra from = catalog_algebra("p11");
  const LieAlgebra to = specialize(catalog_family("AbarG1_q"), {{Symbol("alpha"), R("-1")}}).algebra;
  CHECK_FALSE(is_homomorphism(from, to, SymMatrix::identity(3)));
}

TEST_CASE("deformed generic realizations")
{
  const DeformationFamily f = catalog_family("AbarG1_q");
  const LieAlgebra & l = f.algebra;
  const Realization r = deformed_generic_realization(f, {l.vector("P"), l.vector("G"), l.vector("T")});
  CHECK(r.images[l.index_of("T")] == Field{R("x2 + q*x1"), R("q*alpha*x2"), R("1")});

  const DeformationFamily g = catalog_family("AbarG2_q");
  const LieAlgebra & m = g.algebra;
  const Realization s = deformed_generic_realization(g);
  CHECK(s.images[m.index_of("D")] == Field{R("x1 + 2*x1*q"), R("2*x2"), R("-x3 + 2*x3*q"), R("1")});
  CHECK(check_relations(s).ok);
}

TEST_CASE("deformed Galilei algebras in several dimensions")
{
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    for (bool mass : {false, true}) {
      const DeformationFamily f = galilei_deformed(GalileiKind::Extended, mass, n, q);
      CHECK(jacobi_check(f.algebra).holds);
      CHECK(contraction_limit(f).same_constants(galilei_algebra({GalileiKind::Extended, mass, n})));
    }
  }
}

TEST_CASE("family and matrix files")
{
  const DeformationFamily f = parse_family("name: x\nbasis: a b\ndeformation_parameter: s\n[a,b] = s*a\n");
  CHECK(f.q == Symbol("s"));
  CHECK_THROWS_AS(parse_family("name: x\nbasis: a b\n[a,b] = a\n"), Error);
  const ContractionMatrix u = parse_matrix("1, q\n0, q^2\n");
  CHECK(u.at(1, 1) == R("q^2"));
  CHECK_THROWS_AS(parse_matrix("1, 2\n3\n"), Error);
}
