#include "doctest.h"

#include "galreal/catalog.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/verify.hpp"

using namespace galreal;

namespace {

RatExpr R(const char * s) { return parse_ratexpr(s); }

Splitting split(const LieAlgebra & l, std::vector<std::string> complement, std::vector<std::string> sub)
{
  Splitting s;
  for (const auto & c : complement) {
    s.complement.push_back(l.vector(c));
  }
  for (const auto & c : sub) {
    s.sub.push_back(l.vector(c));
  }
  return s;
}

bool same_images(const Realization & r, const std::string & text)
{
  const Realization expected = parse_realization(text, r.algebra, r.m);
  return r.images == expected.images;
}

}  // namespace

TEST_CASE("one-forms of the Heisenberg algebra")
{
  const LieAlgebra l = catalog_algebra("AbarG1");
  REQUIRE(l.basis() == std::vector<std::string>{"P", "T", "G"});
  const SymMatrix w = one_forms(l);
  const SymMatrix expected = SymMatrix::from_rows({{R("1"), R("0"), R("x2")}, {R("0"), R("1"), R("0")}, {R("0"), R("0"), R("1")}});
  CHECK(w == expected);
}

TEST_CASE("abelian algebra has trivial one-forms and coordinate fields")
{
  const LieAlgebra l = parse_algebra("name: ab\nbasis: a b c\n");
  CHECK(one_forms(l).is_identity());
  const VectorFieldSet f = left_invariant_fields(l);
  for (std::size_t i = 0; i < 3; ++i) {
    Field d(3);
    d[i] = R("1");
    CHECK(f.fields[i] == d);
  }
}

TEST_CASE("one-forms with a diagonal element are polynomial in the nilpotent part")
{
  const LieAlgebra l = catalog_algebra("AbarG2");
  const SymMatrix w = one_forms(l);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(w.at(i, j).is_exppoly());
      CHECK(w.at(i, j) == (i == j ? R("1") : R("0")) + (i == 0 && j == 2 ? R("x2") : R("0")));
    }
  }
  const VectorFieldSet f = left_invariant_fields(l);
  CHECK(duality_check(w, f));
}

TEST_CASE("left-invariant fields")
{
  const LieAlgebra l = catalog_algebra("AbarG1");
  const VectorFieldSet f = left_invariant_fields(l);
  CHECK(f.fields[0] == Field{R("1"), R("0"), R("0")});
  CHECK(f.fields[1] == Field{R("0"), R("1"), R("0")});
  CHECK(f.fields[2] == Field{R("-x2"), R("0"), R("1")});

  // order (M, P, T, D, G): the G field picks up exp(x4) in the fifth component
  const LieAlgebra ag2 = in_basis(catalog_algebra("AG2"), {"M", "P", "T", "D", "G"}, {"M", "P", "T", "D", "G"});
  const VectorFieldSet g = left_invariant_fields(ag2);
  CHECK(g.fields[4][4] == R("exp(x4)"));
}

TEST_CASE("realizations from splittings")
{
  const LieAlgebra l = catalog_algebra("AbarG1");
  CHECK(same_images(realize(l, split(l, {"G", "T"}, {"P"})), "P = 0\nT = d2\nG = d1\n"));
  CHECK(same_images(realize(l, split(l, {"P", "G"}, {"T + alpha*G"})), "P = d1\nT = x2*d1 - alpha*d2\nG = d2\n"));

  const LieAlgebra s = catalog_algebra("AbarG3");
  const Realization r = realize(s, split(s, {"S"}, {"D", "T", "G", "P"}));
  CHECK(r.m == 1);
  CHECK(same_images(r, "P = 0\nT = x1^2*d1\nG = 0\nD = -2*x1*d1\nS = d1\n"));
}

TEST_CASE("W and fields from realize are dual")
{
  const LieAlgebra l = catalog_algebra("AbarG3");
  SymMatrix w;
  VectorFieldSet f;
  realize(l, split(l, {"T", "D", "S"}, {"G", "P"}), &w, &f);
  CHECK(duality_check(w, f));
  w.at(0, 0) = w.at(0, 0) + R("x1");
  CHECK_FALSE(duality_check(w, f));
}

TEST_CASE("invalid splittings")
{
  const LieAlgebra l = catalog_algebra("AbarG1");
  CHECK_THROWS_AS(realize(l, split(l, {"P"}, {"G", "T"})), InputError);
  CHECK_THROWS_AS(realize(l, split(l, {"P", "G"}, {"P"})), InputError);
  CHECK_THROWS_AS(realize(l, split(l, {"P"}, {"G"})), InputError);
}

TEST_CASE("promoting a parameter")
{
  const LieAlgebra l = catalog_algebra("AbarG1");
  const Realization r = realize(l, split(l, {"P", "G"}, {"T + alpha*G"}));
  std::string warning;
  const Realization p = promote_parameter(r, Symbol("alpha"), &warning);
  CHECK(warning.empty());
  CHECK(p.m == 3);
  CHECK(same_images(p, "P = d1\nT = x2*d1 - x3*d2\nG = d2\n"));
  CHECK(check_relations(p).ok);

  const Realization q = realize(l, split(l, {"G"}, {"P", "T + alpha*G"}));
  CHECK(same_images(promote_parameter(q, Symbol("alpha")), "P = 0\nT = -x2*d1\nG = d1\n"));

  const Realization same = promote_parameter(r, Symbol("beta"), &warning);
  CHECK_FALSE(warning.empty());
  CHECK(same.m == r.m);
  CHECK(same.images == r.images);
}

TEST_CASE("render and parse realizations")
{
  const LieAlgebra l = catalog_algebra("AbarG1");
  const Realization r = realize(l, split(l, {"P", "T", "G"}, {}));
  CHECK(render_realization(r) == "P = d1\nT = d2\nG = -x2*d1 + d3\n");
  CHECK(parse_realization(render_realization(r), l).images == r.images);
  const Realization k = realize(l, split(l, {"G", "T"}, {"P"}));
  CHECK(render_realization(k).starts_with("P = 0\n"));
  CHECK(render_realization_latex(r).find("x_2\\partial_1") != std::string::npos);
}

TEST_CASE("splitting files")
{
  const LieAlgebra l = catalog_algebra("AbarG3");
  const Splitting s = parse_splitting("algebra: AbarG3(1)\ncomplement: P\ncomplement: T\ncomplement: G\nsubalgebra: D\nsubalgebra: S\n", l);
  CHECK(s.m() == 3);
  CHECK_THROWS_AS(parse_splitting("algebra: A4.1\ncomplement: P\n", l), InputError);
  CHECK_THROWS_AS(parse_splitting("complement: P\nsubalgebra: T\nsubalgebra: S\n", l), InputError);
}

TEST_CASE("irrational spectrum falls back to zero isotropy coordinates")
{
  const LieAlgebra l = catalog_algebra("AbarG3");
  const Realization r = realize(l, split(l, {"T", "D"}, {"S + T", "G", "P"}));
  CHECK(check_relations(r).ok);
  CHECK(r.provenance.find("isotropy") != std::string::npos);
}
