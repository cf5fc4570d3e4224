#include "doctest.h"

#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/matrix.hpp"

#include <cmath>

using namespace galreal;

namespace {

Symbol x(int i) { return Symbol::coordinate(i); }

ExpPoly P(const char * s) { return parse_exppoly(s); }

double numeric(const ExpPoly & e, double x1, double x2 = 0.0)
{
  return e.evaluate({{"x1", x1}, {"x2", x2}});
}

}  // namespace

TEST_CASE("canonicalize cancels and normalizes")
{
  CHECK(P("(x1+x2)*exp(x1) - x2*exp(x1) - x1*exp(x1)").is_zero());
  const ExpPoly sq = P("2*x1*x1");
  REQUIRE(sq.size() == 1);
  CHECK(sq == ExpPoly::monomial(2, {{x(1), Rational(2)}}));
}

TEST_CASE("exponentials multiply by adding forms")
{
  const ExpPoly e = P("exp(x1)*exp(2*x1)");
  CHECK(e == ExpPoly::exponential({{x(1), Rational(3)}}));
  for (double v : {0.0, 1.0, 2.0}) {
    CHECK(numeric(e, v) == doctest::Approx(std::exp(v) * std::exp(2 * v)).epsilon(1e-12));
  }
}

TEST_CASE("non-linear exponent is rejected")
{
  CHECK_THROWS_AS(P("exp(x1*x2)"), UnsupportedExpression);
  CHECK_THROWS_AS(P("exp(x1+1)"), UnsupportedExpression);
  CHECK(P("exp(0)") == ExpPoly(1));
}

TEST_CASE("parser errors")
{
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P("(x1"), ParseError);
  CHECK_THROWS_AS(P("x1 $ 2"), ParseError);
}

TEST_CASE("differentiate")
{
  CHECK(P("x1").differentiate(x(1)) == ExpPoly(1));
  CHECK(P("x1*exp(x1)").differentiate(x(2)).is_zero());
  const ExpPoly f = P("x1^2*exp(2*x1)");
  const ExpPoly d = f.differentiate(x(1));
  CHECK(d == P("(2*x1 + 2*x1^2)*exp(2*x1)"));
  const double h = 1e-5;
  for (double v : {0.3, 1.0}) {
    const double fd = (numeric(f, v + h) - numeric(f, v - h)) / (2 * h);
    CHECK(numeric(d, v) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("substitute")
{
  CHECK(P("x2*x3").substitute({{x(3), ExpPoly::symbol("alpha")}}) == P("alpha*x2"));
  CHECK(P("-alpha*x2").substitute({{Symbol("alpha"), ExpPoly::coordinate(3)}}) == P("-x3*x2"));
  const ExpPoly s = P("exp(x1)").substitute({{x(1), P("x1+x2")}});
  CHECK(s == P("exp(x1)*exp(x2)"));
  CHECK(numeric(s, 0.4, -0.7) == doctest::Approx(std::exp(0.4 - 0.7)));
  CHECK_THROWS_AS(P("exp(x1)").substitute({{x(1), P("x2^2")}}), UnsupportedExpression);
}

TEST_CASE("rational powers and negative powers")
{
  const ExpPoly t = P("t^(7/3)");
  CHECK(t.differentiate(Symbol("t")) == P("7/3*t^(4/3)"));
  CHECK(P("x1^(-3)*x1^3") == ExpPoly(1));
  CHECK(parse_ratexpr("1/x1") == RatExpr(P("x1^(-1)")));
}

TEST_CASE("text rendering round trips")
{
  for (const char * s : {"-x2", "x2 + 2*x1", "1/2*x1^2 - x2", "(1+beta)/(1-beta)*q", "exp(3*x3) - x1*exp(-2*x2)", "t^(7/3) + 1/x1^3"}) {
    const RatExpr e = parse_ratexpr(s);
    CAPTURE(s);
    CAPTURE(to_text(e));
    CHECK(parse_ratexpr(to_text(e)) == e);
  }
  CHECK(to_text(P("-x2")) == "-x2");
  CHECK(to_latex(P("exp(3*x3)")) == "e^{3x_3}");
}

TEST_CASE("rational quotient normalization")
{
  const RatExpr a = parse_ratexpr("(x1^2 - x2^2)/(x1 - x2)");
  CHECK(a.is_exppoly());
  CHECK(a == parse_ratexpr("x1 + x2"));
  const RatExpr b = parse_ratexpr("1/(1-beta)");
  CHECK(!b.is_exppoly());
  CHECK(b * parse_ratexpr("1-beta") == RatExpr(1));
}

TEST_CASE("inverse examples")
{
  const SymMatrix u = SymMatrix::from_rows({{RatExpr(1), RatExpr(0)}, {parse_ratexpr("x1"), RatExpr(1)}});
  CHECK(mat_inverse(u) == SymMatrix::from_rows({{RatExpr(1), RatExpr(0)}, {parse_ratexpr("-x1"), RatExpr(1)}}));
  const SymMatrix d = SymMatrix::from_rows({{parse_ratexpr("exp(x1)"), RatExpr(0)}, {RatExpr(0), parse_ratexpr("exp(2*x1)")}});
  const SymMatrix di = mat_inverse(d);
  CHECK(di == SymMatrix::from_rows({{parse_ratexpr("exp(-x1)"), RatExpr(0)}, {RatExpr(0), parse_ratexpr("exp(-2*x1)")}}));
  CHECK(di.is_exppoly());
  const SymMatrix s = SymMatrix::from_rows({{parse_ratexpr("x1"), parse_ratexpr("x1")}, {RatExpr(1), RatExpr(1)}});
  CHECK_THROWS_AS(mat_inverse(s), SingularMatrix);
}

TEST_CASE("matrix exponential")
{
  const Symbol t("t");
  CHECK(mat_exp_ad(SymMatrix(3, 3), t, 1).is_identity());

  // nilpotent single entry: exp(-t N) = I - t N
  SymMatrix n(3, 3);
  n.at(0, 1) = RatExpr(1);
  SymMatrix expect = SymMatrix::identity(3);
  expect.at(0, 1) = parse_ratexpr("-t");
  CHECK(mat_exp_ad(n, t, -1) == expect);

  // diagonal diag(-1,-2,1): exp(-t A) = diag(e^t, e^2t, e^-t)
  SymMatrix dg(3, 3);
  dg.at(0, 0) = RatExpr(-1);
  dg.at(1, 1) = RatExpr(-2);
  dg.at(2, 2) = RatExpr(1);
  SymMatrix de(3, 3);
  de.at(0, 0) = parse_ratexpr("exp(t)");
  de.at(1, 1) = parse_ratexpr("exp(2*t)");
  de.at(2, 2) = parse_ratexpr("exp(-t)");
  CHECK(mat_exp_ad(dg, t, -1) == de);

  // rotation generator has no rational spectrum
  SymMatrix rot(2, 2);
  rot.at(0, 1) = RatExpr(-1);
  rot.at(1, 0) = RatExpr(1);
  CHECK_THROWS_AS(mat_exp_ad(rot, t, 1), RationalSpectrumRequired);
}

TEST_CASE("matrix exponential with a repeated eigenvalue and a Jordan block")
{
  // A = [[1,1],[0,1]]: exp(tA) = e^t [[1,t],[0,1]]
  SymMatrix a(2, 2);
  a.at(0, 0) = RatExpr(1);
  a.at(0, 1) = RatExpr(1);
  a.at(1, 1) = RatExpr(1);
  const Symbol t("t");
  const SymMatrix e = mat_exp_ad(a, t, 1);
  CHECK(e.at(0, 0) == parse_ratexpr("exp(t)"));
  CHECK(e.at(0, 1) == parse_ratexpr("t*exp(t)"));
  CHECK(e.at(1, 0).is_zero());
  // d/dt exp(tA) = A exp(tA)
  CHECK(e.differentiate(t) == a * e);
  CHECK(mat_exp_ad(a, t, 1) * mat_exp_ad(a, t, -1) == SymMatrix::identity(2));
}

TEST_CASE("rational roots")
{
  // (l - 1/2)(l + 3)(l^2 + 1)
  std::vector<Rational> residual;
  const auto roots = rational_roots({make_rational(-3, 2), make_rational(5, 2), make_rational(-1, 2), make_rational(5, 2), Rational(1)}, &residual);
  CHECK(roots.size() == 2);
  CHECK(residual.size() == 3);
}

TEST_CASE("row reduction and spans")
{
  const Vec a{parse_ratexpr("1"), parse_ratexpr("alpha")};
  const Vec b{parse_ratexpr("2"), parse_ratexpr("2*alpha")};
  CHECK(rank(SymMatrix::from_rows({a, b})) == 1);
  CHECK(same_span({a}, {b}, 2));
  const auto ns = nullspace(SymMatrix::from_rows({a}));
  REQUIRE(ns.size() == 1);
  CHECK((ns[0][0] * a[0] + ns[0][1] * a[1]).is_zero());
  CHECK(express_in_span({a}, b) == Vec{RatExpr(2)});
  CHECK(!express_in_span({a}, Vec{RatExpr(0), RatExpr(1)}));
}
