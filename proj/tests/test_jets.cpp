#include "doctest.h"

#include "galreal/catalog.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/jets.hpp"

#include <cmath>
#include <filesystem>

using namespace galreal;

namespace {

RatExpr R(const char * s) { return parse_ratexpr(s); }

JetSpace tx(int order = 3) { return JetSpace({"t", "x"}, {"u"}, order); }

SymmetryCandidate field(const char * name, std::vector<const char *> xi, std::vector<const char *> phi)
{
  SymmetryCandidate x;
  x.name = name;
  for (auto * s : xi) {
    x.xi.push_back(R(s));
  }
  for (auto * s : phi) {
    x.phi.push_back(R(s));
  }
  return x;
}

std::vector<JetEquation> burgers(const JetSpace & js, const char * mu = "mu")
{
  return {{0, js.index("t"), R((std::string("-u*u_x + ") + mu + "*u_xx").c_str())}};
}

}  // namespace

TEST_CASE("jet coordinates are symmetric in the multi-index")
{
  const JetSpace js = tx();
  CHECK(js.derivative("u", "xt") == js.derivative("u", "tx"));
  CHECK(js.derivative("u", "tx").name() == "u_tx");
  const auto d = js.decode(Symbol("u_xx"));
  REQUIRE(d);
  CHECK(d->second == MultiIndex{0, 2});
  CHECK_FALSE(js.decode(Symbol("mu")));
}

TEST_CASE("total derivatives")
{
  const JetSpace js = tx();
  CHECK(total_derivative(js, R("u"), 1) == R("u_x"));
  CHECK(total_derivative(js, R("x"), 0).is_zero());
  const RatExpr d = total_derivative(js, R("u*u_x"), 1);
  CHECK(d == R("u_x^2 + u*u_xx"));

  // along u = t*x^2 + 3*x the total derivative is the ordinary x-derivative of u*u_x
  const double t = 0.7, x = -1.3;
  const double u = t * x * x + 3 * x, ux = 2 * t * x + 3, uxx = 2 * t;
  const double direct = ux * ux + u * uxx;
  CHECK(d.evaluate({{"u", u}, {"u_x", ux}, {"u_xx", uxx}}) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("prolongation of simple fields")
{
  const JetSpace js = tx(5);
  const Prolongation trans = prolong(js, field("dx", {"0", "1"}, {"0"}), 5);
  for (const auto & [key, c] : trans.coefficients) {
    CHECK(c.is_zero());
  }

  const Prolongation boost = prolong(js, field("boost", {"0", "t"}, {"1"}), 1);
  CHECK(boost.at(0, js.index("t")) == R("-u_x"));
  CHECK(boost.at(0, js.index("x")).is_zero());

  const Prolongation scale = prolong(js, field("scale", {"2*t", "x"}, {"-u"}), 2);
  CHECK(scale.at(0, js.index("x")) == R("-2*u_x"));
  CHECK(scale.at(0, js.index("t")) == R("-3*u_t"));
  CHECK(scale.at(0, js.index("xx")) == R("-3*u_xx"));
}

TEST_CASE("prolongation is linear in the field")
{
  const JetSpace js = tx(3);
  const auto x = field("X", {"t^2", "t*x"}, {"x - t*u"});
  const auto y = field("Y", {"1", "u"}, {"x*u^2"});
  const auto c = field("aX+bY", {"2*t^2 - 3", "2*t*x - 3*u"}, {"2*(x - t*u) - 3*x*u^2"});
  const Prolongation px = prolong(js, x, 3), py = prolong(js, y, 3), pc = prolong(js, c, 3);
  for (const auto & [key, v] : pc.coefficients) {
    CHECK(v == R("2") * px.at(key.first, key.second) - R("3") * py.at(key.first, key.second));
  }
}

TEST_CASE("Burgers symmetries")
{
  const JetSpace js = tx();
  const auto eqs = burgers(js);
  const std::vector<SymmetryCandidate> ops = {
      field("X1", {"1", "0"}, {"0"}),
      field("X2", {"2*t", "x"}, {"-u"}),
      field("X3", {"t^2", "t*x"}, {"x - t*u"}),
      field("X4", {"0", "1"}, {"0"}),
      field("X5", {"0", "t"}, {"1"}),
  };
  for (const auto & op : ops) {
    CAPTURE(op.name);
    CHECK(check_point_symmetry(js, eqs, op).ok);
    CHECK(check_point_symmetry(js, burgers(js, "1"), op).ok);
  }
  const SymmetryCheck du = check_point_symmetry(js, eqs, field("du", {"0", "0"}, {"1"}));
  CHECK_FALSE(du.ok);
  REQUIRE(du.residuals.size() == 1);
  CHECK((du.residuals[0] == R("u_x") || du.residuals[0] == R("-u_x")));
}

TEST_CASE("KdV scaling")
{
  const JetSpace js = tx();
  const std::vector<JetEquation> kdv = {{0, js.index("t"), R("-u*u_x - u_xxx")}};
  CHECK(check_point_symmetry(js, kdv, field("e4", {"t", "1/3*x"}, {"-2/3*u"})).ok);
  CHECK_FALSE(check_point_symmetry(js, kdv, field("bad", {"t", "1/2*x"}, {"-2/3*u"})).ok);
}

TEST_CASE("principal derivatives are eliminated")
{
  const JetSpace js = tx(3);
  const auto eqs = burgers(js);
  CHECK(eliminate_principal(js, eqs, R("u_t")) == R("-u*u_x + mu*u_xx"));
  CHECK(eliminate_principal(js, eqs, R("u_tx")) == R("-u_x^2 - u*u_xx + mu*u_xxx"));
}

TEST_CASE("operator brackets and extracted structure constants")
{
  const JetSpace js = tx();
  const auto p = field("X4", {"0", "1"}, {"0"});
  const auto g = field("X5", {"0", "t"}, {"1"});
  const auto t = field("X1", {"1", "0"}, {"0"});
  const SymmetryCandidate b = point_bracket(js, t, g);
  CHECK(b.xi[0].is_zero());
  CHECK(b.xi[1] == R("1"));
  CHECK(b.phi[0].is_zero());

  const LieAlgebra l = operator_algebra(js, {t, p, g}, "galilei");
  CHECK(l.bracket(l.vector("X1"), l.vector("X5")) == l.vector("X4"));
  CHECK(jacobi_check(l).holds);

  CHECK_THROWS_AS(operator_algebra(js, {t, field("Y", {"t^2", "0"}, {"0"})}, "open"), InputError);
}

TEST_CASE("ODE systems with negative powers")
{
  const JetSpace js({"t"}, {"x", "y"}, 2);
  const std::vector<JetEquation> eqs = {{0, js.index("tt"), R("F/x^3")}, {1, js.index("tt"), R("G/y^3")}};
  CHECK(check_point_symmetry(js, eqs, field("e3", {"t^2"}, {"t*x", "t*y"})).ok);
  CHECK_FALSE(check_point_symmetry(js, eqs, field("bad", {"t^2"}, {"t*x", "0"})).ok);
}

TEST_CASE("circle relation in zero tests")
{
  JetSpace js({"t"}, {"r"}, 2);
  js.add_auxiliary({Symbol("s"), {R("2*c")}});
  js.add_auxiliary({Symbol("c"), {R("-2*s")}});
  js.add_circle(Symbol("s"), Symbol("c"));
  CHECK(is_zero_on(js, R("s^2 + c^2 - 1")));
  CHECK(is_zero_on(js, R("s^4 - c^4 - s^2 + c^2")));
  CHECK_FALSE(is_zero_on(js, R("s^2 - c^2")));
  CHECK(total_derivative(js, R("s*c"), 0) == R("2*c^2 - 2*s^2"));
}

TEST_CASE("equation files")
{
  const auto problems = parse_symmetry_file(
      "name: demo\nindependent: t x\ndependent: u\nsample: n = 2\nsample: n = 3\n"
      "equation: u_t = u^n*u_x\noperator A: xi_x = 1\noperator B: xi_t = 1\n");
  REQUIRE(problems.size() == 2);
  CHECK(problems[0].equations[0].rhs == R("u^2*u_x"));
  CHECK(problems[1].equations[0].rhs == R("u^3*u_x"));
  for (const auto & p : problems) {
    CHECK(verify_symmetry_problem(p).ok());
  }
  CHECK_THROWS_AS(parse_symmetry_file("name: x\nindependent: t x\ndependent: u\noperator A: xi_y = 1\n"), Error);
  CHECK(substitute_identifiers("n*u^(n - 1) + nn", {{"n", "2"}}) == "(2)*u^((2) - 1) + nn");
}

TEST_CASE("shipped equation files verify")
{
  for (const auto & entry : std::filesystem::directory_iterator(data_dir() + "/equations")) {
    for (const auto & p : load_symmetry_file(entry.path().string())) {
      CAPTURE(p.name);
      CAPTURE(p.sample);
      const SymmetryReport r = verify_symmetry_problem(p);
      CHECK(r.ok());
      CHECK(r.algebra_ok.value_or(false));
    }
  }
}

TEST_CASE("a wrong correspondence is rejected")
{
  auto problems = load_symmetry_file(data_dir() + "/equations/burgers.eq");
  REQUIRE(problems.size() == 1);
  auto p = problems.front();
  p.correspondence = {"P = X4", "T = X1", "G = X5", "D = X2", "S = X3"};
  const SymmetryReport r = verify_symmetry_problem(p);
  REQUIRE(r.algebra_ok);
  CHECK_FALSE(*r.algebra_ok);
}
