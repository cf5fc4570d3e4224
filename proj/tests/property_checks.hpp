#pragma once

// Randomized checks shared by the unit tests and the acceptance run.

#include "galreal/catalog.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace props {

using namespace galreal;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string & what)
  {
    if (failures++ == 0) {
      first_failure = what;
    }
  }
  bool ok() const { return failures == 0 && cases > 0; }
};

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string rational()
  {
    const int n = integer(-5, 5), d = integer(1, 3);
    return d == 1 ? "(" + std::to_string(n) + ")" : "(" + std::to_string(n) + "/" + std::to_string(d) + ")";
  }

  /// Exp-polynomial in x1, x2 with a few terms.
  std::string exppoly(int max_terms = 3)
  {
    std::string out;
    const int terms = integer(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      std::string t = rational();
      for (const char * v : {"x1", "x2"}) {
        const int p = integer(0, 2);
        if (p) {
          t += std::string("*") + v + "^" + std::to_string(p);
        }
      }
      if (integer(0, 2) == 0) {
        t += "*exp(" + std::to_string(integer(-2, 2)) + "*x1 + " + std::to_string(integer(-2, 2)) + "*x2)";
      }
      out += (k ? " + " : "") + t;
    }
    return out;
  }

  /// Raw expression built from sums, products, small powers and quotients by monomials.
  std::string tree(int depth)
  {
    if (depth == 0) {
      return "(" + exppoly(2) + ")";
    }
    switch (integer(0, 4)) {
      case 0: return "(" + tree(depth - 1) + " + " + tree(depth - 1) + ")";
      case 1: return "(" + tree(depth - 1) + " - " + tree(depth - 1) + ")";
      case 2: return tree(depth - 1) + "*" + tree(depth - 1);
      case 3: return "(" + tree(depth - 1) + ")^" + std::to_string(integer(0, 2));
      default: return "(" + tree(depth - 1) + ")/(" + rational_nonzero() + "*x1^" + std::to_string(integer(0, 2)) + ")";
    }
  }

  std::string rational_nonzero()
  {
    const int n = integer(1, 5) * (integer(0, 1) ? 1 : -1);
    return "(" + std::to_string(n) + "/" + std::to_string(integer(1, 3)) + ")";
  }

  double point() { return std::uniform_real_distribution<double>(0.3, 1.2)(rng_); }

private:
  std::mt19937_64 rng_;
};

inline bool close(double a, double b, double rel = 1e-9)
{
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

inline Outcome canonical_idempotence(int n, std::uint64_t seed)
{
  Outcome o{"canonicalize idempotence"};
  Gen g(seed);
  for (int i = 0; i < n; ++i, ++o.cases) {
    const std::string text = g.tree(g.integer(1, 3));
    const RatExpr c = parse_ratexpr(text);
    const RatExpr again = parse_ratexpr(to_text(c));
    if (to_text(again) != to_text(c) || !(again.num() == c.num()) || !(again.den() == c.den())) {
      o.fail(text);
    }
  }
  return o;
}

inline Outcome ring_laws(int n, std::uint64_t seed)
{
  Outcome o{"ring laws"};
  Gen g(seed);
  for (int i = 0; i < n; ++i, ++o.cases) {
    const ExpPoly a = parse_exppoly(g.exppoly()), b = parse_exppoly(g.exppoly()), c = parse_exppoly(g.exppoly());
    const bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                    a * (b + c) == a * b + a * c && (a - a).is_zero() && a * ExpPoly(1) == a && (a * ExpPoly(0)).is_zero();
    if (!ok) {
      o.fail(to_text(a) + " | " + to_text(b) + " | " + to_text(c));
    }
  }
  return o;
}

inline Outcome product_rule(int n, std::uint64_t seed)
{
  Outcome o{"product rule"};
  Gen g(seed);
  const Symbol x1 = Symbol::coordinate(1), x2 = Symbol::coordinate(2);
  for (int i = 0; i < n; ++i, ++o.cases) {
    const RatExpr a = parse_ratexpr(g.tree(1)), b = parse_ratexpr(g.exppoly());
    for (const auto & v : {x1, x2}) {
      if (!((a * b).differentiate(v) == a.differentiate(v) * b + a * b.differentiate(v))) {
        o.fail(to_text(a) + " | " + to_text(b));
      }
    }
  }
  return o;
}

inline Field random_field(Gen & g, std::size_t m)
{
  Field f;
  for (std::size_t k = 0; k < m; ++k) {
    f.push_back(g.integer(0, 3) == 0 ? RatExpr(0) : parse_ratexpr(g.exppoly(2)));
  }
  return f;
}

inline Outcome bracket_laws(int n, std::uint64_t seed)
{
  Outcome o{"vf_bracket antisymmetry and Jacobi"};
  Gen g(seed);
  for (int i = 0; i < n; ++i, ++o.cases) {
    const Field x = random_field(g, 2), y = random_field(g, 2), z = random_field(g, 2);
    const Field xy = vf_bracket(x, y), yx = vf_bracket(y, x);
    bool ok = true;
    for (std::size_t k = 0; k < 2; ++k) {
      ok = ok && (xy[k] + yx[k]).is_zero();
    }
    const Field j1 = vf_bracket(x, vf_bracket(y, z)), j2 = vf_bracket(y, vf_bracket(z, x)), j3 = vf_bracket(z, vf_bracket(x, y));
    for (std::size_t k = 0; k < 2; ++k) {
      ok = ok && (j1[k] + j2[k] + j3[k]).is_zero();
    }
    if (!ok) {
      o.fail("fields on two coordinates");
    }
  }
  return o;
}

/// Every catalog and low-dimensional Galilei algebra, parameters at the given values.
inline std::vector<LieAlgebra> sample_algebras(const std::map<Symbol, RatExpr> & params)
{
  std::vector<LieAlgebra> out;
  for (const auto & id : catalog_algebra_ids()) {
    out.push_back(catalog_algebra(id).substitute(params));
  }
  for (int k = 1; k <= 4; ++k) {
    for (bool mass : {false, true}) {
      for (int n = 1; n <= 2; ++n) {
        out.push_back(galilei_algebra({GalileiKind(k), mass, n}));
      }
    }
  }
  return out;
}

/// exp(A) exp(-A) = I and the series agrees with Putzer on nilpotent adjoints;
/// random combinations of basis elements with random parameter values.
inline Outcome exponentials(int n, std::uint64_t seed, int * nilpotent_seen = nullptr)
{
  Outcome o{"matrix exponential identities"};
  Gen g(seed);
  const Symbol t("t");
  int nil = 0;
  for (int i = 0; i < n; ++i, ++o.cases) {
    std::map<Symbol, RatExpr> params;
    for (const char * p : {"alpha", "beta", "h"}) {
      params[Symbol(p)] = parse_ratexpr(g.rational_nonzero());
    }
    const auto algebras = sample_algebras(params);
    const LieAlgebra & l = algebras[static_cast<std::size_t>(g.integer(0, static_cast<int>(algebras.size()) - 1))];
    Vec v(l.dim());
    // sparse combinations keep the nilpotent share high
    for (std::size_t k = 0; k < l.dim(); ++k) {
      if (g.integer(0, 2) == 0) {
        v[k] = parse_ratexpr(g.rational());
      }
    }
    const SymMatrix a = adjoint(l, v);
    try {
      const SymMatrix e = mat_exp_ad(a, t, 1), f = mat_exp_ad(a, t, -1);
      if (!(e * f).is_identity()) {
        o.fail(l.name() + ": exp(tA) exp(-tA) != I");
      }
      if (auto s = mat_exp_series(a, t)) {
        ++nil;
        if (!(*s == mat_exp_putzer(a, t))) {
          o.fail(l.name() + ": series and Putzer differ");
        }
      }
    } catch (const RationalSpectrumRequired &) {
      // sl(2)-type elements with irrational spectrum are out of scope
    }
  }
  if (nilpotent_seen) {
    *nilpotent_seen = nil;
  }
  return o;
}

/// Every basis element with a nilpotent adjoint, in every catalog algebra.
inline Outcome nilpotent_catalog_adjoints()
{
  Outcome o{"Putzer equals series on nilpotent catalog adjoints"};
  const Symbol t("t");
  const std::map<Symbol, RatExpr> params{{Symbol("alpha"), RatExpr(Rational(1, 3))}, {Symbol("beta"), RatExpr(Rational(-1, 2))}, {Symbol("h"), RatExpr(-2)}};
  for (const auto & l : sample_algebras(params)) {
    for (std::size_t i = 0; i < l.dim(); ++i) {
      const SymMatrix a = adjoint(l, l.unit(i));
      if (auto s = mat_exp_series(a, t)) {
        ++o.cases;
        if (!(*s == mat_exp_putzer(a, t)) || !(*s * mat_exp_ad(a, t, -1)).is_identity()) {
          o.fail(l.name() + " ad(" + l.basis()[i] + ")");
        }
      }
    }
  }
  return o;
}

inline Outcome numeric_sampling(int n, std::uint64_t seed)
{
  Outcome o{"numeric sampling consistency"};
  Gen g(seed);
  for (int i = 0; i < n; ++i, ++o.cases) {
    const std::string text = g.tree(g.integer(1, 3));
    const ExprTree raw = parse_expression(text);
    const RatExpr c = canonicalize_rational(raw);
    const std::map<std::string, double> at{{"x1", g.point()}, {"x2", g.point()}};
    const double a = evaluate(raw, at), b = c.evaluate(at);
    if (!close(a, b)) {
      o.fail(text + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
  }
  return o;
}

}  // namespace props
