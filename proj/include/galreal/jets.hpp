#pragma once

#include "galreal/liealg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galreal {

/// Counts per independent variable, in declaration order.
using MultiIndex = std::vector<int>;

/// Function of the independents with a known derivative, e.g. s = sin(2t) with ds/dt = 2c.
struct Auxiliary {
  Symbol symbol;
  /// d(symbol)/d(independent k)
  std::vector<RatExpr> derivatives;
};

/// Jet coordinates are named dependent + "_" + independent letters in
/// declaration order (u_t, u_xx, u_tx). Independents are single letters and
/// dependents carry no underscore.
class JetSpace {
public:
  JetSpace() = default;
  JetSpace(std::vector<std::string> independents, std::vector<std::string> dependents, int max_order);

  const std::vector<std::string> & independents() const { return independents_; }
  const std::vector<std::string> & dependents() const { return dependents_; }
  int max_order() const { return max_order_; }

  Symbol independent(std::size_t k) const { return Symbol(independents_[k]); }
  Symbol coordinate(std::size_t dep, const MultiIndex & j) const;
  /// Jet coordinate by letters, e.g. derivative("u", "xx").
  Symbol derivative(const std::string & dep, std::string_view letters) const;
  MultiIndex index(std::string_view letters) const;
  /// (dependent, multi-index) for u or u_J symbols, nullopt otherwise.
  std::optional<std::pair<std::size_t, MultiIndex>> decode(const Symbol & s) const;

  void add_auxiliary(Auxiliary a) { aux_.push_back(std::move(a)); }
  const std::vector<Auxiliary> & auxiliaries() const { return aux_; }
  /// Declares s^2 + c^2 = 1; zero tests go through the rational parametrization of the circle.
  void add_circle(const Symbol & s, const Symbol & c) { circles_.emplace_back(s, c); }
  const std::vector<std::pair<Symbol, Symbol>> & circles() const { return circles_; }

private:
  std::vector<std::string> independents_;
  std::vector<std::string> dependents_;
  int max_order_ = 0;
  std::vector<Auxiliary> aux_;
  std::vector<std::pair<Symbol, Symbol>> circles_;
};

/// Rational function of the jet coordinates; monomial denominators cover 1/x^3 and u^-1.
using DifferentialFunction = RatExpr;

DifferentialFunction total_derivative(const JetSpace & js, const DifferentialFunction & f, std::size_t v);

/// Exact zero test modulo the declared circle relations.
bool is_zero_on(const JetSpace & js, const RatExpr & f);

/// X = xi^i d_{x^i} + phi^a d_{u^a}, coefficients of order 0.
struct SymmetryCandidate {
  std::string name;
  std::vector<RatExpr> xi;
  std::vector<RatExpr> phi;
};

struct Prolongation {
  /// (dependent, multi-index) -> phi^{a,J}; the empty index holds phi^a.
  std::map<std::pair<std::size_t, MultiIndex>, RatExpr> coefficients;
  const RatExpr & at(std::size_t dep, const MultiIndex & j) const;
};

/// phi^{a,J+v} = D_v phi^{a,J} - sum_i (D_v xi^i) u^a_{J+i}, for |J| <= order.
Prolongation prolong(const JetSpace & js, const SymmetryCandidate & x, int order);

/// lead = rhs with lead a jet coordinate u^a_J.
struct JetEquation {
  std::size_t dependent = 0;
  MultiIndex lead;
  RatExpr rhs;
};

struct SymmetryCheck {
  bool ok = false;
  /// Per equation, X^(k) Delta after eliminating the principal derivatives.
  std::vector<RatExpr> residuals;
};

SymmetryCheck check_point_symmetry(const JetSpace & js, const std::vector<JetEquation> & eqs, const SymmetryCandidate & x);

/// Replaces every derivative of a declared lead by the corresponding derivative of its rhs.
RatExpr eliminate_principal(const JetSpace & js, const std::vector<JetEquation> & eqs, const RatExpr & f);

/// X(f) for a point field; auxiliaries follow the chain rule.
RatExpr apply_point(const JetSpace & js, const SymmetryCandidate & x, const RatExpr & f);
SymmetryCandidate point_bracket(const JetSpace & js, const SymmetryCandidate & a, const SymmetryCandidate & b);

/// Structure constants of the span of the operators, in the operator basis.
/// Throws InputError when a bracket leaves the span.
LieAlgebra operator_algebra(const JetSpace & js, const std::vector<SymmetryCandidate> & ops, const std::string & name);

/// One parsed equation file at one sample of its parameters.
struct SymmetryProblem {
  std::string name;
  std::string sample;
  JetSpace jets;
  std::vector<JetEquation> equations;
  std::vector<SymmetryCandidate> operators;
  /// Claimed abstract algebra and its basis written in the operators.
  std::string algebra;
  std::map<std::string, std::string> algebra_bindings;
  std::vector<std::string> correspondence;
};

/// Parses an equation file; one problem per "sample:" line (one problem when there is none).
std::vector<SymmetryProblem> parse_symmetry_file(std::string_view text);
std::vector<SymmetryProblem> load_symmetry_file(const std::string & path);

struct SymmetryReport {
  std::string problem;
  std::vector<std::pair<std::string, bool>> operators;
  /// Empty when the file declares no algebra.
  std::optional<bool> algebra_ok;
  std::string algebra_detail;
  bool ok() const;
};

SymmetryReport verify_symmetry_problem(const SymmetryProblem & p);

/// Replaces whole-word identifiers; used to instantiate sampled parameters.
std::string substitute_identifiers(std::string_view text, const std::map<std::string, std::string> & values);

}  // namespace galreal
