#pragma once

#include "galreal/shirokov.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galreal {

/// [X,Y]^a = X(Y^a) - Y(X^a) on coordinates x1..xm.
Field vf_bracket(const Field & x, const Field & y);
/// X(f) for a scalar function.
RatExpr apply_field(const Field & x, const RatExpr & f);

struct RelationFailure {
  std::size_t i, j;
  Field residual;
};

struct RelationReport {
  bool ok = true;
  std::vector<RelationFailure> failures;
};

/// R([e_i,e_j]) == [R(e_i),R(e_j)] for all i < j.
RelationReport check_relations(const Realization & r);

/// Constant vectors c (over the parameter fraction field) with sum c_i R(e_i) = 0.
std::vector<Vec> realization_kernel(const Realization & r);

/// W * Xi == I where Xi has the fields as columns.
bool duality_check(const SymMatrix & w, const VectorFieldSet & fields);

struct CoordinateMap {
  /// images[a] = y_{a+1} as a function of the source coordinates x1..xm.
  std::vector<RatExpr> images;
  std::optional<std::vector<RatExpr>> inverse;

  static CoordinateMap identity(std::size_t m);
  std::size_t m() const { return images.size(); }
};

/// y = phi(x); the inverse, when declared, must compose to the identity both ways.
void validate_coordinate_map(const CoordinateMap & phi);

/// True iff R2(e_i) = phi_*(R1(U e_i)) for every basis element, where U e_i
/// is column i of U (identity when absent). The check pulls R2 back along phi
/// instead of inverting phi.
bool compare_realizations(const Realization & r1, const Realization & r2, const CoordinateMap & phi, const std::optional<LinearMap> & u = std::nullopt);

CoordinateMap parse_coordinate_map(std::string_view text, std::size_t m);

}  // namespace galreal
