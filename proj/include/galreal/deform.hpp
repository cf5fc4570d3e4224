#pragma once

#include "galreal/shirokov.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace galreal {

/// One-parameter family of brackets [.,.]_q; the algebra's constants depend on q.
struct DeformationFamily {
  LieAlgebra algebra;
  Symbol q;
  /// Set when some constant keeps a q-dependent denominator.
  bool rational_in_q = false;

  /// The q = 0 member.
  LieAlgebra base() const;
};

/// Contraction matrices are written as in print: row i is the i-th new basis
/// vector in the old basis, f_i = sum_j U_ij e_j.
using ContractionMatrix = SymMatrix;

DeformationFamily make_family(LieAlgebra l, const Symbol & q);

/// Brackets [f_i, f_j] expressed in the f basis, with q kept symbolic.
DeformationFamily deform_via_contraction(const LieAlgebra & l, const ContractionMatrix & u, const Symbol & q, std::vector<std::string> names = {});

/// Entry-wise limit q -> 0. Throws LimitDoesNotExist naming the first entry with a pole.
LieAlgebra contraction_limit(const LieAlgebra & l, const Symbol & q);
LieAlgebra contraction_limit(const DeformationFamily & f);

/// Limit of a single rational expression as s -> 0.
RatExpr limit_at_zero(const RatExpr & e, const Symbol & s);

/// Substitutes the bindings; binding q yields a fixed algebra, leaving it
/// unbound keeps the family.
DeformationFamily specialize(const DeformationFamily & f, const std::map<Symbol, RatExpr> & bindings);
LieAlgebra specialize_at(const DeformationFamily & f, const Rational & value);

/// Generic realization: the whole algebra is the complement, in the given order
/// (basis order when empty).
Realization deformed_generic_realization(const DeformationFamily & f, const std::vector<Vec> & complement = {});

/// Algebra text with a "deformation_parameter:" line.
DeformationFamily parse_family(std::string_view text);
/// One row per line, entries separated by commas, in the expression syntax.
ContractionMatrix parse_matrix(std::string_view text);

}  // namespace galreal
