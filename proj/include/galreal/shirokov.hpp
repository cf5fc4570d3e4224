#pragma once

#include "galreal/liealg.hpp"

#include <string>
#include <vector>

namespace galreal {

/// A vector field sum_a coeffs[a] d_a on ncoords coordinates.
using Field = Vec;

struct VectorFieldSet {
  std::size_t ncoords = 0;
  std::vector<std::string> labels;
  std::vector<Field> fields;
};

/// Complement vectors followed by subalgebra generators, in the algebra's basis.
struct Splitting {
  std::vector<Vec> complement;
  std::vector<Vec> sub;

  std::size_t m() const { return complement.size(); }
  /// Columns are complement then sub.
  LinearMap matrix() const;
};

void validate_splitting(const LieAlgebra & l, const Splitting & s);

struct Realization {
  LieAlgebra algebra;
  std::size_t m = 0;
  /// images[i] is the field of the i-th basis element of the algebra.
  std::vector<Field> images;
  std::string provenance;
  /// Informational notes per promoted coordinate (e.g. the parameter range).
  std::map<std::size_t, std::string> coordinate_notes;

  Field image(const Vec & v) const;
};

/// W with W[j][i] = omega^j_i; column i is column i of
/// exp(-x1 ad_1) ... exp(-x_{i-1} ad_{i-1}).
SymMatrix one_forms(const LieAlgebra & l);

/// Dual fields: the field of e_k is column k of W^{-1}.
VectorFieldSet left_invariant_fields(const LieAlgebra & l);

Realization realize(const LieAlgebra & l, const Splitting & s);

/// Same result, also returning the intermediate W of the adapted basis.
Realization realize(const LieAlgebra & l, const Splitting & s, SymMatrix * w_out, VectorFieldSet * fields_out);

/// Replaces the parameter by the new coordinate x_{m+1}. When p does not occur
/// the realization is returned unchanged and *warning is set.
Realization promote_parameter(const Realization & r, const Symbol & p, std::string * warning = nullptr);

Splitting parse_splitting(std::string_view text, const LieAlgebra & l);

std::vector<std::string> derivative_labels(std::size_t m);
std::vector<std::string> derivative_labels_latex(std::size_t m);

/// "NAME = <coeff>*d1 + ..." lines, one per basis element.
std::string render_realization(const Realization & r);
std::string render_realization_latex(const Realization & r);
/// Reads the lines produced by render_realization. m = 0 infers the count
/// from the highest d-index present.
Realization parse_realization(std::string_view text, const LieAlgebra & l, std::size_t m = 0);

}  // namespace galreal
