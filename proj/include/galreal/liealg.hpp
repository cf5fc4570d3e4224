#pragma once

#include "galreal/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace galreal {

struct ParamInfo {
  Symbol symbol;
  std::string range;  // informational, e.g. "alpha >= 0"
};

/// Finite-dimensional Lie algebra given by structure constants in a named basis.
///
/// Constants are rational expressions in the parameter symbols; most are
/// polynomial, deformation families may carry denominators such as 1 - beta.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis, std::vector<ParamInfo> params = {});

  const std::string & name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string> & basis() const { return basis_; }
  const std::vector<ParamInfo> & params() const { return params_; }
  void add_param(ParamInfo p);
  std::size_t index_of(std::string_view label) const;

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vec & v);
  void set_bracket(std::string_view a, std::string_view b, std::string_view combination);
  const Vec & bracket_basis(std::size_t i, std::size_t j) const { return c_[i * dim() + j]; }
  Vec bracket(const Vec & x, const Vec & y) const;

  Vec unit(std::size_t i) const;
  Vec vector(std::string_view combination) const;

  LieAlgebra substitute(const std::map<Symbol, RatExpr> & bindings) const;
  std::set<Symbol> symbols() const;
  bool same_constants(const LieAlgebra & other) const;

  /// Basis convention note carried through change_basis.
  const std::string & convention() const { return convention_; }
  void set_convention(std::string c) { convention_ = std::move(c); }

private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<ParamInfo> params_;
  std::vector<Vec> c_;
  std::string convention_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vec residual;
};

struct JacobiReport {
  bool holds = true;
  std::vector<JacobiViolation> violations;
};

JacobiReport jacobi_check(const LieAlgebra & l);

/// Matrix of ad_v: column i holds [v, e_i].
SymMatrix adjoint(const LieAlgebra & l, const Vec & v);

/// Linear maps act on coordinate columns; column i is the image of e_i (or,
/// for a basis change, the i-th new basis vector in old coordinates).
using LinearMap = SymMatrix;

/// Builds a map from a list of image rows, row i = image of e_i.
inline LinearMap map_from_image_rows(const std::vector<Vec> & rows) { return SymMatrix::from_rows(rows).transpose(); }

/// Structure constants in the basis f_i = sum_j U_ji e_j.
LieAlgebra change_basis(const LieAlgebra & l, const LinearMap & u, std::vector<std::string> new_names = {});
/// change_basis with the new vectors written as combinations, e.g. {"e2", "-e4", "e3", "e1"}.
LieAlgebra in_basis(const LieAlgebra & l, const std::vector<std::string> & combos, std::vector<std::string> new_names);

/// U[x,y] == [Ux,Uy] identically.
bool is_automorphism(const LieAlgebra & l, const LinearMap & u);
/// As is_automorphism but between two algebras of the same dimension.
bool is_homomorphism(const LieAlgebra & from, const LieAlgebra & to, const LinearMap & u);

bool subalgebra_closed(const LieAlgebra & l, const std::vector<Vec> & gens);
/// Largest ideal of l contained in span(gens); returned in canonical echelon form.
std::vector<Vec> largest_ideal_in(const LieAlgebra & l, const std::vector<Vec> & gens);
bool is_ideal(const LieAlgebra & l, const std::vector<Vec> & gens);

/// Text formats.
LieAlgebra parse_algebra(std::string_view text);
LieAlgebra load_algebra(const std::string & path);
std::string render_algebra(const LieAlgebra & l);
std::string render_algebra_latex(const LieAlgebra & l);

struct SubalgebraSpec {
  std::string parent;
  std::vector<Vec> gens;
};
SubalgebraSpec parse_subalgebra(std::string_view text, const LieAlgebra & parent);

/// "key: value" lines with '#' comments; shared by the file formats.
std::vector<std::pair<std::string, std::string>> parse_key_lines(std::string_view text);
std::string read_file(const std::string & path);

}  // namespace galreal
