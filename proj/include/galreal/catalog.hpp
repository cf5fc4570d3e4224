#pragma once

#include "galreal/deform.hpp"

#include <string>
#include <vector>

namespace galreal {

enum class GalileiKind { Classical = 1, Extended = 2, Special = 3, Full = 4 };

/// AG_k(n) when with_mass, the reduced algebra AbarG_k(n) otherwise.
struct GalileiSpec {
  GalileiKind kind = GalileiKind::Classical;
  bool with_mass = true;
  int n = 1;

  std::string name() const;
  std::size_t expected_dim() const;
};

/// Basis P_i, T, J_ij (i<j), G_i, then D, S, Z, M as present. For n = 1 the
/// labels carry no index.
LieAlgebra galilei_algebra(const GalileiSpec & spec);

/// The deformed reduced extended and extended families in n dimensions.
DeformationFamily galilei_deformed(GalileiKind kind, bool with_mass, int n, const Symbol & q);

/// Directory holding the shipped data; GALREAL_DATA overrides the built-in path.
std::string data_dir();

/// Catalog algebra by file id, e.g. "A48" or "AbarG2".
LieAlgebra catalog_algebra(const std::string & id);
std::vector<std::string> catalog_algebra_ids();

DeformationFamily catalog_family(const std::string & id);
std::vector<std::string> catalog_family_ids();

ContractionMatrix catalog_matrix(const std::string & id);

}  // namespace galreal
