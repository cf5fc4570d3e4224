#pragma once

#include "galreal/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace galreal {

/// Parses "c1*A + c2*B - ..." into coefficients over the given labels.
/// Coefficients are arbitrary expressions free of the labels themselves.
Vec parse_combination(std::string_view text, const std::vector<std::string> & labels);

/// Inverse of parse_combination; "0" for the zero vector.
std::string render_combination(const Vec & coeffs, const std::vector<std::string> & labels);

/// LaTeX variant; labels are emitted verbatim.
std::string render_combination_latex(const Vec & coeffs, const std::vector<std::string> & labels);

}  // namespace galreal
