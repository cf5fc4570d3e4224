#pragma once

#include "galreal/ratexpr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galreal {

using Vec = std::vector<RatExpr>;

/// Dense matrix of rational expressions, row-major.
class SymMatrix {
public:
  SymMatrix() = default;
  SymMatrix(std::size_t rows, std::size_t cols);
  static SymMatrix identity(std::size_t n);
  static SymMatrix from_rows(const std::vector<Vec> & rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  RatExpr & at(std::size_t i, std::size_t j);
  const RatExpr & at(std::size_t i, std::size_t j) const;
  RatExpr & operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const RatExpr & operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  SymMatrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  /// Every entry has a trivial denominator.
  bool is_exppoly() const;
  RatExpr trace() const;

  SymMatrix operator-() const;
  friend SymMatrix operator+(const SymMatrix & a, const SymMatrix & b);
  friend SymMatrix operator-(const SymMatrix & a, const SymMatrix & b);
  friend SymMatrix operator*(const SymMatrix & a, const SymMatrix & b);
  friend SymMatrix operator*(const RatExpr & k, const SymMatrix & a);
  friend Vec operator*(const SymMatrix & a, const Vec & v);
  friend bool operator==(const SymMatrix & a, const SymMatrix & b);

  SymMatrix substitute(const std::map<Symbol, RatExpr> & bindings) const;
  SymMatrix differentiate(const Symbol & v) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatExpr> data_;
};

std::string to_text(const SymMatrix & m);

RatExpr determinant(const SymMatrix & m);

/// Exact inverse. Throws SingularMatrix when the determinant vanishes identically.
SymMatrix mat_inverse(const SymMatrix & m);

/// Coefficients c_0..c_n of det(lambda I - A), c_n = 1.
std::vector<RatExpr> characteristic_polynomial(const SymMatrix & a);

/// Rational roots of a polynomial with rational coefficients (ascending order of
/// coefficients), with multiplicity. Whatever does not split is returned in residual.
std::vector<Rational> rational_roots(std::vector<Rational> coeffs, std::vector<Rational> * residual = nullptr);

/// exp(sign * t * A), exact. A must not depend on t. Nilpotent matrices are
/// handled by the finite series; otherwise the spectrum must be rational.
SymMatrix mat_exp_ad(const SymMatrix & a, const Symbol & t, int sign);
/// exp(tA) by the terminating series; nullopt unless A is nilpotent.
std::optional<SymMatrix> mat_exp_series(const SymMatrix & a, const Symbol & t);
/// exp(tA) by Putzer's method; constant entries with rational spectrum only.
SymMatrix mat_exp_putzer(const SymMatrix & a, const Symbol & t);

/// Reduced row echelon form over the fraction field of the entry symbols.
struct RowReduction {
  SymMatrix rref;
  std::vector<std::size_t> pivots;
  /// Non-constant pivots that were assumed nonzero.
  std::vector<RatExpr> conditions;
};

RowReduction row_reduce(const SymMatrix & m);
std::size_t rank(const SymMatrix & m);
/// Basis of {v : m v = 0}.
std::vector<Vec> nullspace(const SymMatrix & m);
/// Basis of the row space in reduced echelon form (canonical for comparisons).
std::vector<Vec> canonical_span(const std::vector<Vec> & vectors, std::size_t dim);
bool same_span(const std::vector<Vec> & a, const std::vector<Vec> & b, std::size_t dim);
/// Coefficients c with sum c_k basis[k] == v, if v lies in the span.
std::optional<Vec> express_in_span(const std::vector<Vec> & basis, const Vec & v);

}  // namespace galreal
