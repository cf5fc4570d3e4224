#pragma once

#include "galreal/rational.hpp"
#include "galreal/symbol.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace galreal {

/// Sparse vector over symbols: sorted by symbol, no zero entries.
using SparseVec = std::vector<std::pair<Symbol, Rational>>;

/// Lexicographic comparison of sparse vectors as dense vectors indexed by the
/// global symbol order (missing entries read as zero). Compatible with
/// addition, hence a monomial order.
int compare_sparse(const SparseVec & a, const SparseVec & b);

SparseVec add_sparse(const SparseVec & a, const SparseVec & b);
SparseVec scale_sparse(const SparseVec & a, const Rational & k);
Rational sparse_get(const SparseVec & a, const Symbol & s);

/// Monomial part times exponential part of a single term:
/// prod s^powers[s] * exp(sum exp_form[s] * s).
struct TermKey {
  SparseVec powers;
  SparseVec exp_form;

  friend bool operator==(const TermKey &, const TermKey &) = default;
};

struct TermKeyLess {
  bool operator()(const TermKey & a, const TermKey & b) const;
};

/// Finite sum of rational coefficient times monomial times exponential of a
/// rational linear form.
///
/// Monomial exponents are rationals so that the jet layer can host 1/x^3 or
/// t^(7/3); everything produced from polynomial input by ring operations,
/// differentiation and matrix exponentials keeps nonnegative integer powers.
/// The representation is canonical: equal values have identical term maps.
class ExpPoly {
public:
  using TermMap = std::map<TermKey, Rational, TermKeyLess>;

  ExpPoly() = default;
  ExpPoly(const Rational & c);  // NOLINT(google-explicit-constructor)
  ExpPoly(long c) : ExpPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ExpPoly symbol(const Symbol & s);
  static ExpPoly symbol(const std::string & name) { return symbol(Symbol(name)); }
  static ExpPoly coordinate(int index) { return symbol(Symbol::coordinate(index)); }
  static ExpPoly monomial(const Rational & c, SparseVec powers, SparseVec exp_form = {});
  /// exp(sum form[s] * s)
  static ExpPoly exponential(SparseVec form);

  const TermMap & terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; requires is_constant().
  Rational constant_value() const;
  bool is_single_term() const { return terms_.size() == 1; }
  /// Nonnegative integer powers only.
  bool is_polynomial_powers() const;
  bool has_exponentials() const;

  /// If the expression is sum c_s * s (no constant, no exponentials, linear powers) returns the form.
  std::optional<SparseVec> as_linear_form() const;

  std::set<Symbol> symbols() const;
  bool depends_on(const Symbol & s) const;

  ExpPoly operator-() const;
  ExpPoly & operator+=(const ExpPoly & o);
  ExpPoly & operator-=(const ExpPoly & o);
  ExpPoly & operator*=(const ExpPoly & o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly & b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly & b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly & a, const ExpPoly & b);
  friend bool operator==(const ExpPoly & a, const ExpPoly & b) { return a.terms_ == b.terms_; }

  ExpPoly pow(unsigned k) const;
  /// Arbitrary rational power; only defined for a single term with coefficient 1
  /// (or any coefficient when k is a nonnegative/negative integer).
  ExpPoly pow(const Rational & k) const;

  /// Multiplicative inverse of a single term.
  ExpPoly inverse_term() const;

  /// Leading term in the monomial order; requires a nonzero value.
  std::pair<TermKey, Rational> leading_term() const;

  ExpPoly differentiate(const Symbol & v) const;

  /// Simultaneous substitution. Symbols inside exponentials may only be
  /// replaced by homogeneous rational linear forms.
  ExpPoly substitute(const std::map<Symbol, ExpPoly> & bindings) const;

  /// Exact quotient a / b when it exists as an exp-polynomial.
  std::optional<ExpPoly> divide_exact(const ExpPoly & b) const;

  /// Numerical value; every symbol present must be bound.
  double evaluate(const std::map<std::string, double> & values) const;

  /// Splits into parts grouped by the projection of each term onto the given
  /// symbols: result[key restricted to symbols] = sum of remaining factors.
  std::map<TermKey, ExpPoly, TermKeyLess> collect(const std::set<Symbol> & symbols) const;

private:
  void add_term(const TermKey & key, const Rational & c);
  TermMap terms_;
};

ExpPoly term_to_exppoly(const TermKey & key, const Rational & c);

}  // namespace galreal
