#pragma once

#include "galreal/exppoly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace galreal {

/// Quotient of two exp-polynomials.
///
/// Normalization folds the denominator into the numerator whenever the
/// division is exact (always for a single-term denominator); otherwise the
/// denominator is scaled so that its leading term is 1. Equality is decided
/// by cross multiplication, so no gcd is needed for correctness.
class RatExpr {
public:
  RatExpr() = default;
  RatExpr(ExpPoly num);  // NOLINT(google-explicit-constructor)
  RatExpr(const Rational & c) : RatExpr(ExpPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatExpr(long c) : RatExpr(ExpPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatExpr(ExpPoly num, ExpPoly den);

  static RatExpr symbol(const std::string & name) { return RatExpr(ExpPoly::symbol(name)); }

  const ExpPoly & num() const { return num_; }
  const ExpPoly & den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_exppoly() const { return den_ == ExpPoly(1); }
  /// Numerator when the denominator is 1.
  std::optional<ExpPoly> as_exppoly() const;
  /// Throws UnsupportedExpression if a residual denominator remains.
  const ExpPoly & exppoly() const;
  bool is_constant() const { return is_exppoly() && num_.is_constant(); }
  Rational constant_value() const;

  std::set<Symbol> symbols() const;
  bool depends_on(const Symbol & s) const { return num_.depends_on(s) || den_.depends_on(s); }

  RatExpr operator-() const;
  friend RatExpr operator+(const RatExpr & a, const RatExpr & b);
  friend RatExpr operator-(const RatExpr & a, const RatExpr & b);
  friend RatExpr operator*(const RatExpr & a, const RatExpr & b);
  friend RatExpr operator/(const RatExpr & a, const RatExpr & b);
  RatExpr & operator+=(const RatExpr & o) { return *this = *this + o; }
  RatExpr & operator-=(const RatExpr & o) { return *this = *this - o; }
  RatExpr & operator*=(const RatExpr & o) { return *this = *this * o; }
  RatExpr & operator/=(const RatExpr & o) { return *this = *this / o; }

  /// Value equality (cross multiplication).
  friend bool operator==(const RatExpr & a, const RatExpr & b);

  RatExpr pow(long k) const;
  RatExpr differentiate(const Symbol & v) const;
  RatExpr substitute(const std::map<Symbol, ExpPoly> & bindings) const;
  RatExpr substitute(const std::map<Symbol, RatExpr> & bindings) const;
  double evaluate(const std::map<std::string, double> & values) const;

private:
  void normalize();
  ExpPoly num_;
  ExpPoly den_{1};
};

}  // namespace galreal
