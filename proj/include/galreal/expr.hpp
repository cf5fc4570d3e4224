#pragma once

#include "galreal/exppoly.hpp"
#include "galreal/ratexpr.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace galreal {

struct ExprNode;
using ExprTree = std::shared_ptr<const ExprNode>;

/// Raw (uncanonicalized) expression tree, as produced by the parser.
struct ExprNode {
  enum class Kind { Number, Symbol, Add, Mul, Neg, Div, Pow, Exp };

  Kind kind = Kind::Number;
  Rational value;    // Number, or the exponent of Pow
  std::string name;  // Symbol
  std::vector<ExprTree> args;

  static ExprTree number(const Rational & v);
  static ExprTree symbol(std::string name);
  static ExprTree add(ExprTree a, ExprTree b);
  static ExprTree mul(ExprTree a, ExprTree b);
  static ExprTree neg(ExprTree a);
  static ExprTree div(ExprTree a, ExprTree b);
  static ExprTree power(ExprTree base, const Rational & exponent);
  static ExprTree exp(ExprTree arg);
};

/// Parses the text syntax: integers, a/b, symbols, + - * / ^ and exp(<linear form>).
/// Powers take an integer, or a parenthesised constant such as ^(-3), ^(7/3) or ^((5*1 + 2)/3).
ExprTree parse_expression(std::string_view text);

/// Canonical form of a raw tree. Throws UnsupportedExpression when an
/// exponential argument is not a homogeneous rational linear form.
RatExpr canonicalize_rational(const ExprTree & e);
/// As canonicalize_rational, but the result must not keep a denominator.
ExpPoly canonicalize(const ExprTree & e);

double evaluate(const ExprTree & e, const std::map<std::string, double> & values);

inline RatExpr parse_ratexpr(std::string_view text) { return canonicalize_rational(parse_expression(text)); }
inline ExpPoly parse_exppoly(std::string_view text) { return canonicalize(parse_expression(text)); }

/// Plain text in the parser's syntax; parse_ratexpr(to_text(e)) == e.
std::string to_text(const ExpPoly & p);
std::string to_text(const RatExpr & r);
std::string to_latex(const ExpPoly & p);
std::string to_latex(const RatExpr & r);

}  // namespace galreal
