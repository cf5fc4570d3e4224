#include "galreal/expr.hpp"

#include "galreal/errors.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>

namespace galreal {

ExprTree ExprNode::number(const Rational & v)
{
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Number;
  n->value = v;
  return n;
}

ExprTree ExprNode::symbol(std::string name)
{
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Symbol;
  n->name = std::move(name);
  return n;
}

namespace {

ExprTree make_node(ExprNode::Kind k, std::vector<ExprTree> args)
{
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->args = std::move(args);
  return n;
}

}  // namespace

ExprTree ExprNode::add(ExprTree a, ExprTree b) { return make_node(Kind::Add, {std::move(a), std::move(b)}); }
ExprTree ExprNode::mul(ExprTree a, ExprTree b) { return make_node(Kind::Mul, {std::move(a), std::move(b)}); }
ExprTree ExprNode::neg(ExprTree a) { return make_node(Kind::Neg, {std::move(a)}); }
ExprTree ExprNode::div(ExprTree a, ExprTree b) { return make_node(Kind::Div, {std::move(a), std::move(b)}); }
ExprTree ExprNode::exp(ExprTree arg) { return make_node(Kind::Exp, {std::move(arg)}); }

ExprTree ExprNode::power(ExprTree base, const Rational & exponent)
{
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Pow;
  n->value = exponent;
  n->args.push_back(std::move(base));
  return n;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprTree parse()
  {
    auto e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

private:
  [[noreturn]] void fail(const std::string & msg) const
  {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c)
  {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  ExprTree parse_sum()
  {
    auto lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = ExprNode::add(lhs, parse_product());
      } else if (accept('-')) {
        lhs = ExprNode::add(lhs, ExprNode::neg(parse_product()));
      } else {
        return lhs;
      }
    }
  }

  ExprTree parse_product()
  {
    auto lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = ExprNode::mul(lhs, parse_unary());
      } else if (accept('/')) {
        lhs = ExprNode::div(lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  ExprTree parse_unary()
  {
    if (accept('-')) {
      return ExprNode::neg(parse_unary());
    }
    if (accept('+')) {
      return parse_unary();
    }
    return parse_power();
  }

  std::string read_digits()
  {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected an integer");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational parse_exponent()
  {
    if (accept('(')) {
      const std::size_t start = pos_;
      auto e = parse_sum();
      expect(')');
      auto v = constant_value(e);
      if (!v) {
        pos_ = start;
        fail("exponent is not a constant");
      }
      return *v;
    }
    const bool negative = accept('-');
    Rational r = parse_rational(read_digits());
    return negative ? Rational(-r) : r;
  }

  static std::optional<Rational> constant_value(const ExprTree & e)
  {
    using K = ExprNode::Kind;
    std::vector<Rational> a;
    for (const auto & arg : e->args) {
      auto v = constant_value(arg);
      if (!v) {
        return std::nullopt;
      }
      a.push_back(*v);
    }
    switch (e->kind) {
      case K::Number: return e->value;
      case K::Add: return Rational(a[0] + a[1]);
      case K::Mul: return Rational(a[0] * a[1]);
      case K::Neg: return Rational(-a[0]);
      case K::Div:
        if (a[1] == 0) {
          return std::nullopt;
        }
        return Rational(a[0] / a[1]);
      case K::Pow:
        if (is_integer(e->value)) {
          Rational r(1);
          const long k = to_long(e->value);
          for (long i = 0; i < std::labs(k); ++i) {
            r *= a[0];
          }
          if (k < 0) {
            if (r == 0) {
              return std::nullopt;
            }
            r = 1 / r;
          }
          return r;
        }
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  ExprTree parse_power()
  {
    auto base = parse_primary();
    if (accept('^')) {
      return ExprNode::power(base, parse_exponent());
    }
    return base;
  }

  ExprTree parse_primary()
  {
    skip_ws();
    if (pos_ >= text_.size()) {
      fail("unexpected end of expression");
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ExprNode::number(parse_rational(read_digits()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "exp") {
        expect('(');
        auto arg = parse_sum();
        expect(')');
        return ExprNode::exp(arg);
      }
      return ExprNode::symbol(std::move(name));
    }
    if (accept('(')) {
      auto e = parse_sum();
      expect(')');
      return e;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprTree parse_expression(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Canonicalization

RatExpr canonicalize_rational(const ExprTree & e)
{
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Number:
      return RatExpr(e->value);
    case K::Symbol:
      return RatExpr(ExpPoly::symbol(e->name));
    case K::Add:
      return canonicalize_rational(e->args[0]) + canonicalize_rational(e->args[1]);
    case K::Mul:
      return canonicalize_rational(e->args[0]) * canonicalize_rational(e->args[1]);
    case K::Neg:
      return -canonicalize_rational(e->args[0]);
    case K::Div:
      return canonicalize_rational(e->args[0]) / canonicalize_rational(e->args[1]);
    case K::Pow: {
      RatExpr base = canonicalize_rational(e->args[0]);
      if (is_integer(e->value)) {
        return base.pow(to_long(e->value));
      }
      if (!base.is_exppoly()) {
        throw UnsupportedExpression("fractional power of a quotient");
      }
      return RatExpr(base.num().pow(e->value));
    }
    case K::Exp: {
      RatExpr arg = canonicalize_rational(e->args[0]);
      std::optional<SparseVec> form;
      if (arg.is_exppoly()) {
        form = arg.num().as_linear_form();
      }
      if (!form) {
        throw UnsupportedExpression("exponential argument is not a homogeneous rational linear form: " + to_text(arg));
      }
      return RatExpr(ExpPoly::exponential(*form));
    }
  }
  throw UnsupportedExpression("unknown node");
}

ExpPoly canonicalize(const ExprTree & e)
{
  RatExpr r = canonicalize_rational(e);
  if (!r.is_exppoly()) {
    throw UnsupportedExpression("expression keeps a denominator: " + to_text(r));
  }
  return r.num();
}

double evaluate(const ExprTree & e, const std::map<std::string, double> & values)
{
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Number:
      return e->value.get_d();
    case K::Symbol: {
      auto it = values.find(e->name);
      if (it == values.end()) {
        throw UnknownSymbol("no value bound for symbol " + e->name);
      }
      return it->second;
    }
    case K::Add:
      return evaluate(e->args[0], values) + evaluate(e->args[1], values);
    case K::Mul:
      return evaluate(e->args[0], values) * evaluate(e->args[1], values);
    case K::Neg:
      return -evaluate(e->args[0], values);
    case K::Div:
      return evaluate(e->args[0], values) / evaluate(e->args[1], values);
    case K::Pow:
      return std::pow(evaluate(e->args[0], values), e->value.get_d());
    case K::Exp:
      return std::exp(evaluate(e->args[0], values));
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Style {
  bool latex = false;
};

std::string latex_symbol(const Symbol & s)
{
  static const char * greek[] = {"alpha", "beta", "gamma", "delta", "epsilon", "lambda", "mu", "rho", "theta", "varphi", "phi", "eps"};
  const std::string & n = s.name();
  if (s.is_coordinate()) {
    return "x_{" + std::to_string(s.coordinate_index()) + "}";
  }
  for (const char * g : greek) {
    if (n == g) {
      return n == "eps" ? std::string("\\varepsilon") : "\\" + n;
    }
  }
  auto us = n.find('_');
  if (us != std::string::npos) {
    return n.substr(0, us) + "_{" + n.substr(us + 1) + "}";
  }
  return n;
}

std::string render_symbol(const Symbol & s, const Style & st)
{
  if (!st.latex) {
    return s.name();
  }
  std::string l = latex_symbol(s);
  // x_{2} -> x_2 for single digit indices
  if (s.is_coordinate() && s.coordinate_index() < 10) {
    l = "x_" + std::to_string(s.coordinate_index());
  }
  return l;
}

std::string render_power(const Symbol & s, const Rational & e, const Style & st)
{
  std::string base = render_symbol(s, st);
  if (e == 1) {
    return base;
  }
  if (st.latex) {
    return base + "^{" + to_string(e) + "}";
  }
  if (is_integer(e) && sgn(e) > 0) {
    return base + "^" + to_string(e);
  }
  return base + "^(" + to_string(e) + ")";
}

std::string render_rational_abs(const Rational & c, const Style & st)
{
  Rational a = abs(c);
  if (st.latex && a.get_den() != 1) {
    return "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  }
  return to_string(a);
}

std::string render_sum(const ExpPoly & p, const Style & st);

std::string render_exp(const SparseVec & form, const Style & st)
{
  ExpPoly lin;
  for (const auto & [s, l] : form) {
    lin += ExpPoly::monomial(l, SparseVec{{s, Rational(1)}});
  }
  const std::string inner = render_sum(lin, st);
  if (st.latex) {
    return "e^{" + inner + "}";
  }
  return "exp(" + inner + ")";
}

// Term without its sign.
std::string render_term_abs(const TermKey & k, const Rational & c, const Style & st)
{
  std::vector<std::string> num;
  std::vector<std::string> den;
  for (const auto & [s, e] : k.powers) {
    if (sgn(e) > 0) {
      num.push_back(render_power(s, e, st));
    } else {
      den.push_back(render_power(s, -e, st));
    }
  }
  if (!k.exp_form.empty()) {
    num.push_back(render_exp(k.exp_form, st));
  }
  const std::string sep = st.latex ? std::string() : std::string("*");
  const Rational a = abs(c);
  std::string out;
  if (st.latex) {
    std::string n;
    for (const auto & f : num) {
      n += f;
    }
    std::string d;
    for (const auto & f : den) {
      d += f;
    }
    if (!d.empty() || a.get_den() != 1) {
      std::string nn = a.get_num() == 1 && !n.empty() ? n : a.get_num().get_str() + n;
      std::string dd = (a.get_den() == 1 ? std::string() : a.get_den().get_str()) + d;
      return "\\tfrac{" + nn + "}{" + dd + "}";
    }
    if (a == 1 && !n.empty()) {
      return n;
    }
    return a.get_num().get_str() + n;
  }
  if (a != 1 || num.empty()) {
    out = render_rational_abs(a, st);
  }
  for (const auto & f : num) {
    if (!out.empty()) {
      out += sep;
    }
    out += f;
  }
  for (const auto & f : den) {
    out += "/" + f;
  }
  return out;
}

std::string render_sum(const ExpPoly & p, const Style & st)
{
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const bool neg = sgn(it->second) < 0;
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += render_term_abs(it->first, it->second, st);
    first = false;
  }
  return out;
}

std::string render_rat(const RatExpr & r, const Style & st)
{
  if (r.is_exppoly()) {
    return render_sum(r.num(), st);
  }
  const std::string n = render_sum(r.num(), st);
  const std::string d = render_sum(r.den(), st);
  if (st.latex) {
    return "\\frac{" + n + "}{" + d + "}";
  }
  return "(" + n + ")/(" + d + ")";
}

}  // namespace

std::string to_text(const ExpPoly & p) { return render_sum(p, Style{}); }
std::string to_text(const RatExpr & r) { return render_rat(r, Style{}); }
std::string to_latex(const ExpPoly & p) { return render_sum(p, Style{true}); }
std::string to_latex(const RatExpr & r) { return render_rat(r, Style{true}); }

}  // namespace galreal
