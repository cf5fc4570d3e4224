#include "galreal/ratexpr.hpp"

#include "galreal/errors.hpp"

namespace galreal {

RatExpr::RatExpr(ExpPoly num) : num_(std::move(num)) {}

RatExpr::RatExpr(ExpPoly num, ExpPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

namespace {

using UPoly = std::vector<Rational>;  // ascending coefficients

void trim(UPoly & p)
{
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

UPoly poly_mod(UPoly a, const UPoly & b)
{
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] -= f * b[i];
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly poly_gcd(UPoly a, UPoly b)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Coefficients of p as a polynomial in s alone, if it is one.
std::optional<UPoly> as_upoly(const ExpPoly & p, const Symbol & s)
{
  UPoly out;
  for (const auto & [k, c] : p.terms()) {
    if (!k.exp_form.empty()) {
      return std::nullopt;
    }
    Rational e(0);
    for (const auto & [sym, pw] : k.powers) {
      if (!(sym == s)) {
        return std::nullopt;
      }
      e = pw;
    }
    if (!is_integer(e) || sgn(e) < 0) {
      return std::nullopt;
    }
    const auto i = static_cast<std::size_t>(to_long(e));
    if (out.size() <= i) {
      out.resize(i + 1);
    }
    out[i] += c;
  }
  trim(out);
  return out;
}

ExpPoly from_upoly(const UPoly & p, const Symbol & s)
{
  ExpPoly r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) {
      r += ExpPoly::monomial(p[i], i == 0 ? SparseVec{} : SparseVec{{s, Rational(static_cast<long>(i))}});
    }
  }
  return r;
}

}  // namespace

void RatExpr::normalize()
{
  if (den_.is_zero()) {
    throw SingularMatrix("zero denominator");
  }
  if (num_.is_zero()) {
    den_ = ExpPoly(1);
    return;
  }
  if (den_ == ExpPoly(1)) {
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = ExpPoly(1);
    return;
  }
  // strip the common monomial factor (this also clears negative powers)
  std::set<Symbol> syms = num_.symbols();
  for (const auto & sym : den_.symbols()) {
    syms.insert(sym);
  }
  SparseVec shift;
  for (const auto & sym : syms) {
    std::optional<Rational> low;
    for (const ExpPoly * part : {&num_, &den_}) {
      for (const auto & [k, c] : part->terms()) {
        const Rational e = sparse_get(k.powers, sym);
        if (!low || e < *low) {
          low = e;
        }
      }
    }
    if (low && sgn(*low) != 0) {
      shift.emplace_back(sym, -*low);
    }
  }
  if (!shift.empty()) {
    const ExpPoly m = ExpPoly::monomial(Rational(1), shift);
    num_ *= m;
    den_ *= m;
  }
  // cancel a common factor when the denominator is univariate
  const auto dsyms = den_.symbols();
  if (dsyms.size() == 1) {
    const Symbol s = *dsyms.begin();
    if (auto d = as_upoly(den_, s)) {
      std::set<Symbol> others = num_.symbols();
      others.erase(s);
      UPoly g = *d;
      bool ok = true;
      for (const auto & [key, rest] : num_.collect(others)) {
        auto r = as_upoly(rest, s);
        if (!r) {
          ok = false;
          break;
        }
        g = poly_gcd(g, *r);
      }
      if (ok && g.size() > 1) {
        const ExpPoly gp = from_upoly(g, s);
        auto qn = num_.divide_exact(gp);
        auto qd = den_.divide_exact(gp);
        if (qn && qd) {
          num_ = std::move(*qn);
          den_ = std::move(*qd);
        }
      }
    }
  }
  if (den_.is_constant()) {
    num_ *= ExpPoly(1 / den_.constant_value());
    den_ = ExpPoly(1);
    return;
  }
  const Rational lc = den_.leading_term().second;
  num_ *= ExpPoly(1 / lc);
  den_ *= ExpPoly(1 / lc);
}

std::optional<ExpPoly> RatExpr::as_exppoly() const
{
  if (is_exppoly()) {
    return num_;
  }
  return std::nullopt;
}

const ExpPoly & RatExpr::exppoly() const
{
  if (!is_exppoly()) {
    throw UnsupportedExpression("expression has a residual denominator");
  }
  return num_;
}

Rational RatExpr::constant_value() const
{
  if (!is_constant()) {
    throw UnsupportedExpression("expression is not constant");
  }
  return num_.constant_value();
}

std::set<Symbol> RatExpr::symbols() const
{
  auto s = num_.symbols();
  auto d = den_.symbols();
  s.insert(d.begin(), d.end());
  return s;
}

RatExpr RatExpr::operator-() const
{
  RatExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RatExpr operator+(const RatExpr & a, const RatExpr & b)
{
  if (a.is_zero()) {
    return b;
  }
  if (b.is_zero()) {
    return a;
  }
  if (a.den_ == b.den_) {
    return RatExpr(a.num_ + b.num_, a.den_);
  }
  return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator-(const RatExpr & a, const RatExpr & b) { return a + (-b); }

RatExpr operator*(const RatExpr & a, const RatExpr & b)
{
  if (a.is_zero() || b.is_zero()) {
    return RatExpr();
  }
  if (a.is_exppoly() && b.is_exppoly()) {
    return RatExpr(a.num_ * b.num_);
  }
  return RatExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RatExpr operator/(const RatExpr & a, const RatExpr & b)
{
  if (b.is_zero()) {
    throw SingularMatrix("division by zero expression");
  }
  return RatExpr(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatExpr & a, const RatExpr & b)
{
  if (a.den_ == b.den_) {
    return a.num_ == b.num_;
  }
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatExpr RatExpr::pow(long k) const
{
  if (k < 0) {
    return RatExpr(1) / pow(-k);
  }
  RatExpr r(1);
  for (long i = 0; i < k; ++i) {
    r *= *this;
  }
  return r;
}

RatExpr RatExpr::differentiate(const Symbol & v) const
{
  if (is_exppoly()) {
    return RatExpr(num_.differentiate(v));
  }
  const ExpPoly dd = den_.differentiate(v);
  if (dd.is_zero()) {
    return RatExpr(num_.differentiate(v), den_);
  }
  return RatExpr(num_.differentiate(v) * den_ - num_ * dd, den_ * den_);
}

RatExpr RatExpr::substitute(const std::map<Symbol, ExpPoly> & bindings) const
{
  return RatExpr(num_.substitute(bindings), den_.substitute(bindings));
}

namespace {

RatExpr substitute_exppoly(const ExpPoly & p, const std::map<Symbol, RatExpr> & bindings)
{
  std::map<Symbol, ExpPoly> plain;
  bool all_plain = true;
  for (const auto & [s, v] : bindings) {
    if (v.is_exppoly()) {
      plain.emplace(s, v.num());
    } else {
      all_plain = false;
    }
  }
  if (all_plain) {
    return RatExpr(p.substitute(plain));
  }
  RatExpr out;
  for (const auto & [k, c] : p.terms()) {
    RatExpr term(c);
    SparseVec kept;
    for (const auto & [s, e] : k.powers) {
      auto it = bindings.find(s);
      if (it == bindings.end()) {
        kept.emplace_back(s, e);
      } else if (it->second.is_exppoly()) {
        term *= RatExpr(it->second.num().pow(e));
      } else {
        term *= it->second.pow(to_long(e));
      }
    }
    SparseVec form;
    for (const auto & [s, l] : k.exp_form) {
      auto it = bindings.find(s);
      if (it == bindings.end()) {
        form = add_sparse(form, SparseVec{{s, l}});
        continue;
      }
      std::optional<SparseVec> lin;
      if (it->second.is_exppoly()) {
        lin = it->second.num().as_linear_form();
      }
      if (!lin) {
        throw UnsupportedExpression("substitution of " + s.name() + " inside an exponential must be a homogeneous linear form");
      }
      form = add_sparse(form, scale_sparse(*lin, l));
    }
    term *= RatExpr(ExpPoly::monomial(Rational(1), kept, form));
    out += term;
  }
  return out;
}

}  // namespace

RatExpr RatExpr::substitute(const std::map<Symbol, RatExpr> & bindings) const
{
  if (bindings.empty()) {
    return *this;
  }
  return substitute_exppoly(num_, bindings) / substitute_exppoly(den_, bindings);
}

double RatExpr::evaluate(const std::map<std::string, double> & values) const
{
  return num_.evaluate(values) / den_.evaluate(values);
}

}  // namespace galreal
