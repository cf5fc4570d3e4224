#include "galreal/exppoly.hpp"

#include "galreal/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace galreal {

// ---------------------------------------------------------------------------
// Rational / Symbol helpers

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) {
    throw ParseError("empty rational literal");
  }
  if (!s.empty() && s.front() == '+') {
    s.erase(0, 1);
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational & r) { return r.get_str(); }

long to_long(const Rational & r)
{
  if (!is_integer(r) || !r.get_num().fits_slong_p()) {
    throw UnsupportedExpression("expected a machine integer, got " + to_string(r));
  }
  return r.get_num().get_si();
}

Symbol::Symbol(std::string name) : name_(std::move(name))
{
  if (name_.size() >= 2 && name_[0] == 'x' && name_[1] != '0') {
    bool digits = true;
    for (std::size_t i = 1; i < name_.size(); ++i) {
      digits = digits && std::isdigit(static_cast<unsigned char>(name_[i]));
    }
    if (digits && name_.size() < 9) {
      coord_index_ = std::stoi(name_.substr(1));
    }
  }
}

Symbol Symbol::coordinate(int index) { return Symbol("x" + std::to_string(index)); }

bool is_valid_symbol_name(std::string_view name)
{
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

// ---------------------------------------------------------------------------
// Sparse vectors

int compare_sparse(const SparseVec & a, const SparseVec & b)
{
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int side;  // which vector holds the smallest remaining symbol
    if (i == a.size()) {
      side = 1;
    } else if (j == b.size()) {
      side = -1;
    } else {
      const auto c = a[i].first <=> b[j].first;
      side = c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    if (side == 0) {
      const int c = cmp(a[i].second, b[j].second);
      if (c != 0) {
        return c < 0 ? -1 : 1;
      }
      ++i;
      ++j;
    } else if (side < 0) {
      // b has 0 at this symbol
      return sgn(a[i].second) < 0 ? -1 : 1;
    } else {
      return sgn(b[j].second) < 0 ? 1 : -1;
    }
  }
  return 0;
}

SparseVec add_sparse(const SparseVec & a, const SparseVec & b)
{
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].second + b[j].second;
      if (sgn(s) != 0) {
        out.emplace_back(a[i].first, std::move(s));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale_sparse(const SparseVec & a, const Rational & k)
{
  if (sgn(k) == 0) {
    return {};
  }
  SparseVec out = a;
  for (auto & e : out) {
    e.second *= k;
  }
  return out;
}

Rational sparse_get(const SparseVec & a, const Symbol & s)
{
  auto it = std::lower_bound(a.begin(), a.end(), s, [](const auto & e, const Symbol & v) { return e.first < v; });
  if (it != a.end() && it->first == s) {
    return it->second;
  }
  return Rational(0);
}

bool TermKeyLess::operator()(const TermKey & a, const TermKey & b) const
{
  const int c = compare_sparse(a.powers, b.powers);
  if (c != 0) {
    return c < 0;
  }
  return compare_sparse(a.exp_form, b.exp_form) < 0;
}

// ---------------------------------------------------------------------------
// ExpPoly

ExpPoly::ExpPoly(const Rational & c)
{
  if (sgn(c) != 0) {
    terms_.emplace(TermKey{}, c);
  }
}

ExpPoly ExpPoly::symbol(const Symbol & s)
{
  return monomial(Rational(1), SparseVec{{s, Rational(1)}});
}

ExpPoly ExpPoly::monomial(const Rational & c, SparseVec powers, SparseVec exp_form)
{
  ExpPoly p;
  if (sgn(c) != 0) {
    std::sort(powers.begin(), powers.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
    std::sort(exp_form.begin(), exp_form.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
    std::erase_if(powers, [](const auto & e) { return sgn(e.second) == 0; });
    std::erase_if(exp_form, [](const auto & e) { return sgn(e.second) == 0; });
    p.terms_.emplace(TermKey{std::move(powers), std::move(exp_form)}, c);
  }
  return p;
}

ExpPoly ExpPoly::exponential(SparseVec form) { return monomial(Rational(1), {}, std::move(form)); }

ExpPoly term_to_exppoly(const TermKey & key, const Rational & c) { return ExpPoly::monomial(c, key.powers, key.exp_form); }

bool ExpPoly::is_constant() const
{
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == TermKey{});
}

Rational ExpPoly::constant_value() const
{
  if (terms_.empty()) {
    return Rational(0);
  }
  if (!is_constant()) {
    throw UnsupportedExpression("expression is not constant");
  }
  return terms_.begin()->second;
}

bool ExpPoly::is_polynomial_powers() const
{
  for (const auto & [k, c] : terms_) {
    for (const auto & [s, e] : k.powers) {
      if (!is_integer(e) || sgn(e) < 0) {
        return false;
      }
    }
  }
  return true;
}

bool ExpPoly::has_exponentials() const
{
  return std::any_of(terms_.begin(), terms_.end(), [](const auto & t) { return !t.first.exp_form.empty(); });
}

std::optional<SparseVec> ExpPoly::as_linear_form() const
{
  SparseVec form;
  for (const auto & [k, c] : terms_) {
    if (!k.exp_form.empty() || k.powers.size() != 1 || k.powers[0].second != 1) {
      return std::nullopt;
    }
    form.emplace_back(k.powers[0].first, c);
  }
  std::sort(form.begin(), form.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
  return form;
}

std::set<Symbol> ExpPoly::symbols() const
{
  std::set<Symbol> out;
  for (const auto & [k, c] : terms_) {
    for (const auto & e : k.powers) {
      out.insert(e.first);
    }
    for (const auto & e : k.exp_form) {
      out.insert(e.first);
    }
  }
  return out;
}

bool ExpPoly::depends_on(const Symbol & s) const
{
  for (const auto & [k, c] : terms_) {
    if (sgn(sparse_get(k.powers, s)) != 0 || sgn(sparse_get(k.exp_form, s)) != 0) {
      return true;
    }
  }
  return false;
}

void ExpPoly::add_term(const TermKey & key, const Rational & c)
{
  if (sgn(c) == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) {
      terms_.erase(it);
    }
  }
}

ExpPoly ExpPoly::operator-() const
{
  ExpPoly r = *this;
  for (auto & [k, c] : r.terms_) {
    c = -c;
  }
  return r;
}

ExpPoly & ExpPoly::operator+=(const ExpPoly & o)
{
  for (const auto & [k, c] : o.terms_) {
    add_term(k, c);
  }
  return *this;
}

ExpPoly & ExpPoly::operator-=(const ExpPoly & o)
{
  for (const auto & [k, c] : o.terms_) {
    add_term(k, -c);
  }
  return *this;
}

ExpPoly operator*(const ExpPoly & a, const ExpPoly & b)
{
  ExpPoly r;
  for (const auto & [ka, ca] : a.terms_) {
    for (const auto & [kb, cb] : b.terms_) {
      r.add_term(TermKey{add_sparse(ka.powers, kb.powers), add_sparse(ka.exp_form, kb.exp_form)}, ca * cb);
    }
  }
  return r;
}

ExpPoly & ExpPoly::operator*=(const ExpPoly & o)
{
  *this = *this * o;
  return *this;
}

ExpPoly ExpPoly::pow(unsigned k) const
{
  ExpPoly result(1);
  ExpPoly base = *this;
  while (k > 0) {
    if (k & 1U) {
      result *= base;
    }
    k >>= 1U;
    if (k > 0) {
      base *= base;
    }
  }
  return result;
}

ExpPoly ExpPoly::inverse_term() const
{
  if (!is_single_term()) {
    throw UnsupportedExpression("inverse of a sum is not an exp-polynomial");
  }
  const auto & [k, c] = *terms_.begin();
  return monomial(1 / c, scale_sparse(k.powers, -1), scale_sparse(k.exp_form, -1));
}

ExpPoly ExpPoly::pow(const Rational & k) const
{
  if (is_integer(k) && sgn(k) >= 0) {
    return pow(static_cast<unsigned>(to_long(k)));
  }
  if (is_integer(k)) {
    return inverse_term().pow(static_cast<unsigned>(-to_long(k)));
  }
  if (!is_single_term() || terms_.begin()->second != 1) {
    throw UnsupportedExpression("fractional power requires a single term with unit coefficient");
  }
  const auto & key = terms_.begin()->first;
  return monomial(Rational(1), scale_sparse(key.powers, k), scale_sparse(key.exp_form, k));
}

std::pair<TermKey, Rational> ExpPoly::leading_term() const
{
  if (terms_.empty()) {
    throw UnsupportedExpression("leading term of zero");
  }
  return *terms_.rbegin();
}

ExpPoly ExpPoly::differentiate(const Symbol & v) const
{
  ExpPoly r;
  for (const auto & [k, c] : terms_) {
    const Rational p = sparse_get(k.powers, v);
    if (sgn(p) != 0) {
      r.add_term(TermKey{add_sparse(k.powers, SparseVec{{v, Rational(-1)}}), k.exp_form}, c * p);
    }
    const Rational l = sparse_get(k.exp_form, v);
    if (sgn(l) != 0) {
      r.add_term(k, c * l);
    }
  }
  return r;
}

ExpPoly ExpPoly::substitute(const std::map<Symbol, ExpPoly> & bindings) const
{
  if (bindings.empty()) {
    return *this;
  }
  ExpPoly r;
  for (const auto & [k, c] : terms_) {
    ExpPoly term(c);
    SparseVec kept_powers;
    for (const auto & [s, e] : k.powers) {
      auto it = bindings.find(s);
      if (it == bindings.end()) {
        kept_powers.emplace_back(s, e);
      } else {
        term *= it->second.pow(e);
      }
    }
    SparseVec new_form;
    for (const auto & [s, l] : k.exp_form) {
      auto it = bindings.find(s);
      if (it == bindings.end()) {
        new_form = add_sparse(new_form, SparseVec{{s, l}});
        continue;
      }
      auto lin = it->second.as_linear_form();
      if (!lin) {
        throw UnsupportedExpression("substitution of " + s.name() + " inside an exponential must be a homogeneous linear form");
      }
      new_form = add_sparse(new_form, scale_sparse(*lin, l));
    }
    term *= monomial(Rational(1), kept_powers, new_form);
    r += term;
  }
  return r;
}

std::optional<ExpPoly> ExpPoly::divide_exact(const ExpPoly & b) const
{
  if (b.is_zero()) {
    throw SingularMatrix("division by zero expression");
  }
  if (is_zero()) {
    return ExpPoly();
  }
  if (b.is_single_term()) {
    return *this * b.inverse_term();
  }
  // Minimal power per symbol present in the dividend; the quotient may not go below it.
  std::map<Symbol, Rational> floor;
  for (const auto & [k, c] : terms_) {
    for (const auto & [s, e] : k.powers) {
      auto [it, ins] = floor.try_emplace(s, e);
      if (!ins && e < it->second) {
        it->second = e;
      }
    }
  }
  for (auto & [s, e] : floor) {
    if (sgn(e) > 0) {
      e = 0;
    }
  }
  const auto [lk, lc] = b.leading_term();
  ExpPoly q;
  ExpPoly rem = *this;
  const std::size_t cap = 8 * (size() + 1) * (b.size() + 1) + 64;
  for (std::size_t iter = 0; !rem.is_zero(); ++iter) {
    if (iter > cap) {
      return std::nullopt;
    }
    const auto [rk, rc] = rem.leading_term();
    TermKey qk{add_sparse(rk.powers, scale_sparse(lk.powers, -1)), add_sparse(rk.exp_form, scale_sparse(lk.exp_form, -1))};
    for (const auto & [s, e] : qk.powers) {
      auto it = floor.find(s);
      const Rational lo = it == floor.end() ? Rational(0) : it->second;
      if (e < lo || (!is_integer(e) && it == floor.end())) {
        return std::nullopt;
      }
    }
    ExpPoly qt = term_to_exppoly(qk, rc / lc);
    q += qt;
    rem -= qt * b;
  }
  return q;
}

double ExpPoly::evaluate(const std::map<std::string, double> & values) const
{
  auto lookup = [&](const Symbol & s) {
    auto it = values.find(s.name());
    if (it == values.end()) {
      throw UnknownSymbol("no value bound for symbol " + s.name());
    }
    return it->second;
  };
  double sum = 0.0;
  for (const auto & [k, c] : terms_) {
    double t = c.get_d();
    for (const auto & [s, e] : k.powers) {
      const double v = lookup(s);
      t *= is_integer(e) ? std::pow(v, static_cast<double>(to_long(e))) : std::pow(v, e.get_d());
    }
    double lin = 0.0;
    for (const auto & [s, l] : k.exp_form) {
      lin += l.get_d() * lookup(s);
    }
    sum += t * std::exp(lin);
  }
  return sum;
}

std::map<TermKey, ExpPoly, TermKeyLess> ExpPoly::collect(const std::set<Symbol> & symbols) const
{
  std::map<TermKey, ExpPoly, TermKeyLess> out;
  for (const auto & [k, c] : terms_) {
    TermKey in;
    TermKey rest;
    for (const auto & e : k.powers) {
      (symbols.count(e.first) ? in.powers : rest.powers).push_back(e);
    }
    for (const auto & e : k.exp_form) {
      (symbols.count(e.first) ? in.exp_form : rest.exp_form).push_back(e);
    }
    out[in] += term_to_exppoly(rest, c);
  }
  std::erase_if(out, [](const auto & e) { return e.second.is_zero(); });
  return out;
}

}  // namespace galreal
