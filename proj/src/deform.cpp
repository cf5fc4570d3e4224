#include "galreal/deform.hpp"

#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

#include <sstream>

namespace galreal {

namespace {

// Lowest-order coefficient of p in s: p = s^k (c + O(s)); exponentials of s count as 1 + O(s).
std::optional<std::pair<Rational, ExpPoly>> leading_in(const ExpPoly & p, const Symbol & s)
{
  std::map<Rational, ExpPoly> by_power;
  const std::map<Symbol, ExpPoly> at_zero{{s, ExpPoly()}};
  for (const auto & [key, rest] : p.collect({s})) {
    TermKey exp_only{{}, key.exp_form};
    by_power[sparse_get(key.powers, s)] += term_to_exppoly(exp_only, Rational(1)).substitute(at_zero) * rest;
  }
  for (const auto & [k, c] : by_power) {
    if (!c.is_zero()) {
      return std::make_pair(k, c);
    }
  }
  return std::nullopt;
}

bool depends_on_any(const LieAlgebra & l, const Symbol & q)
{
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      for (const auto & c : l.bracket_basis(i, j)) {
        if (c.den().depends_on(q)) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

DeformationFamily make_family(LieAlgebra l, const Symbol & q)
{
  DeformationFamily f;
  f.rational_in_q = depends_on_any(l, q);
  f.algebra = std::move(l);
  f.q = q;
  return f;
}

LieAlgebra DeformationFamily::base() const { return specialize_at(*this, Rational(0)); }

DeformationFamily deform_via_contraction(const LieAlgebra & l, const ContractionMatrix & u, const Symbol & q, std::vector<std::string> names)
{
  if (u.rows() != l.dim() || u.cols() != l.dim()) {
    throw InputError("contraction matrix has wrong size");
  }
  if (determinant(u).is_zero()) {
    throw SingularMatrix("contraction matrix is singular for generic " + q.name());
  }
  LieAlgebra d = change_basis(l, u.transpose(), std::move(names));
  d.set_convention("f_i = sum_j U_ij e_j (rows are new basis vectors)");
  bool known = false;
  for (const auto & p : d.params()) {
    known = known || p.symbol == q;
  }
  if (!known) {
    d.add_param({q, "deformation parameter"});
  }
  return make_family(std::move(d), q);
}

RatExpr limit_at_zero(const RatExpr & e, const Symbol & s)
{
  if (e.is_zero()) {
    return e;
  }
  const auto num = leading_in(e.num(), s);
  const auto den = leading_in(e.den(), s);
  if (!den) {
    throw LimitDoesNotExist("zero denominator");
  }
  if (num->first < den->first) {
    throw LimitDoesNotExist("pole of " + to_text(e) + " at " + s.name() + " = 0");
  }
  if (num->first > den->first) {
    return RatExpr();
  }
  return RatExpr(num->second, den->second);
}

LieAlgebra contraction_limit(const LieAlgebra & l, const Symbol & q)
{
  LieAlgebra out(l.name() + " limit", l.basis());
  for (const auto & p : l.params()) {
    if (!(p.symbol == q)) {
      out.add_param(p);
    }
  }
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vec v = l.bracket_basis(i, j);
      for (std::size_t k = 0; k < v.size(); ++k) {
        try {
          v[k] = limit_at_zero(v[k], q);
        } catch (const LimitDoesNotExist & ex) {
          throw LimitDoesNotExist("[" + l.basis()[i] + "," + l.basis()[j] + "] component " + l.basis()[k] + ": " + ex.what());
        }
      }
      out.set_bracket(i, j, v);
    }
  }
  return out;
}

LieAlgebra contraction_limit(const DeformationFamily & f) { return contraction_limit(f.algebra, f.q); }

DeformationFamily specialize(const DeformationFamily & f, const std::map<Symbol, RatExpr> & bindings)
{
  LieAlgebra l = f.algebra.substitute(bindings);
  return make_family(std::move(l), f.q);
}

LieAlgebra specialize_at(const DeformationFamily & f, const Rational & value)
{
  if (!f.rational_in_q) {
    return f.algebra.substitute({{f.q, RatExpr(value)}});
  }
  // denominators may vanish at the point; go through the limit
  const Symbol s("q_shift__");
  const LieAlgebra shifted = f.algebra.substitute({{f.q, RatExpr(ExpPoly::symbol(s)) + RatExpr(value)}});
  LieAlgebra out = contraction_limit(shifted, s);
  out.set_name(f.algebra.name());
  return out;
}

Realization deformed_generic_realization(const DeformationFamily & f, const std::vector<Vec> & complement)
{
  Splitting s;
  if (complement.empty()) {
    for (std::size_t i = 0; i < f.algebra.dim(); ++i) {
      s.complement.push_back(f.algebra.unit(i));
    }
  } else {
    s.complement = complement;
  }
  Realization r = realize(f.algebra, s);
  r.provenance = "generic realization of the deformed family in " + f.q.name();
  return r;
}

DeformationFamily parse_family(std::string_view text)
{
  std::optional<std::string> q;
  for (const auto & [key, value] : parse_key_lines(text)) {
    if (key == "deformation_parameter") {
      q = value;
    }
  }
  if (!q) {
    throw InputError("family file without a deformation_parameter line");
  }
  return make_family(parse_algebra(text), Symbol(*q));
}

ContractionMatrix parse_matrix(std::string_view text)
{
  std::vector<Vec> rows;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    if (auto h = line.find('#'); h != std::string::npos) {
      line.erase(h);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    Vec row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) {
      row.push_back(parse_ratexpr(cell));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("matrix rows have different lengths");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.size() != rows.front().size()) {
    throw InputError("contraction matrix must be square and nonempty");
  }
  return SymMatrix::from_rows(rows);
}

}  // namespace galreal
