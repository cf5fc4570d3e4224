#include "galreal/verify.hpp"

#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace galreal {

namespace {

Symbol coord(std::size_t a) { return Symbol::coordinate(static_cast<int>(a + 1)); }

bool is_zero_field(const Field & f)
{
  for (const auto & c : f) {
    if (!c.is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace

RatExpr apply_field(const Field & x, const RatExpr & f)
{
  RatExpr out;
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b].is_zero()) {
      continue;
    }
    const RatExpr d = f.differentiate(coord(b));
    if (!d.is_zero()) {
      out += x[b] * d;
    }
  }
  return out;
}

Field vf_bracket(const Field & x, const Field & y)
{
  if (x.size() != y.size()) {
    throw InputError("vector fields on different coordinate counts");
  }
  Field out(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    out[a] = apply_field(x, y[a]) - apply_field(y, x[a]);
  }
  return out;
}

RelationReport check_relations(const Realization & r)
{
  RelationReport rep;
  const LieAlgebra & l = r.algebra;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Field res = vf_bracket(r.images[i], r.images[j]);
      const Field rhs = r.image(l.bracket_basis(i, j));
      for (std::size_t a = 0; a < r.m; ++a) {
        res[a] -= rhs[a];
      }
      if (!is_zero_field(res)) {
        rep.ok = false;
        rep.failures.push_back({i, j, res});
      }
    }
  }
  return rep;
}

std::vector<Vec> realization_kernel(const Realization & r)
{
  const std::size_t n = r.algebra.dim();
  std::set<Symbol> coords;
  for (std::size_t a = 0; a < r.m; ++a) {
    coords.insert(coord(a));
  }
  // one equation per (component, coordinate-dependence pattern)
  std::map<std::pair<std::size_t, TermKey>, Vec, bool (*)(const std::pair<std::size_t, TermKey> &, const std::pair<std::size_t, TermKey> &)> eqs(
    [](const std::pair<std::size_t, TermKey> & a, const std::pair<std::size_t, TermKey> & b) {
      if (a.first != b.first) {
        return a.first < b.first;
      }
      return TermKeyLess{}(a.second, b.second);
    });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < r.m; ++a) {
      const RatExpr & c = r.images[i][a];
      if (c.is_zero()) {
        continue;
      }
      for (const auto & s : c.den().symbols()) {
        if (s.is_coordinate()) {
          throw UnsupportedExpression("field coefficient with a coordinate-dependent denominator");
        }
      }
      for (const auto & [key, part] : c.num().collect(coords)) {
        auto [it, inserted] = eqs.try_emplace({a, key}, Vec(n));
        it->second[i] += RatExpr(part, c.den());
      }
    }
  }
  if (eqs.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) {
      all.push_back(r.algebra.unit(i));
    }
    return canonical_span(all, n);
  }
  std::vector<Vec> rows;
  for (auto & [k, v] : eqs) {
    rows.push_back(v);
  }
  return canonical_span(nullspace(SymMatrix::from_rows(rows)), n);
}

bool duality_check(const SymMatrix & w, const VectorFieldSet & fields)
{
  if (!w.is_square() || fields.fields.size() != w.rows() || fields.ncoords != w.rows()) {
    return false;
  }
  SymMatrix xi(w.rows(), w.rows());
  for (std::size_t k = 0; k < fields.fields.size(); ++k) {
    for (std::size_t i = 0; i < w.rows(); ++i) {
      xi.at(i, k) = fields.fields[k].at(i);
    }
  }
  return (w * xi).is_identity();
}

CoordinateMap CoordinateMap::identity(std::size_t m)
{
  CoordinateMap c;
  for (std::size_t a = 0; a < m; ++a) {
    c.images.emplace_back(ExpPoly::symbol(coord(a)));
  }
  c.inverse = c.images;
  return c;
}

namespace {

std::map<Symbol, RatExpr> as_bindings(const std::vector<RatExpr> & images)
{
  std::map<Symbol, RatExpr> b;
  for (std::size_t a = 0; a < images.size(); ++a) {
    b.emplace(coord(a), images[a]);
  }
  return b;
}

bool composes_to_identity(const std::vector<RatExpr> & first, const std::vector<RatExpr> & second)
{
  const auto b = as_bindings(first);
  for (std::size_t a = 0; a < second.size(); ++a) {
    if (!(second[a].substitute(b) == RatExpr(ExpPoly::symbol(coord(a))))) {
      return false;
    }
  }
  return true;
}

}  // namespace

void validate_coordinate_map(const CoordinateMap & phi)
{
  if (phi.inverse) {
    if (phi.inverse->size() != phi.m()) {
      throw InputError("declared inverse has the wrong number of coordinates");
    }
    if (!composes_to_identity(phi.images, *phi.inverse) || !composes_to_identity(*phi.inverse, phi.images)) {
      throw InputError("declared inverse does not invert the coordinate map");
    }
    return;
  }
  SymMatrix jac(phi.m(), phi.m());
  for (std::size_t a = 0; a < phi.m(); ++a) {
    for (std::size_t b = 0; b < phi.m(); ++b) {
      jac.at(a, b) = phi.images[a].differentiate(coord(b));
    }
  }
  if (determinant(jac).is_zero()) {
    throw InputError("coordinate map has a vanishing Jacobian");
  }
}

bool compare_realizations(const Realization & r1, const Realization & r2, const CoordinateMap & phi, const std::optional<LinearMap> & u)
{
  if (r1.m != r2.m || r1.m != phi.m() || r1.algebra.dim() != r2.algebra.dim()) {
    return false;
  }
  validate_coordinate_map(phi);
  if (u && !is_automorphism(r1.algebra, *u)) {
    throw InputError("the supplied linear map is not an automorphism");
  }
  const auto pull = as_bindings(phi.images);
  const std::size_t n = r1.algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Field x = u ? r1.image(u->col(i)) : r1.images[i];
    for (std::size_t a = 0; a < r1.m; ++a) {
      const RatExpr lhs = r2.images[i][a].substitute(pull);
      const RatExpr rhs = apply_field(x, phi.images[a]);
      if (!(lhs == rhs)) {
        return false;
      }
    }
  }
  return true;
}

CoordinateMap parse_coordinate_map(std::string_view text, std::size_t m)
{
  // lines "y1 = <expr in x>" and optionally "x1 = <expr in y>" for the inverse
  CoordinateMap c;
  c.images.assign(m, RatExpr());
  std::vector<RatExpr> inv(m);
  std::vector<bool> seen(m, false);
  std::vector<bool> seen_inv(m, false);
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        throw InputError("coordinate map line without '=': " + line);
      }
      continue;
    }
    std::string lhs = line.substr(0, eq);
    lhs.erase(0, lhs.find_first_not_of(" \t"));
    lhs.erase(lhs.find_last_not_of(" \t") + 1);
    if (lhs.size() < 2 || (lhs[0] != 'x' && lhs[0] != 'y')) {
      throw InputError("coordinate map target must be yK or xK: " + lhs);
    }
    const std::size_t k = std::stoul(lhs.substr(1));
    if (k == 0 || k > m) {
      throw InputError("coordinate index out of range: " + lhs);
    }
    std::string rhs = line.substr(eq + 1);
    if (lhs[0] == 'y') {
      c.images[k - 1] = parse_ratexpr(rhs);
      seen[k - 1] = true;
    } else {
      // the inverse is written in y; rename y -> x for composition
      for (std::size_t p = 0; p < rhs.size(); ++p) {
        if (rhs[p] == 'y' && (p == 0 || !std::isalnum(static_cast<unsigned char>(rhs[p - 1])))) {
          rhs[p] = 'x';
        }
      }
      inv[k - 1] = parse_ratexpr(rhs);
      seen_inv[k - 1] = true;
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!seen[a]) {
      c.images[a] = RatExpr(ExpPoly::symbol(coord(a)));
    }
  }
  if (std::find(seen_inv.begin(), seen_inv.end(), true) != seen_inv.end()) {
    for (std::size_t a = 0; a < m; ++a) {
      if (!seen_inv[a]) {
        inv[a] = RatExpr(ExpPoly::symbol(coord(a)));
      }
    }
    c.inverse = inv;
  }
  return c;
}

}  // namespace galreal
