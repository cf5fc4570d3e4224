#include "galreal/liealg.hpp"

#include "galreal/combination.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

#include <fstream>
#include <sstream>

namespace galreal {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis, std::vector<ParamInfo> params)
  : name_(std::move(name)), basis_(std::move(basis)), params_(std::move(params))
{
  for (const auto & b : basis_) {
    if (!is_valid_symbol_name(b)) {
      throw InputError("invalid basis label '" + b + "'");
    }
  }
  c_.assign(dim() * dim(), Vec(dim()));
}

void LieAlgebra::add_param(ParamInfo p)
{
  for (const auto & q : params_) {
    if (q.symbol == p.symbol) {
      return;
    }
  }
  params_.push_back(std::move(p));
}

std::size_t LieAlgebra::index_of(std::string_view label) const
{
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == label) {
      return i;
    }
  }
  throw InputError("unknown basis element '" + std::string(label) + "' in " + name_);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec & v)
{
  if (v.size() != dim()) {
    throw InputError("bracket vector has wrong length");
  }
  if (i == j) {
    for (const auto & e : v) {
      if (!e.is_zero()) {
        throw InputError("[e,e] must vanish");
      }
    }
    return;
  }
  c_[i * dim() + j] = v;
  Vec neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    neg[k] = -v[k];
  }
  c_[j * dim() + i] = std::move(neg);
}

void LieAlgebra::set_bracket(std::string_view a, std::string_view b, std::string_view combination)
{
  set_bracket(index_of(a), index_of(b), vector(combination));
}

Vec LieAlgebra::unit(std::size_t i) const
{
  Vec v(dim());
  v.at(i) = RatExpr(1);
  return v;
}

Vec LieAlgebra::vector(std::string_view combination) const { return parse_combination(combination, basis_); }

Vec LieAlgebra::bracket(const Vec & x, const Vec & y) const
{
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero() || i == j) {
        continue;
      }
      const Vec & c = bracket_basis(i, j);
      RatExpr xy;
      for (std::size_t k = 0; k < dim(); ++k) {
        if (c[k].is_zero()) {
          continue;
        }
        if (xy.is_zero()) {
          xy = x[i] * y[j];
        }
        out[k] += xy * c[k];
      }
    }
  }
  return out;
}

LieAlgebra LieAlgebra::substitute(const std::map<Symbol, RatExpr> & bindings) const
{
  LieAlgebra r = *this;
  for (auto & v : r.c_) {
    for (auto & e : v) {
      e = e.substitute(bindings);
    }
  }
  std::vector<ParamInfo> kept;
  for (const auto & p : params_) {
    if (!bindings.count(p.symbol)) {
      kept.push_back(p);
    }
  }
  r.params_ = kept;
  return r;
}

std::set<Symbol> LieAlgebra::symbols() const
{
  std::set<Symbol> s;
  for (const auto & v : c_) {
    for (const auto & e : v) {
      auto t = e.symbols();
      s.insert(t.begin(), t.end());
    }
  }
  return s;
}

bool LieAlgebra::same_constants(const LieAlgebra & other) const { return dim() == other.dim() && c_ == other.c_; }

JacobiReport jacobi_check(const LieAlgebra & l)
{
  JacobiReport rep;
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ei = l.unit(i);
        const Vec ej = l.unit(j);
        const Vec ek = l.unit(k);
        Vec r = l.bracket(l.bracket(ei, ej), ek);
        const Vec b = l.bracket(l.bracket(ej, ek), ei);
        const Vec c = l.bracket(l.bracket(ek, ei), ej);
        bool zero = true;
        for (std::size_t m = 0; m < n; ++m) {
          r[m] += b[m] + c[m];
          zero = zero && r[m].is_zero();
        }
        if (!zero) {
          rep.holds = false;
          rep.violations.push_back({i, j, k, r});
        }
      }
    }
  }
  return rep;
}

SymMatrix adjoint(const LieAlgebra & l, const Vec & v)
{
  SymMatrix a(l.dim(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Vec col = l.bracket(v, l.unit(i));
    for (std::size_t j = 0; j < l.dim(); ++j) {
      a.at(j, i) = col[j];
    }
  }
  return a;
}

LieAlgebra change_basis(const LieAlgebra & l, const LinearMap & u, std::vector<std::string> new_names)
{
  if (u.rows() != l.dim() || u.cols() != l.dim()) {
    throw InputError("basis change has wrong size");
  }
  const SymMatrix inv = mat_inverse(u);
  if (new_names.empty()) {
    new_names = l.basis();
  }
  LieAlgebra r(l.name(), std::move(new_names), l.params());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      r.set_bracket(i, j, inv * l.bracket(u.col(i), u.col(j)));
    }
  }
  r.set_convention("f_i = sum_j U_ji e_j");
  return r;
}

LieAlgebra in_basis(const LieAlgebra & l, const std::vector<std::string> & combos, std::vector<std::string> new_names)
{
  std::vector<Vec> cols;
  for (const auto & c : combos) {
    cols.push_back(l.vector(c));
  }
  return change_basis(l, map_from_image_rows(cols), std::move(new_names));
}

bool is_homomorphism(const LieAlgebra & from, const LieAlgebra & to, const LinearMap & u)
{
  if (u.rows() != to.dim() || u.cols() != from.dim()) {
    return false;
  }
  for (std::size_t i = 0; i < from.dim(); ++i) {
    for (std::size_t j = i + 1; j < from.dim(); ++j) {
      if (!(u * from.bracket_basis(i, j) == to.bracket(u.col(i), u.col(j)))) {
        return false;
      }
    }
  }
  return true;
}

bool is_automorphism(const LieAlgebra & l, const LinearMap & u)
{
  if (u.rows() != l.dim() || u.cols() != l.dim()) {
    return false;
  }
  if (determinant(u).is_zero()) {
    return false;
  }
  return is_homomorphism(l, l, u);
}

bool subalgebra_closed(const LieAlgebra & l, const std::vector<Vec> & gens)
{
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!express_in_span(gens, l.bracket(gens[i], gens[j]))) {
        return false;
      }
    }
  }
  return true;
}

bool is_ideal(const LieAlgebra & l, const std::vector<Vec> & gens)
{
  for (const auto & g : gens) {
    for (std::size_t i = 0; i < l.dim(); ++i) {
      if (!express_in_span(gens, l.bracket(l.unit(i), g))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Vec> largest_ideal_in(const LieAlgebra & l, const std::vector<Vec> & gens)
{
  const std::size_t n = l.dim();
  std::vector<Vec> cur = canonical_span(gens, n);
  for (;;) {
    if (cur.empty()) {
      return cur;
    }
    // annihilator of span(cur): rows w with w . b = 0
    const std::vector<Vec> ann = nullspace(SymMatrix::from_rows(cur));
    std::vector<Vec> conditions;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Vec> images;
      for (const auto & b : cur) {
        images.push_back(l.bracket(l.unit(k), b));
      }
      for (const auto & w : ann) {
        Vec row(cur.size());
        for (std::size_t s = 0; s < cur.size(); ++s) {
          for (std::size_t m = 0; m < n; ++m) {
            if (!w[m].is_zero() && !images[s][m].is_zero()) {
              row[s] += w[m] * images[s][m];
            }
          }
        }
        conditions.push_back(std::move(row));
      }
    }
    if (conditions.empty()) {
      return cur;
    }
    const std::vector<Vec> coeffs = nullspace(SymMatrix::from_rows(conditions));
    if (coeffs.size() == cur.size()) {
      return cur;
    }
    std::vector<Vec> next;
    for (const auto & c : coeffs) {
      Vec v(n);
      for (std::size_t s = 0; s < cur.size(); ++s) {
        for (std::size_t m = 0; m < n; ++m) {
          if (!c[s].is_zero() && !cur[s][m].is_zero()) {
            v[m] += c[s] * cur[s][m];
          }
        }
      }
      next.push_back(std::move(v));
    }
    cur = canonical_span(next, n);
  }
}

// ---------------------------------------------------------------------------
// Text formats

std::string read_file(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string & s)
{
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) {
    out.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_key_lines(std::string_view text)
{
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is{std::string(text)};
  int lineno = 0;
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) {
      line.erase(h);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      out.emplace_back("bracket", line);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw InputError("line " + std::to_string(lineno) + ": expected 'key: value'");
    }
    out.emplace_back(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
  }
  return out;
}

LieAlgebra parse_algebra(std::string_view text)
{
  std::string name;
  std::optional<std::size_t> dim;
  std::vector<std::string> basis;
  std::vector<ParamInfo> params;
  std::vector<std::string> brackets;
  std::optional<std::string> qparam;
  for (const auto & [key, value] : parse_key_lines(text)) {
    if (key == "name") {
      name = value;
    } else if (key == "dim") {
      dim = std::stoul(value);
    } else if (key == "basis") {
      basis = split_ws(value);
    } else if (key == "param") {
      const auto bar = value.find('|');
      const std::string sym = trim(value.substr(0, bar));
      if (!is_valid_symbol_name(sym)) {
        throw InputError("invalid parameter name '" + sym + "'");
      }
      params.push_back({Symbol(sym), bar == std::string::npos ? std::string() : trim(value.substr(bar + 1))});
    } else if (key == "deformation_parameter") {
      qparam = value;
    } else if (key == "bracket") {
      brackets.push_back(value);
    } else {
      throw InputError("unknown key '" + key + "' in algebra file");
    }
  }
  if (basis.empty()) {
    throw InputError("algebra file without basis");
  }
  if (dim && *dim != basis.size()) {
    throw InputError("dim does not match the basis length");
  }
  if (qparam) {
    bool known = false;
    for (const auto & p : params) {
      known = known || p.symbol.name() == *qparam;
    }
    if (!known) {
      params.push_back({Symbol(*qparam), "deformation parameter"});
    }
  }
  LieAlgebra l(name, basis, params);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto & b : brackets) {
    const auto close = b.find(']');
    const auto comma = b.find(',');
    const auto eq = b.find('=', close == std::string::npos ? 0 : close);
    if (close == std::string::npos || comma == std::string::npos || comma > close || eq == std::string::npos) {
      throw InputError("malformed bracket line '" + b + "'");
    }
    const std::string a = trim(b.substr(1, comma - 1));
    const std::string c = trim(b.substr(comma + 1, close - comma - 1));
    const std::size_t i = l.index_of(a);
    const std::size_t j = l.index_of(c);
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
      throw InputError("bracket [" + a + "," + c + "] given twice");
    }
    l.set_bracket(i, j, l.vector(b.substr(eq + 1)));
  }
  for (const auto & s : l.symbols()) {
    bool declared = false;
    for (const auto & p : l.params()) {
      declared = declared || p.symbol == s;
    }
    if (!declared) {
      throw UnknownSymbol("undeclared parameter '" + s.name() + "' in " + name);
    }
  }
  return l;
}

LieAlgebra load_algebra(const std::string & path) { return parse_algebra(read_file(path)); }

std::string render_algebra(const LieAlgebra & l)
{
  std::ostringstream os;
  os << "name: " << l.name() << "\n";
  os << "dim: " << l.dim() << "\n";
  os << "basis:";
  for (const auto & b : l.basis()) {
    os << " " << b;
  }
  os << "\n";
  for (const auto & p : l.params()) {
    os << "param: " << p.symbol.name();
    if (!p.range.empty()) {
      os << " | " << p.range;
    }
    os << "\n";
  }
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const Vec & v = l.bracket_basis(i, j);
      const std::string s = render_combination(v, l.basis());
      if (s != "0") {
        os << "[" << l.basis()[i] << "," << l.basis()[j] << "] = " << s << "\n";
      }
    }
  }
  return os.str();
}

std::string render_algebra_latex(const LieAlgebra & l)
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const std::string s = render_combination_latex(l.bracket_basis(i, j), l.basis());
      if (s != "0") {
        os << (first ? "" : ",\\quad ") << "[" << l.basis()[i] << "," << l.basis()[j] << "]=" << s;
        first = false;
      }
    }
  }
  return os.str();
}

SubalgebraSpec parse_subalgebra(std::string_view text, const LieAlgebra & parent)
{
  SubalgebraSpec s;
  for (const auto & [key, value] : parse_key_lines(text)) {
    if (key == "parent") {
      s.parent = value;
    } else if (key == "gen") {
      s.gens.push_back(parent.vector(value));
    } else {
      throw InputError("unknown key '" + key + "' in subalgebra file");
    }
  }
  if (!s.parent.empty() && s.parent != parent.name()) {
    throw InputError("subalgebra parent '" + s.parent + "' does not match " + parent.name());
  }
  if (!subalgebra_closed(parent, s.gens)) {
    throw InputError("generators are not closed under the bracket");
  }
  return s;
}

}  // namespace galreal
