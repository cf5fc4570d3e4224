#include "galreal/shirokov.hpp"

#include "galreal/combination.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

#include <cctype>
#include <sstream>

namespace galreal {

LinearMap Splitting::matrix() const
{
  std::vector<Vec> cols = complement;
  cols.insert(cols.end(), sub.begin(), sub.end());
  return SymMatrix::from_rows(cols).transpose();
}

void validate_splitting(const LieAlgebra & l, const Splitting & s)
{
  if (s.complement.size() + s.sub.size() != l.dim()) {
    throw InputError("complement and subalgebra do not add up to the dimension");
  }
  for (const auto & v : s.complement) {
    if (v.size() != l.dim()) {
      throw InputError("complement vector has wrong length");
    }
  }
  for (const auto & v : s.sub) {
    if (v.size() != l.dim()) {
      throw InputError("subalgebra vector has wrong length");
    }
  }
  if (determinant(s.matrix()).is_zero()) {
    throw InputError("complement and subalgebra do not span the algebra");
  }
  if (!subalgebra_closed(l, s.sub)) {
    throw InputError("subalgebra generators are not closed under the bracket");
  }
}

Field Realization::image(const Vec & v) const
{
  Field f(m);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (v[i].is_zero()) {
      continue;
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (!images[i][a].is_zero()) {
        f[a] += v[i] * images[i][a];
      }
    }
  }
  return f;
}

namespace {

// Only the first `factors` one-parameter subgroups are exponentiated; the
// remaining coordinates are taken at zero.
SymMatrix one_forms_upto(const LieAlgebra & l, std::size_t factors)
{
  const std::size_t n = l.dim();
  SymMatrix w(n, n);
  SymMatrix partial = SymMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && i <= factors) {
      const SymMatrix ad = adjoint(l, l.unit(i - 1));
      partial = partial * mat_exp_ad(ad, Symbol::coordinate(static_cast<int>(i)), -1);
    }
    for (std::size_t j = 0; j < n; ++j) {
      w.at(j, i) = partial.at(j, i);
    }
  }
  return w;
}

}  // namespace

SymMatrix one_forms(const LieAlgebra & l) { return one_forms_upto(l, l.dim()); }

VectorFieldSet left_invariant_fields(const LieAlgebra & l)
{
  const SymMatrix inv = mat_inverse(one_forms(l));
  VectorFieldSet out;
  out.ncoords = l.dim();
  out.labels = l.basis();
  for (std::size_t k = 0; k < l.dim(); ++k) {
    out.fields.push_back(inv.col(k));
  }
  return out;
}

Realization realize(const LieAlgebra & l, const Splitting & s) { return realize(l, s, nullptr, nullptr); }

Realization realize(const LieAlgebra & l, const Splitting & s, SymMatrix * w_out, VectorFieldSet * fields_out)
{
  validate_splitting(l, s);
  const std::size_t n = l.dim();
  const std::size_t m = s.m();
  const LinearMap u = s.matrix();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("f" + std::to_string(k + 1));
  }
  const LieAlgebra adapted = change_basis(l, u, names);
  SymMatrix w;
  bool truncated = false;
  try {
    w = one_forms(adapted);
  } catch (const RationalSpectrumRequired &) {
    // isotropy generators need not have rational spectrum: the coset fields live at zero isotropy coordinates
    w = one_forms_upto(adapted, m);
    truncated = true;
  }
  const SymMatrix winv = mat_inverse(w);
  if (w_out) {
    *w_out = w;
  }
  if (fields_out) {
    fields_out->ncoords = n;
    fields_out->labels = names;
    fields_out->fields.clear();
    for (std::size_t k = 0; k < n; ++k) {
      fields_out->fields.push_back(winv.col(k));
    }
  }

  // projection onto the first m coordinates
  std::vector<Field> projected(n, Field(m));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < m; ++a) {
      const RatExpr & c = winv.at(a, k);
      for (std::size_t b = m; b < n; ++b) {
        if (c.depends_on(Symbol::coordinate(static_cast<int>(b + 1)))) {
          throw InputError("projected field depends on an isotropy coordinate; the splitting is not regular");
        }
      }
      projected[k][a] = c;
    }
  }

  const SymMatrix uinv = mat_inverse(u);
  Realization r;
  r.algebra = l;
  r.m = m;
  r.provenance = truncated ? "realize (isotropy coordinates at zero)" : "realize";
  for (std::size_t i = 0; i < n; ++i) {
    Field f(m);
    for (std::size_t k = 0; k < n; ++k) {
      const RatExpr & c = uinv.at(k, i);
      if (c.is_zero()) {
        continue;
      }
      for (std::size_t a = 0; a < m; ++a) {
        if (!projected[k][a].is_zero()) {
          f[a] += c * projected[k][a];
        }
      }
    }
    r.images.push_back(std::move(f));
  }
  return r;
}

Realization promote_parameter(const Realization & r, const Symbol & p, std::string * warning)
{
  bool present = false;
  for (const auto & f : r.images) {
    for (const auto & c : f) {
      present = present || c.depends_on(p);
    }
  }
  if (!present) {
    if (warning) {
      *warning = "parameter " + p.name() + " does not occur; realization unchanged";
    }
    return r;
  }
  Realization out = r;
  out.m = r.m + 1;
  const Symbol xnew = Symbol::coordinate(static_cast<int>(out.m));
  const std::map<Symbol, RatExpr> binding{{p, RatExpr(ExpPoly::symbol(xnew))}};
  for (auto & f : out.images) {
    for (auto & c : f) {
      c = c.substitute(binding);
    }
    f.emplace_back();
  }
  std::string note = p.name();
  for (const auto & info : r.algebra.params()) {
    if (info.symbol == p && !info.range.empty()) {
      note += " | " + info.range;
    }
  }
  out.coordinate_notes[out.m] = note;
  out.provenance = r.provenance + " promoted " + p.name();
  return out;
}

Splitting parse_splitting(std::string_view text, const LieAlgebra & l)
{
  Splitting s;
  bool seen_section = false;
  for (const auto & [key, value] : parse_key_lines(text)) {
    if (key == "algebra") {
      if (value != l.name()) {
        throw InputError("splitting is for '" + value + "', not " + l.name());
      }
    } else if (key == "complement") {
      s.complement.push_back(l.vector(value));
      seen_section = true;
    } else if (key == "subalgebra") {
      if (!value.empty() && value != "0") {
        s.sub.push_back(l.vector(value));
      }
      seen_section = true;
    } else {
      throw InputError("unknown key '" + key + "' in splitting file");
    }
  }
  if (!seen_section) {
    throw InputError("splitting file lists no generators");
  }
  validate_splitting(l, s);
  return s;
}

std::vector<std::string> derivative_labels(std::size_t m)
{
  std::vector<std::string> out;
  for (std::size_t a = 1; a <= m; ++a) {
    out.push_back("d" + std::to_string(a));
  }
  return out;
}

std::vector<std::string> derivative_labels_latex(std::size_t m)
{
  std::vector<std::string> out;
  for (std::size_t a = 1; a <= m; ++a) {
    out.push_back(a < 10 ? "\\partial_" + std::to_string(a) : "\\partial_{" + std::to_string(a) + "}");
  }
  return out;
}

std::string render_realization(const Realization & r)
{
  const auto labels = derivative_labels(r.m);
  std::ostringstream os;
  for (std::size_t i = 0; i < r.images.size(); ++i) {
    os << r.algebra.basis()[i] << " = " << render_combination(r.images[i], labels) << "\n";
  }
  return os.str();
}

std::string render_realization_latex(const Realization & r)
{
  const auto labels = derivative_labels_latex(r.m);
  std::ostringstream os;
  for (std::size_t i = 0; i < r.images.size(); ++i) {
    os << r.algebra.basis()[i] << "=" << render_combination_latex(r.images[i], labels);
    os << (i + 1 < r.images.size() ? ",\\quad " : "");
  }
  return os.str();
}

Realization parse_realization(std::string_view text, const LieAlgebra & l, std::size_t m)
{
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::istringstream is{std::string(text)};
  std::size_t max_index = 0;
  for (std::string line; std::getline(is, line);) {
    if (auto h = line.find('#'); h != std::string::npos) {
      line.erase(h);
    }
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    if (eq == std::string::npos) {
      throw InputError("realization line without '=': " + line);
    }
    std::string name = line.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    const std::string rhs = line.substr(eq + 1);
    for (std::size_t p = rhs.find('d'); p != std::string::npos; p = rhs.find('d', p + 1)) {
      const bool boundary = p == 0 || !(std::isalnum(static_cast<unsigned char>(rhs[p - 1])) || rhs[p - 1] == '_');
      std::size_t q = p + 1;
      while (q < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[q]))) {
        ++q;
      }
      if (boundary && q > p + 1 && (q == rhs.size() || !(std::isalnum(static_cast<unsigned char>(rhs[q])) || rhs[q] == '_'))) {
        max_index = std::max<std::size_t>(max_index, std::stoul(rhs.substr(p + 1, q - p - 1)));
      }
    }
    lines.emplace_back(l.index_of(name), rhs);
  }
  if (m == 0) {
    m = max_index;
  } else if (max_index > m) {
    throw InputError("realization uses d" + std::to_string(max_index) + " beyond " + std::to_string(m) + " coordinates");
  }
  Realization r;
  r.algebra = l;
  r.m = m;
  r.provenance = "fixture";
  r.images.assign(l.dim(), Field(m));
  std::vector<bool> seen(l.dim(), false);
  const auto labels = derivative_labels(m);
  for (const auto & [i, rhs] : lines) {
    if (seen[i]) {
      throw InputError("generator " + l.basis()[i] + " given twice");
    }
    seen[i] = true;
    r.images[i] = parse_combination(rhs, labels);
  }
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (!seen[i]) {
      throw InputError("realization misses generator " + l.basis()[i]);
    }
  }
  return r;
}

}  // namespace galreal
