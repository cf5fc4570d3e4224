#include "galreal/jets.hpp"

#include "galreal/catalog.hpp"
#include "galreal/combination.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"
#include "galreal/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace galreal {

namespace {

std::string trim(std::string s)
{
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

std::vector<std::string> split(const std::string & s, char sep)
{
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string part; std::getline(is, part, sep);) {
    part = trim(part);
    if (!part.empty()) {
      out.push_back(part);
    }
  }
  return out;
}

std::vector<std::string> words(const std::string & s)
{
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string w; is >> w;) {
    out.push_back(w);
  }
  return out;
}

int order_of(const MultiIndex & j)
{
  int n = 0;
  for (int c : j) {
    n += c;
  }
  return n;
}

}  // namespace

JetSpace::JetSpace(std::vector<std::string> independents, std::vector<std::string> dependents, int max_order)
    : independents_(std::move(independents)), dependents_(std::move(dependents)), max_order_(max_order)
{
  for (const auto & v : independents_) {
    if (v.size() != 1 || !std::isalpha(static_cast<unsigned char>(v[0]))) {
      throw InputError("independent variables must be single letters: " + v);
    }
  }
  for (const auto & d : dependents_) {
    if (d.empty() || d.find('_') != std::string::npos) {
      throw InputError("dependent names must be nonempty without '_': " + d);
    }
  }
}

Symbol JetSpace::coordinate(std::size_t dep, const MultiIndex & j) const
{
  std::string letters;
  for (std::size_t k = 0; k < j.size(); ++k) {
    letters.append(static_cast<std::size_t>(j[k]), independents_[k][0]);
  }
  return letters.empty() ? Symbol(dependents_.at(dep)) : Symbol(dependents_.at(dep) + "_" + letters);
}

MultiIndex JetSpace::index(std::string_view letters) const
{
  MultiIndex j(independents_.size(), 0);
  for (char c : letters) {
    std::size_t k = 0;
    while (k < independents_.size() && independents_[k][0] != c) {
      ++k;
    }
    if (k == independents_.size()) {
      throw InputError(std::string("unknown independent variable '") + c + "'");
    }
    ++j[k];
  }
  return j;
}

Symbol JetSpace::derivative(const std::string & dep, std::string_view letters) const
{
  const auto it = std::find(dependents_.begin(), dependents_.end(), dep);
  if (it == dependents_.end()) {
    throw InputError("unknown dependent variable " + dep);
  }
  return coordinate(static_cast<std::size_t>(it - dependents_.begin()), index(letters));
}

std::optional<std::pair<std::size_t, MultiIndex>> JetSpace::decode(const Symbol & s) const
{
  const std::string & n = s.name();
  const auto us = n.find('_');
  const std::string dep = us == std::string::npos ? n : n.substr(0, us);
  const auto it = std::find(dependents_.begin(), dependents_.end(), dep);
  if (it == dependents_.end()) {
    return std::nullopt;
  }
  const auto a = static_cast<std::size_t>(it - dependents_.begin());
  if (us == std::string::npos) {
    return std::make_pair(a, MultiIndex(independents_.size(), 0));
  }
  MultiIndex j(independents_.size(), 0);
  for (std::size_t p = us + 1; p < n.size(); ++p) {
    std::size_t k = 0;
    while (k < independents_.size() && independents_[k][0] != n[p]) {
      ++k;
    }
    if (k == independents_.size()) {
      return std::nullopt;
    }
    ++j[k];
  }
  if (coordinate(a, j) != s) {
    return std::nullopt;  // letters out of canonical order
  }
  return std::make_pair(a, j);
}

DifferentialFunction total_derivative(const JetSpace & js, const DifferentialFunction & f, std::size_t v)
{
  RatExpr out = f.differentiate(js.independent(v));
  for (const auto & s : f.symbols()) {
    if (auto d = js.decode(s)) {
      MultiIndex j = d->second;
      ++j[v];
      out += RatExpr(ExpPoly::symbol(js.coordinate(d->first, j))) * f.differentiate(s);
    }
  }
  for (const auto & a : js.auxiliaries()) {
    if (f.depends_on(a.symbol)) {
      out += a.derivatives.at(v) * f.differentiate(a.symbol);
    }
  }
  return out;
}

bool is_zero_on(const JetSpace & js, const RatExpr & f)
{
  if (f.is_zero() || js.circles().empty()) {
    return f.is_zero();
  }
  // s = 2z/(1+z^2), c = (1-z^2)/(1+z^2)
  std::map<Symbol, RatExpr> b;
  int k = 0;
  for (const auto & [s, c] : js.circles()) {
    const RatExpr z(ExpPoly::symbol("circle_z" + std::to_string(++k)));
    const RatExpr d = RatExpr(1) + z * z;
    b.emplace(s, RatExpr(2) * z / d);
    b.emplace(c, (RatExpr(1) - z * z) / d);
  }
  return f.substitute(b).is_zero();
}

const RatExpr & Prolongation::at(std::size_t dep, const MultiIndex & j) const
{
  const auto it = coefficients.find({dep, j});
  if (it == coefficients.end()) {
    throw InputError("prolongation coefficient not computed");
  }
  return it->second;
}

namespace {

class Prolonger {
public:
  Prolonger(const JetSpace & js, const SymmetryCandidate & x) : js_(js), x_(x)
  {
    if (x.xi.size() != js.independents().size() || x.phi.size() != js.dependents().size()) {
      throw InputError("symmetry candidate does not match the jet space");
    }
    for (std::size_t i = 0; i < x.xi.size(); ++i) {
      for (std::size_t v = 0; v < x.xi.size(); ++v) {
        dxi_[{i, v}] = total_derivative(js, x.xi[i], v);
      }
    }
  }

  const RatExpr & get(std::size_t a, const MultiIndex & j)
  {
    if (auto it = memo_.find({a, j}); it != memo_.end()) {
      return it->second;
    }
    RatExpr val;
    if (order_of(j) == 0) {
      val = x_.phi[a];
    } else {
      // peel the last variable that occurs
      std::size_t v = j.size();
      while (j[--v] == 0) {
      }
      MultiIndex prev = j;
      --prev[v];
      val = total_derivative(js_, get(a, prev), v);
      for (std::size_t i = 0; i < x_.xi.size(); ++i) {
        const RatExpr & d = dxi_.at({i, v});
        if (!d.is_zero()) {
          MultiIndex ji = prev;
          ++ji[i];
          val -= d * RatExpr(ExpPoly::symbol(js_.coordinate(a, ji)));
        }
      }
    }
    return memo_.emplace(std::make_pair(a, j), std::move(val)).first->second;
  }

private:
  const JetSpace & js_;
  const SymmetryCandidate & x_;
  std::map<std::pair<std::size_t, std::size_t>, RatExpr> dxi_;
  std::map<std::pair<std::size_t, MultiIndex>, RatExpr> memo_;
};

void all_indices(std::size_t n, int order, MultiIndex & cur, std::size_t pos, std::vector<MultiIndex> & out)
{
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= order; ++c) {
    cur[pos] = c;
    if (order_of(cur) <= order) {
      all_indices(n, order, cur, pos + 1, out);
    }
  }
  cur[pos] = 0;
}

}  // namespace

Prolongation prolong(const JetSpace & js, const SymmetryCandidate & x, int order)
{
  if (order < 0 || order > 6) {
    throw InputError("prolongation order must be between 0 and 6");
  }
  Prolonger p(js, x);
  std::vector<MultiIndex> idx;
  MultiIndex cur(js.independents().size(), 0);
  all_indices(cur.size(), order, cur, 0, idx);
  Prolongation out;
  for (std::size_t a = 0; a < js.dependents().size(); ++a) {
    for (const auto & j : idx) {
      out.coefficients.emplace(std::make_pair(a, j), p.get(a, j));
    }
  }
  return out;
}

RatExpr apply_point(const JetSpace & js, const SymmetryCandidate & x, const RatExpr & f)
{
  RatExpr out;
  for (std::size_t i = 0; i < x.xi.size(); ++i) {
    if (x.xi[i].is_zero()) {
      continue;
    }
    RatExpr d = f.differentiate(js.independent(i));
    for (const auto & a : js.auxiliaries()) {
      if (f.depends_on(a.symbol)) {
        d += a.derivatives.at(i) * f.differentiate(a.symbol);
      }
    }
    out += x.xi[i] * d;
  }
  for (std::size_t a = 0; a < x.phi.size(); ++a) {
    if (!x.phi[a].is_zero()) {
      out += x.phi[a] * f.differentiate(Symbol(js.dependents()[a]));
    }
  }
  return out;
}

SymmetryCandidate point_bracket(const JetSpace & js, const SymmetryCandidate & a, const SymmetryCandidate & b)
{
  SymmetryCandidate out;
  out.name = "[" + a.name + "," + b.name + "]";
  for (std::size_t i = 0; i < a.xi.size(); ++i) {
    out.xi.push_back(apply_point(js, a, b.xi[i]) - apply_point(js, b, a.xi[i]));
  }
  for (std::size_t k = 0; k < a.phi.size(); ++k) {
    out.phi.push_back(apply_point(js, a, b.phi[k]) - apply_point(js, b, a.phi[k]));
  }
  return out;
}

RatExpr eliminate_principal(const JetSpace & js, const std::vector<JetEquation> & eqs, const RatExpr & f)
{
  RatExpr cur = f;
  std::map<std::pair<std::size_t, MultiIndex>, RatExpr> memo;
  std::function<RatExpr(const JetEquation &, const MultiIndex &)> derive = [&](const JetEquation & e, const MultiIndex & extra) -> RatExpr {
    const auto key = std::make_pair(e.dependent, [&] {
      MultiIndex j = e.lead;
      for (std::size_t k = 0; k < j.size(); ++k) {
        j[k] += extra[k];
      }
      return j;
    }());
    if (auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    RatExpr val;
    if (order_of(extra) == 0) {
      val = e.rhs;
    } else {
      std::size_t v = extra.size();
      while (extra[--v] == 0) {
      }
      MultiIndex prev = extra;
      --prev[v];
      val = total_derivative(js, derive(e, prev), v);
    }
    memo.emplace(key, val);
    return val;
  };
  for (int round = 0; round < 64; ++round) {
    std::map<Symbol, RatExpr> b;
    for (const auto & s : cur.symbols()) {
      const auto d = js.decode(s);
      if (!d) {
        continue;
      }
      for (const auto & e : eqs) {
        if (e.dependent != d->first) {
          continue;
        }
        MultiIndex extra(d->second.size());
        bool above = true;
        for (std::size_t k = 0; k < extra.size(); ++k) {
          extra[k] = d->second[k] - e.lead[k];
          above = above && extra[k] >= 0;
        }
        if (above) {
          b.emplace(s, derive(e, extra));
          break;
        }
      }
    }
    if (b.empty()) {
      return cur;
    }
    cur = cur.substitute(b);
  }
  throw InputError("elimination of principal derivatives does not terminate");
}

SymmetryCheck check_point_symmetry(const JetSpace & js, const std::vector<JetEquation> & eqs, const SymmetryCandidate & x)
{
  if (eqs.empty()) {
    throw InputError("no equations declared");
  }
  Prolonger p(js, x);
  SymmetryCheck out;
  out.ok = true;
  for (const auto & e : eqs) {
    if (order_of(e.lead) == 0) {
      throw InputError("leading derivative must have positive order");
    }
    const RatExpr delta = RatExpr(ExpPoly::symbol(js.coordinate(e.dependent, e.lead))) - e.rhs;
    RatExpr xd;
    for (std::size_t i = 0; i < x.xi.size(); ++i) {
      if (x.xi[i].is_zero()) {
        continue;
      }
      RatExpr d = delta.differentiate(js.independent(i));
      for (const auto & a : js.auxiliaries()) {
        if (delta.depends_on(a.symbol)) {
          d += a.derivatives.at(i) * delta.differentiate(a.symbol);
        }
      }
      xd += x.xi[i] * d;
    }
    for (const auto & s : delta.symbols()) {
      if (auto d = js.decode(s)) {
        xd += p.get(d->first, d->second) * delta.differentiate(s);
      }
    }
    RatExpr r = eliminate_principal(js, eqs, xd);
    const bool zero = is_zero_on(js, r);
    out.ok = out.ok && zero;
    out.residuals.push_back(std::move(r));
  }
  return out;
}

namespace {

std::vector<Symbol> point_coordinates(const JetSpace & js)
{
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < js.independents().size(); ++k) {
    out.push_back(js.independent(k));
  }
  for (const auto & d : js.dependents()) {
    out.emplace_back(d);
  }
  return out;
}

std::vector<RatExpr> components(const JetSpace & js, const SymmetryCandidate & x)
{
  std::vector<RatExpr> out = x.xi;
  out.insert(out.end(), x.phi.begin(), x.phi.end());
  std::map<Symbol, RatExpr> b;
  int k = 0;
  for (const auto & [s, c] : js.circles()) {
    const RatExpr z(ExpPoly::symbol("circle_z" + std::to_string(++k)));
    const RatExpr d = RatExpr(1) + z * z;
    b.emplace(s, RatExpr(2) * z / d);
    b.emplace(c, (RatExpr(1) - z * z) / d);
  }
  if (!b.empty()) {
    for (auto & c : out) {
      c = c.substitute(b);
    }
  }
  return out;
}

}  // namespace

LieAlgebra operator_algebra(const JetSpace & js, const std::vector<SymmetryCandidate> & ops, const std::string & name)
{
  const std::size_t n = ops.size();
  std::vector<std::string> labels;
  for (const auto & o : ops) {
    labels.push_back(o.name);
  }
  LieAlgebra out(name, labels);
  std::vector<Symbol> coords = point_coordinates(js);
  for (std::size_t k = 1; k <= js.circles().size(); ++k) {
    coords.emplace_back("circle_z" + std::to_string(k));
  }
  for (const auto & a : js.auxiliaries()) {
    bool on_circle = false;
    for (const auto & [s, c] : js.circles()) {
      on_circle = on_circle || a.symbol == s || a.symbol == c;
    }
    if (!on_circle) {
      coords.push_back(a.symbol);
    }
  }
  std::vector<std::vector<RatExpr>> comp;
  for (const auto & o : ops) {
    comp.push_back(components(js, o));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto b = components(js, point_bracket(js, ops[i], ops[j]));
      // constants c with sum c_k X_k = [X_i, X_j], found on sample points and then checked exactly
      std::vector<Vec> rows;
      for (int sample = 0; rows.size() < 3 * (n + 1) && sample < 200; ++sample) {
        std::map<Symbol, RatExpr> at;
        for (std::size_t c = 0; c < coords.size(); ++c) {
          at.emplace(coords[c], RatExpr(Rational(static_cast<long>(7 * sample + 3 * c + 2), static_cast<long>(5 + sample + 2 * c))));
        }
        std::vector<Vec> block;
        bool defined = true;
        for (std::size_t a = 0; a < b.size() && defined; ++a) {
          Vec row;
          for (std::size_t k = 0; k <= n && defined; ++k) {
            const RatExpr & e = k < n ? comp[k][a] : b[a];
            if (RatExpr(e.den()).substitute(at).is_zero()) {
              defined = false;
              break;
            }
            row.push_back(e.substitute(at));
          }
          block.push_back(std::move(row));
        }
        if (defined) {
          rows.insert(rows.end(), block.begin(), block.end());
        }
      }
      const auto ns = nullspace(SymMatrix::from_rows(rows));
      std::optional<Vec> c;
      for (const auto & v : ns) {
        if (!v[n].is_zero()) {
          Vec w(n);
          for (std::size_t k = 0; k < n; ++k) {
            w[k] = -v[k] / v[n];
          }
          c = std::move(w);
          break;
        }
      }
      bool exact = c.has_value();
      for (std::size_t a = 0; exact && a < b.size(); ++a) {
        RatExpr r = -b[a];
        for (std::size_t k = 0; k < n; ++k) {
          r += (*c)[k] * comp[k][a];
        }
        exact = r.is_zero();
      }
      if (!exact) {
        throw InputError("[" + ops[i].name + "," + ops[j].name + "] is not in the span of the operators");
      }
      out.set_bracket(i, j, *c);
    }
  }
  return out;
}

std::string substitute_identifiers(std::string_view text, const std::map<std::string, std::string> & values)
{
  std::string out;
  std::size_t p = 0;
  while (p < text.size()) {
    const char c = text[p];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t q = p;
      while (q < text.size() && (std::isalnum(static_cast<unsigned char>(text[q])) || text[q] == '_')) {
        ++q;
      }
      const std::string w(text.substr(p, q - p));
      const auto it = values.find(w);
      out += it == values.end() ? w : "(" + it->second + ")";
      p = q;
    } else {
      out += c;
      ++p;
    }
  }
  return out;
}

namespace {

struct RawFile {
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<std::map<std::string, std::string>> samples;
};

SymmetryCandidate parse_operator(const JetSpace & js, const std::string & name, const std::string & body)
{
  SymmetryCandidate x;
  x.name = name;
  x.xi.assign(js.independents().size(), RatExpr());
  x.phi.assign(js.dependents().size(), RatExpr());
  for (const auto & part : split(body, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw ParseError("operator component without '=': " + part);
    }
    const std::string key = trim(part.substr(0, eq));
    const RatExpr val = parse_ratexpr(part.substr(eq + 1));
    if (key.rfind("xi_", 0) == 0) {
      const auto & ind = js.independents();
      const auto it = std::find(ind.begin(), ind.end(), key.substr(3));
      if (it == ind.end()) {
        throw ParseError("unknown independent in " + key);
      }
      x.xi[static_cast<std::size_t>(it - ind.begin())] = val;
    } else if (key.rfind("phi_", 0) == 0) {
      const auto & dep = js.dependents();
      const auto it = std::find(dep.begin(), dep.end(), key.substr(4));
      if (it == dep.end()) {
        throw ParseError("unknown dependent in " + key);
      }
      x.phi[static_cast<std::size_t>(it - dep.begin())] = val;
    } else {
      throw ParseError("operator components are xi_<independent> or phi_<dependent>: " + key);
    }
  }
  return x;
}

SymmetryProblem build_problem(const std::vector<std::pair<std::string, std::string>> & lines)
{
  SymmetryProblem p;
  std::vector<std::string> ind, dep;
  for (const auto & [k, v] : lines) {
    if (k == "name") {
      p.name = v;
    } else if (k == "independent") {
      ind = words(v);
    } else if (k == "dependent") {
      dep = words(v);
    }
  }
  if (ind.empty() || dep.empty()) {
    throw ParseError("equation file needs independent and dependent lines");
  }
  int order = 0;
  p.jets = JetSpace(ind, dep, 0);
  for (const auto & [k, v] : lines) {
    if (k == "auxiliary") {
      const auto parts = split(v, ';');
      if (parts.empty()) {
        throw ParseError("empty auxiliary line");
      }
      Auxiliary a{Symbol(parts[0]), std::vector<RatExpr>(ind.size())};
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string::npos) {
          throw ParseError("auxiliary derivative without '=': " + parts[i]);
        }
        const MultiIndex j = p.jets.index(trim(parts[i].substr(0, eq)));
        const auto k2 = static_cast<std::size_t>(std::find(j.begin(), j.end(), 1) - j.begin());
        a.derivatives[k2] = parse_ratexpr(parts[i].substr(eq + 1));
      }
      p.jets.add_auxiliary(std::move(a));
    } else if (k == "circle") {
      const auto w = words(v);
      if (w.size() != 2) {
        throw ParseError("circle needs two symbols");
      }
      p.jets.add_circle(Symbol(w[0]), Symbol(w[1]));
    } else if (k == "equation") {
      const auto eq = v.find('=');
      if (eq == std::string::npos) {
        throw ParseError("equation must read 'lead = rhs': " + v);
      }
      const auto lead = p.jets.decode(Symbol(trim(v.substr(0, eq))));
      if (!lead || order_of(lead->second) == 0) {
        throw ParseError("equation lead must be a derivative of a dependent: " + v);
      }
      p.equations.push_back({lead->first, lead->second, parse_ratexpr(v.substr(eq + 1))});
      order = std::max(order, order_of(lead->second));
    } else if (k.rfind("operator ", 0) == 0) {
      p.operators.push_back(parse_operator(p.jets, trim(k.substr(9)), v));
    } else if (k == "algebra") {
      const auto parts = split(v, ';');
      p.algebra = parts.at(0);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string::npos) {
          throw ParseError("algebra binding without '=': " + parts[i]);
        }
        p.algebra_bindings[trim(parts[i].substr(0, eq))] = trim(parts[i].substr(eq + 1));
      }
    } else if (k == "correspondence") {
      p.correspondence = split(v, ';');
    } else if (k == "order") {
      order = std::max(order, std::stoi(v));
    } else if (k != "name" && k != "independent" && k != "dependent" && k != "param" && k != "note") {
      throw ParseError("unknown key in equation file: " + k);
    }
  }
  p.jets = [&] {
    JetSpace js(ind, dep, order);
    for (const auto & a : p.jets.auxiliaries()) {
      js.add_auxiliary(a);
    }
    for (const auto & [s, c] : p.jets.circles()) {
      js.add_circle(s, c);
    }
    return js;
  }();
  return p;
}

}  // namespace

std::vector<SymmetryProblem> parse_symmetry_file(std::string_view text)
{
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<std::map<std::string, std::string>> samples;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    if (auto h = line.find('#'); h != std::string::npos) {
      line.erase(h);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("equation file line without ':': " + line);
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string val = trim(line.substr(colon + 1));
    if (key == "sample") {
      std::map<std::string, std::string> s;
      for (const auto & part : split(val, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) {
          throw ParseError("sample entries read name = value: " + part);
        }
        s[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
      }
      samples.push_back(std::move(s));
    } else {
      lines.emplace_back(key, val);
    }
  }
  if (samples.empty()) {
    samples.emplace_back();
  }
  std::vector<SymmetryProblem> out;
  for (const auto & s : samples) {
    std::vector<std::pair<std::string, std::string>> inst;
    std::string tag;
    for (const auto & [k, v] : s) {
      tag += (tag.empty() ? "" : ", ") + k + " = " + v;
    }
    for (const auto & [k, v] : lines) {
      inst.emplace_back(k, k == "name" || k == "note" ? v : substitute_identifiers(v, s));
    }
    SymmetryProblem p = build_problem(inst);
    p.sample = tag;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SymmetryProblem> load_symmetry_file(const std::string & path) { return parse_symmetry_file(read_file(path)); }

bool SymmetryReport::ok() const
{
  bool good = algebra_ok.value_or(true);
  for (const auto & [n, v] : operators) {
    good = good && v;
  }
  return good;
}

SymmetryReport verify_symmetry_problem(const SymmetryProblem & p)
{
  SymmetryReport r;
  r.problem = p.name + (p.sample.empty() ? "" : " [" + p.sample + "]");
  for (const auto & x : p.operators) {
    r.operators.emplace_back(x.name, check_point_symmetry(p.jets, p.equations, x).ok);
  }
  if (!p.algebra.empty()) {
    try {
      const LieAlgebra ext = operator_algebra(p.jets, p.operators, p.name);
      LieAlgebra cat = catalog_algebra(p.algebra);
      std::map<Symbol, RatExpr> b;
      for (const auto & [k, v] : p.algebra_bindings) {
        b.emplace(Symbol(k), parse_ratexpr(v));
      }
      cat = cat.substitute(b);
      std::map<std::string, std::string> images;
      for (const auto & c : p.correspondence) {
        const auto eq = c.find('=');
        if (eq == std::string::npos) {
          throw ParseError("correspondence entries read label = combination: " + c);
        }
        images[trim(c.substr(0, eq))] = trim(c.substr(eq + 1));
      }
      std::vector<Vec> cols;
      for (const auto & label : cat.basis()) {
        const auto it = images.find(label);
        if (it == images.end()) {
          throw ParseError("correspondence misses " + label);
        }
        cols.push_back(parse_combination(it->second, ext.basis()));
      }
      const LinearMap u = map_from_image_rows(cols);
      const bool iso = u.rows() == u.cols() && !determinant(u).is_zero() && is_homomorphism(cat, ext, u);
      r.algebra_ok = iso;
      r.algebra_detail = iso ? "isomorphic to " + cat.name() : "correspondence does not preserve brackets; extracted:\n" + render_algebra(ext);
    } catch (const Error & e) {
      r.algebra_ok = false;
      r.algebra_detail = e.what();
    }
  }
  return r;
}

}  // namespace galreal
