#include "galreal/fixtures.hpp"

#include "galreal/catalog.hpp"
#include "galreal/combination.hpp"
#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <future>
#include <sstream>

#include "json.hpp"

namespace galreal {

namespace {

using json = nlohmann::json;

std::vector<std::string> strings(const json & j, const char * key)
{
  std::vector<std::string> out;
  if (j.contains(key)) {
    for (const auto & s : j.at(key)) {
      out.push_back(s.get<std::string>());
    }
  }
  return out;
}

std::string lines_text(const std::vector<std::string> & lines)
{
  std::string out;
  for (const auto & l : lines) {
    out += l + "\n";
  }
  return out;
}

std::map<Symbol, RatExpr> bindings_of(const std::map<std::string, std::string> & b)
{
  std::map<Symbol, RatExpr> out;
  for (const auto & [k, v] : b) {
    out.emplace(Symbol(k), parse_ratexpr(v));
  }
  return out;
}

std::vector<Vec> combos(const std::vector<std::string> & texts, const LieAlgebra & l)
{
  std::vector<Vec> out;
  for (const auto & t : texts) {
    out.push_back(l.vector(t));
  }
  return out;
}

Vec substitute_vec(const Vec & v, const std::map<Symbol, RatExpr> & b)
{
  Vec out = v;
  for (auto & c : out) {
    c = c.substitute(b);
  }
  return out;
}

std::string table_of(const std::string & ref) { return ref.substr(0, ref.find('/')); }

const FixtureRow & find_row(const FixtureTable & t, const std::string & id)
{
  const std::string want = id == "generic" ? "h0" : id;
  for (const auto & r : t.rows) {
    if (r.id == want) {
      return r;
    }
  }
  throw NotFound("no fixture row '" + id + "' in " + t.id);
}

Realization table_realization(const FixtureTable & t, const LieAlgebra & l, const FixtureRow & row)
{
  Realization r = parse_realization(lines_text(row.realization), l, row.complement.empty() ? row.m : row.complement.size());
  r.provenance = t.id + "/" + row.id;
  return r;
}

std::optional<LinearMap> basis_map(const std::vector<std::string> & images, const LieAlgebra & l)
{
  if (images.empty()) {
    return std::nullopt;
  }
  if (images.size() != l.dim()) {
    throw InputError("basis map needs one image per basis element");
  }
  return map_from_image_rows(combos(images, l));
}

}  // namespace

LieAlgebra FixtureTable::load_algebra() const
{
  LieAlgebra l = catalog_algebra(algebra);
  if (!bindings.empty()) {
    l = l.substitute(bindings_of(bindings));
  }
  return l;
}

FixtureTable parse_table(std::string_view json_text)
{
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error & e) {
    throw ParseError(std::string("fixture table: ") + e.what());
  }
  FixtureTable t;
  t.id = j.at("table").get<std::string>();
  t.algebra = j.at("algebra").get<std::string>();
  t.title = j.value("title", "");
  if (j.contains("bindings")) {
    t.bindings = j.at("bindings").get<std::map<std::string, std::string>>();
  }
  if (j.contains("target")) {
    t.target = j.at("target").at("algebra").get<std::string>();
    t.target_basis = strings(j.at("target"), "basis");
  }
  for (const auto & r : j.at("rows")) {
    FixtureRow row;
    row.id = r.at("id").get<std::string>();
    row.subalgebra = strings(r, "subalgebra");
    row.complement = strings(r, "complement");
    row.realization = strings(r, "realization");
    row.m = r.value("m", std::size_t{0});
    row.generic = r.value("generic", false);
    if (r.contains("faithful")) {
      row.faithful = r.at("faithful").get<bool>();
    }
    if (r.contains("promoted")) {
      row.promote = r.at("promoted").at("param").get<std::string>();
      row.promoted = strings(r.at("promoted"), "realization");
    }
    if (r.contains("match")) {
      row.match_coordinates = strings(r.at("match"), "coordinates");
      row.match_basis = strings(r.at("match"), "basis");
    }
    t.rows.push_back(std::move(row));
  }
  if (j.contains("equivalences")) {
    for (const auto & e : j.at("equivalences")) {
      Equivalence q;
      q.from = e.at("from").get<std::string>();
      q.to = e.at("to").get<std::string>();
      q.coordinates = strings(e, "coordinates");
      q.basis = strings(e, "basis");
      q.stated = e.value("stated", true);
      t.equivalences.push_back(std::move(q));
    }
  }
  t.unverified = strings(j, "unverified");
  std::set<std::string> seen;
  for (const auto & r : t.rows) {
    if (!seen.insert(r.id).second) {
      throw InputError("duplicate fixture row " + t.id + "/" + r.id);
    }
  }
  return t;
}

std::vector<std::string> fixture_table_ids()
{
  std::vector<std::string> out;
  const std::filesystem::path dir = std::filesystem::path(data_dir()) / "fixtures";
  if (std::filesystem::exists(dir)) {
    for (const auto & e : std::filesystem::directory_iterator(dir)) {
      if (e.path().extension() == ".json") {
        out.push_back(e.path().stem().string());
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const std::string & a, const std::string & b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

FixtureTable load_table(const std::string & id)
{
  const std::filesystem::path p = std::filesystem::path(data_dir()) / "fixtures" / (id + ".json");
  if (!std::filesystem::exists(p)) {
    throw NotFound("no fixture table '" + id + "'");
  }
  return parse_table(read_file(p.string()));
}

Fixture load_fixture(const std::string & id)
{
  const auto slash = id.find('/');
  if (slash == std::string::npos) {
    throw NotFound("fixture id must look like table/row: '" + id + "'");
  }
  const FixtureTable t = load_table(id.substr(0, slash));
  std::string rest = id.substr(slash + 1);
  if (rest.rfind("row/", 0) == 0) {
    rest = rest.substr(4);
  }
  const FixtureRow & row = find_row(t, rest);
  Fixture f;
  f.id = t.id + "/" + row.id;
  f.algebra = t.load_algebra();
  f.row = row;
  if (!row.complement.empty() || !row.subalgebra.empty()) {
    Splitting s;
    s.complement = combos(row.complement, f.algebra);
    s.sub = combos(row.subalgebra, f.algebra);
    validate_splitting(f.algebra, s);
    if (!subalgebra_closed(f.algebra, s.sub)) {
      throw InputError(f.id + ": subalgebra is not closed");
    }
    f.splitting = std::move(s);
  }
  f.table = table_realization(t, f.algebra, row);
  return f;
}

Realization substitute(const Realization & r, const std::map<Symbol, RatExpr> & bindings)
{
  Realization out = r;
  out.algebra = r.algebra.substitute(bindings);
  for (auto & f : out.images) {
    f = substitute_vec(f, bindings);
  }
  return out;
}

Realization transport(const Realization & r, const LieAlgebra & target, const LinearMap & u)
{
  if (!is_homomorphism(target, r.algebra, u)) {
    throw InputError("basis correspondence is not a homomorphism " + target.name() + " -> " + r.algebra.name());
  }
  Realization out;
  out.algebra = target;
  out.m = r.m;
  out.provenance = r.provenance;
  for (std::size_t i = 0; i < target.dim(); ++i) {
    out.images.push_back(r.image(u.col(i)));
  }
  return out;
}

Realization resolve_realization(const std::string & ref)
{
  const std::string tid = table_of(ref);
  if (tid.size() == ref.size()) {
    throw InputError("realization reference must look like table/row: " + ref);
  }
  const FixtureTable t = load_table(tid);
  std::string rid = ref.substr(tid.size() + 1);
  std::map<std::string, std::string> bind;
  bool promoted = false;
  if (auto b = rid.find('['); b != std::string::npos) {
    const auto e = rid.find(']', b);
    const auto eq = rid.find('=', b);
    if (e == std::string::npos || eq == std::string::npos || eq > e) {
      throw InputError("bad binding in reference " + ref);
    }
    bind[rid.substr(b + 1, eq - b - 1)] = rid.substr(eq + 1, e - eq - 1);
    rid.erase(b);
  }
  if (auto a = rid.find('@'); a != std::string::npos) {
    promoted = true;
    rid.erase(a);
  }
  const LieAlgebra l = t.load_algebra();
  const FixtureRow & row = find_row(t, rid);
  Realization r;
  if (promoted) {
    if (!row.promote) {
      throw NotFound(ref + ": row has no promoted variant");
    }
    r = parse_realization(lines_text(row.promoted), l, row.complement.size() + 1);
  } else {
    r = table_realization(t, l, row);
  }
  if (!bind.empty()) {
    r = substitute(r, bindings_of(bind));
  }
  if (!t.target.empty()) {
    const LieAlgebra target = catalog_algebra(t.target);
    r = transport(r, target, map_from_image_rows(combos(t.target_basis, l)));
  }
  return r;
}

std::vector<Vec> intersect_spans(const std::vector<Vec> & a, const std::vector<Vec> & b, std::size_t dim)
{
  const auto ca = canonical_span(a, dim);
  const auto cb = canonical_span(b, dim);
  if (ca.empty() || cb.empty()) {
    return {};
  }
  // sum s_i a_i = sum t_j b_j
  SymMatrix m(dim, ca.size() + cb.size());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t i = 0; i < ca.size(); ++i) {
      m.at(r, i) = ca[i][r];
    }
    for (std::size_t j = 0; j < cb.size(); ++j) {
      m.at(r, ca.size() + j) = -cb[j][r];
    }
  }
  std::vector<Vec> out;
  for (const auto & n : nullspace(m)) {
    Vec v(dim);
    for (std::size_t i = 0; i < ca.size(); ++i) {
      for (std::size_t r = 0; r < dim; ++r) {
        v[r] += n[i] * ca[i][r];
      }
    }
    out.push_back(std::move(v));
  }
  return canonical_span(out, dim);
}

std::size_t SuiteReport::passed() const
{
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult & r) { return r.ok; }));
}

std::size_t SuiteReport::failed() const { return results.size() - passed(); }

std::string SuiteReport::render() const
{
  std::ostringstream os;
  for (const auto & r : results) {
    os << (r.ok ? "PASS " : "FAIL ") << r.fixture << " " << r.check;
    if (!r.detail.empty()) {
      os << ": " << r.detail;
    }
    os << "\n";
  }
  for (const auto & u : unverified) {
    os << "UNVERIFIED " << u << "\n";
  }
  os << passed() << " passed, " << failed() << " failed\n";
  return os.str();
}

std::string SuiteReport::render_json() const
{
  json j;
  j["passed"] = passed();
  j["failed"] = failed();
  j["results"] = json::array();
  for (const auto & r : results) {
    j["results"].push_back({{"fixture", r.fixture}, {"check", r.check}, {"ok", r.ok}, {"detail", r.detail}});
  }
  j["unverified"] = unverified;
  return j.dump(1);
}

namespace {

struct Sink {
  std::vector<CheckResult> out;
  void add(const std::string & id, const std::string & check, bool ok, std::string detail = {})
  {
    out.push_back({id, check, ok, std::move(detail)});
  }
};

std::string span_text(const std::vector<Vec> & v, const LieAlgebra & l)
{
  std::string s = "<";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? ", " : "") + render_combination(v[i], l.basis());
  }
  return s + ">";
}

bool is_partial(const Field & f, std::size_t a)
{
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!(f[k] == RatExpr(k == a ? 1 : 0))) {
      return false;
    }
  }
  return true;
}

// Largest ideal inside the subalgebra for every value of the promoted parameter.
std::vector<Vec> promoted_ideal(const LieAlgebra & l, const std::vector<std::string> & sub, const Symbol & p)
{
  const auto gens = combos(sub, l);
  std::vector<Vec> acc = largest_ideal_in(l, gens);
  for (int v : {1, 2, 3}) {
    const std::map<Symbol, RatExpr> b{{p, RatExpr(v)}};
    std::vector<Vec> g;
    for (const auto & x : gens) {
      g.push_back(substitute_vec(x, b));
    }
    acc = intersect_spans(acc, largest_ideal_in(l.substitute(b), g), l.dim());
  }
  return acc;
}

std::vector<CheckResult> check_row(const FixtureTable & t, const FixtureRow & row)
{
  Sink s;
  const std::string id = t.id + "/" + row.id;
  try {
    const Fixture f = load_fixture(id);
    const LieAlgebra & l = f.algebra;
    const std::string rendered = render_realization(f.table);
    s.add(id, "roundtrip", rendered == lines_text(row.realization), rendered == lines_text(row.realization) ? "" : "render differs:\n" + rendered);

    const auto rel = check_relations(f.table);
    s.add(id, "relations", rel.ok, rel.ok ? "" : std::to_string(rel.failures.size()) + " bracket(s) violated");

    const auto ker = realization_kernel(f.table);
    if (f.splitting) {
      const auto ideal = largest_ideal_in(l, f.splitting->sub);
      const bool same = same_span(ker, ideal, l.dim());
      const bool flag = !row.faithful || *row.faithful == ker.empty();
      s.add(id, "kernel", same && flag, "kernel " + span_text(ker, l) + ", largest ideal " + span_text(ideal, l));

      SymMatrix w;
      VectorFieldSet fields;
      const Realization g = realize(l, *f.splitting, &w, &fields);
      const bool grel = check_relations(g).ok;
      const bool gker = same_span(realization_kernel(g), ideal, l.dim());
      s.add(id, "regenerate", grel && gker);

      bool shift = is_partial(g.image(f.splitting->complement[0]), 0);
      if (f.splitting->m() >= 2 && l.bracket(f.splitting->complement[0], f.splitting->complement[1]) == Vec(l.dim())) {
        shift = shift && is_partial(g.image(f.splitting->complement[1]), 1);
      }
      s.add(id, "duality", duality_check(w, fields) && shift);

      if (row.generic) {
        const std::string gtext = render_realization(g);
        s.add(id, "match", gtext == rendered, gtext == rendered ? "byte-identical" : "regenerated:\n" + gtext);
      } else if (row.match_coordinates.empty() && row.match_basis.empty()) {
        const bool ok = compare_realizations(g, f.table, CoordinateMap::identity(g.m));
        s.add(id, "match", ok, ok ? "exact" : "regenerated:\n" + render_realization(g));
      } else {
        const CoordinateMap phi = row.match_coordinates.empty() ? CoordinateMap::identity(g.m) : parse_coordinate_map(lines_text(row.match_coordinates), g.m);
        const bool ok = compare_realizations(g, f.table, phi, basis_map(row.match_basis, l));
        s.add(id, "match", ok, ok ? "via recorded map" : "regenerated:\n" + render_realization(g));
      }

      if (row.promote) {
        const Symbol p(*row.promote);
        std::string warning;
        const Realization pg = promote_parameter(g, p, &warning);
        const Realization pt = parse_realization(lines_text(row.promoted), l, pg.m);
        const bool rel_ok = check_relations(pt).ok;
        const bool same = compare_realizations(pg, pt, CoordinateMap::identity(pg.m));
        const auto pker = realization_kernel(pt);
        const auto pideal = promoted_ideal(l, row.subalgebra, p);
        const bool kok = same_span(pker, pideal, l.dim());
        s.add(id + "@" + *row.promote, "promoted", warning.empty() && rel_ok && same && kok,
              "kernel " + span_text(pker, l) + ", common ideal " + span_text(pideal, l));
      }
    } else {
      const bool faithful = ker.empty();
      s.add(id, "kernel", faithful == row.faithful.value_or(true), "kernel " + span_text(ker, l));
    }
  } catch (const Error & e) {
    s.add(id, "load", false, e.what());
  }
  return s.out;
}

std::vector<CheckResult> check_equivalence(const FixtureTable & t, const Equivalence & q)
{
  Sink s;
  const std::string from = q.from.find('/') == std::string::npos ? t.id + "/" + q.from : q.from;
  const std::string to = q.to.find('/') == std::string::npos ? t.id + "/" + q.to : q.to;
  const std::string id = from + " ~ " + to;
  try {
    const Realization a = resolve_realization(from);
    const Realization b = resolve_realization(to);
    const CoordinateMap phi = q.coordinates.empty() ? CoordinateMap::identity(a.m) : parse_coordinate_map(lines_text(q.coordinates), a.m);
    const auto u = basis_map(q.basis, a.algebra);
    const bool ok = compare_realizations(a, b, phi, u);
    s.add(id, q.stated ? "equivalence" : "equivalence (found map)", ok);
  } catch (const Error & e) {
    s.add(id, "equivalence", false, e.what());
  }
  return s.out;
}

SuiteReport run_tables(const std::vector<FixtureTable> & tables, const std::string & only_row)
{
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  SuiteReport rep;
  for (const auto & t : tables) {
    for (const auto & row : t.rows) {
      if (only_row.empty() || row.id == only_row) {
        jobs.push_back(std::async(std::launch::async, [&t, &row] { return check_row(t, row); }));
      }
    }
    if (only_row.empty()) {
      for (const auto & q : t.equivalences) {
        jobs.push_back(std::async(std::launch::async, [&t, &q] { return check_equivalence(t, q); }));
      }
      for (const auto & u : t.unverified) {
        rep.unverified.push_back(t.id + ": " + u);
      }
    }
  }
  for (auto & j : jobs) {
    auto r = j.get();
    rep.results.insert(rep.results.end(), r.begin(), r.end());
  }
  return rep;
}

}  // namespace

namespace {

LieAlgebra relabel(const LieAlgebra & l, const json & basis, const std::vector<std::string> & names)
{
  std::vector<std::string> c;
  for (const auto & b : basis) {
    c.push_back(b.get<std::string>());
  }
  return in_basis(l, c, names);
}

std::map<Symbol, RatExpr> json_bindings(const json & j)
{
  std::map<std::string, std::string> b;
  for (const auto & [k, v] : j.items()) {
    b[k] = v.get<std::string>();
  }
  return bindings_of(b);
}

GalileiKind kind_of(const std::string & s)
{
  if (s == "classical") {
    return GalileiKind::Classical;
  }
  if (s == "extended") {
    return GalileiKind::Extended;
  }
  if (s == "special") {
    return GalileiKind::Special;
  }
  if (s == "full") {
    return GalileiKind::Full;
  }
  throw InputError("unknown Galilei kind '" + s + "'");
}

void family_checks(Sink & sink, const std::string & id)
{
  const DeformationFamily f = catalog_family(id);
  sink.add(id, "jacobi", jacobi_check(f.algebra).holds);
  try {
    const LieAlgebra lim = contraction_limit(f);
    sink.add(id, "limit", lim.same_constants(f.base()) && jacobi_check(lim).holds);
  } catch (const LimitDoesNotExist & e) {
    sink.add(id, "limit", false, e.what());
  }
}

void contraction_checks(Sink & sink, const json & c)
{
  const std::string id = c.at("matrix").get<std::string>() + ".mat";
  const DeformationFamily expected = catalog_family(c.at("family"));
  const DeformationFamily got = deform_via_contraction(catalog_algebra(c.at("source")), catalog_matrix(c.at("matrix")), expected.q);
  const LieAlgebra moved = relabel(got.algebra, c.at("basis"), expected.algebra.basis());
  sink.add(id, "brackets", moved.same_constants(expected.algebra), moved.same_constants(expected.algebra) ? "" : render_algebra(moved));
  const LieAlgebra lim = contraction_limit(expected);
  const LieAlgebra target = relabel(catalog_algebra(c.at("limit").at("algebra")), c.at("limit").at("basis"), expected.algebra.basis());
  sink.add(id, "limit is " + c.at("limit").at("algebra").get<std::string>(), lim.same_constants(target));
  // the limit taken before relabelling agrees as well
  sink.add(id, "limit commutes with relabelling", relabel(contraction_limit(got), c.at("basis"), expected.algebra.basis()).same_constants(target));
}

void certificate_checks(Sink & sink, const json & c)
{
  const std::string id = c.at("from").get<std::string>() + " -> " + c.at("to").get<std::string>();
  const LieAlgebra from = catalog_algebra(c.at("from"));
  const DeformationFamily to = specialize(catalog_family(c.at("to")), json_bindings(c.at("bindings")));
  const SymMatrix rows = catalog_matrix(c.at("matrix"));
  std::vector<Vec> images;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    images.push_back(rows.row(i));
  }
  const LinearMap u = map_from_image_rows(images);
  const RatExpr det = determinant(u);
  sink.add(id, "isomorphism", !det.is_zero() && is_homomorphism(from, to.algebra, u), "det = " + to_text(det));
}

void galilei_checks(Sink & sink, const json & g)
{
  const GalileiKind kind = kind_of(g.at("kind"));
  const bool mass = g.at("mass").get<bool>();
  const DeformationFamily cat = catalog_family(g.at("family"));
  for (int n = 1; n <= 3; ++n) {
    const DeformationFamily f = galilei_deformed(kind, mass, n, cat.q);
    const std::string id = f.algebra.name();
    sink.add(id, "jacobi", jacobi_check(f.algebra).holds);
    if (n == 1) {
      std::vector<std::string> names = f.algebra.basis();
      const LieAlgebra moved = in_basis(cat.algebra, names, names);
      sink.add(id, "equals " + g.at("family").get<std::string>(), moved.same_constants(f.algebra));
    }
  }
}

void generic_checks(Sink & sink, const json & g)
{
  const std::string id = g.at("family").get<std::string>() + " generic";
  const DeformationFamily f = catalog_family(g.at("family"));
  const LieAlgebra & l = f.algebra;
  const auto complement = combos(strings(g, "complement"), l);
  const Realization shown = parse_realization(lines_text(strings(g, "realization")), l, complement.size());
  sink.add(id, "relations", check_relations(shown).ok);
  const Realization regen = deformed_generic_realization(f, complement);
  sink.add(id, "regenerate", compare_realizations(regen, shown, CoordinateMap::identity(shown.m)));
  const std::map<Symbol, RatExpr> at0{{f.q, RatExpr(0)}};
  const Realization zero = substitute(shown, at0);
  const LieAlgebra base = relabel(catalog_algebra(g.at("base")), g.at("base_basis"), strings(g, "base_basis"));
  const LieAlgebra reordered = in_basis(base, l.basis(), l.basis());
  Splitting s;
  s.complement = complement;
  const Realization undeformed = realize(reordered, s);
  bool same = reordered.same_constants(f.base()) && zero.images == undeformed.images;
  sink.add(id, "q = 0 is the undeformed generic realization", same);
}

SuiteReport run_deformations()
{
  const json d = json::parse(read_file(data_dir() + "/families/deformations.json"));
  std::vector<std::function<void(Sink &)>> jobs;
  for (const auto & id : catalog_family_ids()) {
    jobs.push_back([id](Sink & s) { family_checks(s, id); });
  }
  for (const auto & c : d.at("contractions")) {
    jobs.push_back([c](Sink & s) { contraction_checks(s, c); });
  }
  for (const auto & c : d.at("certificates")) {
    jobs.push_back([c](Sink & s) { certificate_checks(s, c); });
  }
  for (const auto & g : d.at("galilei")) {
    jobs.push_back([g](Sink & s) { galilei_checks(s, g); });
  }
  for (const auto & g : d.at("generic")) {
    jobs.push_back([g](Sink & s) { generic_checks(s, g); });
  }
  std::vector<std::future<Sink>> futures;
  for (auto & job : jobs) {
    futures.push_back(std::async(std::launch::async, [job] {
      Sink s;
      job(s);
      return s;
    }));
  }
  SuiteReport rep;
  for (auto & fu : futures) {
    auto part = fu.get().out;
    rep.results.insert(rep.results.end(), part.begin(), part.end());
  }
  return rep;
}

}  // namespace

SuiteReport run_suite(const std::string & selector)
{
  std::vector<FixtureTable> tables;
  std::string only_row;
  if (selector == "deformations") {
    return run_deformations();
  }
  if (selector == "all") {
    for (const auto & id : fixture_table_ids()) {
      tables.push_back(load_table(id));
    }
    SuiteReport rep = run_tables(tables, only_row);
    const SuiteReport def = run_deformations();
    rep.results.insert(rep.results.end(), def.results.begin(), def.results.end());
    return rep;
  } else if (auto slash = selector.find('/'); slash != std::string::npos) {
    tables.push_back(load_table(selector.substr(0, slash)));
    only_row = load_fixture(selector).row.id;
  } else {
    tables.push_back(load_table(selector));
  }
  return run_tables(tables, only_row);
}

std::string render_table(const FixtureTable & t, bool latex)
{
  const LieAlgebra l = t.load_algebra();
  std::ostringstream os;
  if (!latex) {
    os << t.title << "\n";
    for (const auto & row : t.rows) {
      const Realization r = table_realization(t, l, row);
      os << "\n" << row.id;
      if (!row.complement.empty()) {
        os << "  complement {";
        for (std::size_t i = 0; i < row.complement.size(); ++i) {
          os << (i ? ", " : "") << row.complement[i];
        }
        os << "}";
      }
      os << "\n" << render_realization(r);
      if (row.promote) {
        os << row.id << " with " << *row.promote << " promoted\n" << lines_text(row.promoted);
      }
    }
    return os.str();
  }
  os << "% " << t.title << "\n\\begin{tabular}{rl}\n\\hline\n";
  for (const auto & row : t.rows) {
    const Realization r = table_realization(t, l, row);
    std::string body = render_realization_latex(r);
    std::replace(body.begin(), body.end(), '\n', ' ');
    std::string comp;
    for (std::size_t i = 0; i < row.complement.size(); ++i) {
      comp += (i ? "," : "") + render_combination_latex(l.vector(row.complement[i]), l.basis());
    }
    os << (comp.empty() ? "" : "$\\{" + comp + "\\}$") << " & $R_{" << row.id << "}\\colon\\ " << body << "$\\\\\n";
    if (row.promote) {
      std::string pb = render_realization_latex(parse_realization(lines_text(row.promoted), l, row.complement.size() + 1));
      std::replace(pb.begin(), pb.end(), '\n', ' ');
      os << " & $" << pb << "$\\\\\n";
    }
  }
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

}  // namespace galreal
