#include "galreal/catalog.hpp"

#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace galreal {

namespace {

struct Coefficients {
  RatExpr dg{1};   // [D,G_i] = dg G_i
  RatExpr dp{-1};  // [D,P_i] = dp P_i
  RatExpr dt{-2};  // [D,T] = dt T
  RatExpr dm{0};   // [D,M] = dm M
};

class Builder {
public:
  Builder(int n, int kind, bool mass) : n_(n)
  {
    const bool one = n == 1;
    for (int i = 1; i <= n; ++i) {
      p_.push_back(add(one ? "P" : "P" + std::to_string(i)));
    }
    t_ = add("T");
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        j_[{i, j}] = add("J" + std::to_string(i) + std::to_string(j));
      }
    }
    for (int i = 1; i <= n; ++i) {
      g_.push_back(add(one ? "G" : "G" + std::to_string(i)));
    }
    if (kind >= 2) {
      d_ = add("D");
    }
    if (kind >= 3) {
      s_ = add("S");
    }
    if (kind >= 4) {
      z_ = add("Z");
    }
    if (mass) {
      m_ = add("M");
    }
  }

  std::vector<std::string> names;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, RatExpr>> rel;

  std::size_t p(int i) const { return p_[i - 1]; }
  std::size_t g(int i) const { return g_[i - 1]; }
  std::size_t t() const { return t_; }
  std::optional<std::size_t> d() const { return d_; }
  std::optional<std::size_t> s() const { return s_; }
  std::optional<std::size_t> z() const { return z_; }
  std::optional<std::size_t> m() const { return m_; }
  int n() const { return n_; }

  // J_ab as (index, sign); J_aa is absent
  std::optional<std::pair<std::size_t, int>> j(int a, int b) const
  {
    if (a == b) {
      return std::nullopt;
    }
    if (a < b) {
      return std::make_pair(j_.at({a, b}), 1);
    }
    return std::make_pair(j_.at({b, a}), -1);
  }

  void put(std::size_t a, std::size_t b, std::size_t c, const RatExpr & k) { rel.emplace_back(a, b, c, k); }

private:
  std::size_t add(std::string s)
  {
    names.push_back(std::move(s));
    return names.size() - 1;
  }
  int n_;
  std::vector<std::size_t> p_, g_;
  std::size_t t_ = 0;
  std::map<std::pair<int, int>, std::size_t> j_;
  std::optional<std::size_t> d_, s_, z_, m_;
};

LieAlgebra build(const std::string & name, int kind, bool mass, int n, const Coefficients & k, std::vector<ParamInfo> params = {})
{
  if (n < 1) {
    throw InputError("n must be at least 1");
  }
  Builder b(n, kind, mass);
  const auto delta = [](int a, int c) { return a == c ? 1 : 0; };
  // (1) [J_ij, J_kl]
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int kk = 1; kk <= n; ++kk) {
        for (int l = kk + 1; l <= n; ++l) {
          if (b.j(i, j)->first >= b.j(kk, l)->first) {
            continue;
          }
          const std::pair<int, std::pair<int, int>> terms[] = {
            {delta(i, l), {j, kk}}, {delta(j, kk), {i, l}}, {-delta(i, kk), {j, l}}, {-delta(j, l), {i, kk}}};
          for (const auto & [c, ab] : terms) {
            if (c == 0) {
              continue;
            }
            if (auto jj = b.j(ab.first, ab.second)) {
              b.put(b.j(i, j)->first, b.j(kk, l)->first, jj->first, RatExpr(c * jj->second));
            }
          }
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int kk = j + 1; kk <= n; ++kk) {
        const std::size_t jjk = b.j(j, kk)->first;
        // (2) [P_i, J_jk] = d_ij P_k - d_ik P_j; (4) likewise for G
        if (i == j) {
          b.put(b.p(i), jjk, b.p(kk), RatExpr(1));
          b.put(b.g(i), jjk, b.g(kk), RatExpr(1));
        }
        if (i == kk) {
          b.put(b.p(i), jjk, b.p(j), RatExpr(-1));
          b.put(b.g(i), jjk, b.g(j), RatExpr(-1));
        }
      }
    }
    // (3)
    b.put(b.t(), b.g(i), b.p(i), RatExpr(-1));
    if (b.d()) {
      b.put(*b.d(), b.g(i), b.g(i), k.dg);  // (5)
      b.put(*b.d(), b.p(i), b.p(i), k.dp);  // (6)
    }
    if (b.s()) {
      b.put(*b.s(), b.p(i), b.g(i), RatExpr(1));  // (8)
    }
    if (b.z()) {
      b.put(*b.z(), b.g(i), b.g(i), RatExpr(-1));  // (11)
      b.put(*b.z(), b.p(i), b.p(i), RatExpr(-1));  // (12)
    }
    if (b.m()) {
      b.put(b.g(i), b.p(i), *b.m(), RatExpr(1));  // (13)
    }
  }
  if (b.d()) {
    b.put(*b.d(), b.t(), b.t(), k.dt);  // (7)
    if (b.m() && !k.dm.is_zero()) {
      b.put(*b.d(), *b.m(), *b.m(), k.dm);
    }
  }
  if (b.s()) {
    b.put(*b.d(), *b.s(), *b.s(), RatExpr(2));  // (9)
    b.put(b.t(), *b.s(), *b.d(), RatExpr(1));   // (10)
  }
  if (b.z() && b.m()) {
    b.put(*b.z(), *b.m(), *b.m(), RatExpr(-2));  // (14)
  }

  LieAlgebra l(name, b.names, std::move(params));
  const std::size_t dim = b.names.size();
  std::map<std::pair<std::size_t, std::size_t>, Vec> acc;
  for (const auto & [x, y, z, c] : b.rel) {
    if (c.is_zero()) {
      continue;
    }
    const bool flip = x > y;
    auto & v = acc.try_emplace({std::min(x, y), std::max(x, y)}, Vec(dim)).first->second;
    v[z] += flip ? -c : c;
  }
  for (const auto & [ij, v] : acc) {
    l.set_bracket(ij.first, ij.second, v);
  }
  return l;
}

}  // namespace

std::string GalileiSpec::name() const
{
  return std::string(with_mass ? "AG" : "AbarG") + std::to_string(static_cast<int>(kind)) + "(" + std::to_string(n) + ")";
}

std::size_t GalileiSpec::expected_dim() const
{
  const int k = static_cast<int>(kind);
  return static_cast<std::size_t>(n * (n - 1) / 2 + 2 * n + k + (with_mass ? 1 : 0));
}

LieAlgebra galilei_algebra(const GalileiSpec & spec)
{
  return build(spec.name(), static_cast<int>(spec.kind), spec.with_mass, spec.n, Coefficients{});
}

DeformationFamily galilei_deformed(GalileiKind kind, bool with_mass, int n, const Symbol & q)
{
  if (kind != GalileiKind::Extended) {
    throw InputError("deformed families exist for the extended algebras only");
  }
  const RatExpr qq(ExpPoly::symbol(q));
  Coefficients k;
  if (with_mass) {
    k.dt = qq - RatExpr(2);
    k.dp = qq - RatExpr(1);
    k.dm = qq;
  } else {
    k.dg = RatExpr(1) - RatExpr(2) * qq;
    k.dp = RatExpr(-1) - RatExpr(2) * qq;
  }
  const GalileiSpec spec{kind, with_mass, n};
  return make_family(build(spec.name() + "^" + q.name(), 2, with_mass, n, k, {{q, "deformation parameter"}}), q);
}

std::string data_dir()
{
  if (const char * env = std::getenv("GALREAL_DATA"); env && *env) {
    return env;
  }
  return GALREAL_DATA_DIR;
}

namespace {

std::vector<std::string> ids_in(const std::string & sub, const std::string & ext)
{
  std::vector<std::string> out;
  const std::filesystem::path dir = std::filesystem::path(data_dir()) / sub;
  if (!std::filesystem::exists(dir)) {
    return out;
  }
  for (const auto & e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ext) {
      out.push_back(e.path().stem().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string catalog_path(const std::string & sub, const std::string & id, const std::string & ext)
{
  const std::filesystem::path p = std::filesystem::path(data_dir()) / sub / (id + ext);
  if (!std::filesystem::exists(p)) {
    throw NotFound("no catalog entry '" + id + "' in " + sub);
  }
  return p.string();
}

}  // namespace

LieAlgebra catalog_algebra(const std::string & id) { return load_algebra(catalog_path("algebras", id, ".alg")); }

std::vector<std::string> catalog_algebra_ids() { return ids_in("algebras", ".alg"); }

DeformationFamily catalog_family(const std::string & id) { return parse_family(read_file(catalog_path("families", id, ".fam"))); }

std::vector<std::string> catalog_family_ids() { return ids_in("families", ".fam"); }

ContractionMatrix catalog_matrix(const std::string & id) { return parse_matrix(read_file(catalog_path("families", id, ".mat"))); }

}  // namespace galreal
