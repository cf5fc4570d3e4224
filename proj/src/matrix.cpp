#include "galreal/matrix.hpp"

#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace galreal {

SymMatrix::SymMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

SymMatrix SymMatrix::identity(std::size_t n)
{
  SymMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = RatExpr(1);
  }
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<Vec> & rows)
{
  if (rows.empty()) {
    return SymMatrix();
  }
  SymMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw InputError("ragged matrix rows");
    }
    for (std::size_t j = 0; j < m.cols_; ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

RatExpr & SymMatrix::at(std::size_t i, std::size_t j)
{
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return data_[i * cols_ + j];
}

const RatExpr & SymMatrix::at(std::size_t i, std::size_t j) const
{
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return data_[i * cols_ + j];
}

Vec SymMatrix::row(std::size_t i) const
{
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    r[j] = at(i, j);
  }
  return r;
}

Vec SymMatrix::col(std::size_t j) const
{
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    c[i] = at(i, j);
  }
  return c;
}

SymMatrix SymMatrix::transpose() const
{
  SymMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t.at(j, i) = at(i, j);
    }
  }
  return t;
}

bool SymMatrix::is_zero() const
{
  return std::all_of(data_.begin(), data_.end(), [](const RatExpr & e) { return e.is_zero(); });
}

bool SymMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

bool SymMatrix::is_exppoly() const
{
  return std::all_of(data_.begin(), data_.end(), [](const RatExpr & e) { return e.is_exppoly(); });
}

RatExpr SymMatrix::trace() const
{
  RatExpr t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
    t += at(i, i);
  }
  return t;
}

SymMatrix SymMatrix::operator-() const
{
  SymMatrix r = *this;
  for (auto & e : r.data_) {
    e = -e;
  }
  return r;
}

SymMatrix operator+(const SymMatrix & a, const SymMatrix & b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw InputError("matrix dimension mismatch");
  }
  SymMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) {
    r.data_[k] += b.data_[k];
  }
  return r;
}

SymMatrix operator-(const SymMatrix & a, const SymMatrix & b) { return a + (-b); }

SymMatrix operator*(const SymMatrix & a, const SymMatrix & b)
{
  if (a.cols_ != b.rows_) {
    throw InputError("matrix dimension mismatch");
  }
  SymMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatExpr & aik = a.at(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const RatExpr & bkj = b.at(k, j);
        if (!bkj.is_zero()) {
          r.at(i, j) += aik * bkj;
        }
      }
    }
  }
  return r;
}

SymMatrix operator*(const RatExpr & k, const SymMatrix & a)
{
  SymMatrix r = a;
  for (auto & e : r.data_) {
    e = k * e;
  }
  return r;
}

Vec operator*(const SymMatrix & a, const Vec & v)
{
  if (a.cols_ != v.size()) {
    throw InputError("matrix-vector dimension mismatch");
  }
  Vec r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a.at(i, j).is_zero() && !v[j].is_zero()) {
        r[i] += a.at(i, j) * v[j];
      }
    }
  }
  return r;
}

bool operator==(const SymMatrix & a, const SymMatrix & b)
{
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SymMatrix SymMatrix::substitute(const std::map<Symbol, RatExpr> & bindings) const
{
  SymMatrix r = *this;
  for (auto & e : r.data_) {
    e = e.substitute(bindings);
  }
  return r;
}

SymMatrix SymMatrix::differentiate(const Symbol & v) const
{
  SymMatrix r = *this;
  for (auto & e : r.data_) {
    e = e.differentiate(v);
  }
  return r;
}

std::string to_text(const SymMatrix & m)
{
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j ? ", " : "") << to_text(m.at(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Determinant and inverse

namespace {

// Laplace expansion along rows, memoized on the set of still unused columns.
RatExpr det_rows(const SymMatrix & m, const std::vector<std::size_t> & row_ids, const std::vector<std::size_t> & col_ids)
{
  const std::size_t n = row_ids.size();
  if (n == 0) {
    return RatExpr(1);
  }
  std::unordered_map<std::uint32_t, RatExpr> memo;
  auto rec = [&](auto && self, std::uint32_t mask) -> RatExpr {
    const std::size_t k = n - std::popcount(mask);
    if (k == n) {
      return RatExpr(1);
    }
    if (auto it = memo.find(mask); it != memo.end()) {
      return it->second;
    }
    RatExpr sum;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1U << j))) {
        continue;
      }
      const RatExpr & a = m.at(row_ids[k], col_ids[j]);
      if (!a.is_zero()) {
        RatExpr sub = self(self, mask & ~(1U << j));
        if (!sub.is_zero()) {
          sum += sign > 0 ? a * sub : -(a * sub);
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, n == 32 ? ~0U : ((1U << n) - 1));
}

std::vector<std::size_t> iota_except(std::size_t n, std::size_t skip)
{
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != skip) {
      v.push_back(i);
    }
  }
  return v;
}

}  // namespace

RatExpr determinant(const SymMatrix & m)
{
  if (!m.is_square()) {
    throw InputError("determinant of a non-square matrix");
  }
  if (m.rows() > 20) {
    throw InputError("matrix too large for exact determinant");
  }
  const std::size_t n = m.rows();
  return det_rows(m, iota_except(n, n), iota_except(n, n));
}

SymMatrix mat_inverse(const SymMatrix & m)
{
  if (!m.is_square()) {
    throw InputError("inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  const RatExpr det = determinant(m);
  if (det.is_zero()) {
    throw SingularMatrix("determinant vanishes identically");
  }
  SymMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // inverse(i,j) = cofactor(j,i) / det
      RatExpr minor = det_rows(m, iota_except(n, j), iota_except(n, i));
      if (minor.is_zero()) {
        continue;
      }
      if ((i + j) % 2 == 1) {
        minor = -minor;
      }
      inv.at(i, j) = minor / det;
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and rational roots

std::vector<RatExpr> characteristic_polynomial(const SymMatrix & a)
{
  // Faddeev-LeVerrier
  const std::size_t n = a.rows();
  std::vector<RatExpr> c(n + 1);
  c[n] = RatExpr(1);
  SymMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * SymMatrix::identity(n);
    c[n - k] = -(a * mk).trace() / RatExpr(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> divisors(mpz_class v)
{
  v = abs(v);
  std::vector<mpz_class> out;
  if (v == 0) {
    return out;
  }
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) {
        out.push_back(v / d);
      }
    }
  }
  return out;
}

Rational horner(const std::vector<Rational> & c, const Rational & x)
{
  Rational r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r = r * x + *it;
  }
  return r;
}

// Divide by (lambda - x); x must be a root.
std::vector<Rational> deflate(const std::vector<Rational> & c, const Rational & x)
{
  const std::size_t d = c.size() - 1;
  std::vector<Rational> q(d);
  Rational carry = 0;
  for (std::size_t k = d; k >= 1; --k) {
    carry = c[k] + carry * x;
    q[k - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<Rational> rational_roots(std::vector<Rational> c, std::vector<Rational> * residual)
{
  while (!c.empty() && c.back() == 0) {
    c.pop_back();
  }
  std::vector<Rational> roots;
  while (c.size() > 1 && c.front() == 0) {
    roots.emplace_back(0);
    c.erase(c.begin());
  }
  bool progress = true;
  while (c.size() > 1 && progress) {
    progress = false;
    mpz_class lcm = 1;
    for (const auto & x : c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    const mpz_class a0 = Rational(c.front() * lcm).get_num();
    const mpz_class an = Rational(c.back() * lcm).get_num();
    for (const auto & p : divisors(a0)) {
      for (const auto & q : divisors(an)) {
        for (int s : {1, -1}) {
          Rational x(s * p, q);
          x.canonicalize();
          if (horner(c, x) == 0) {
            roots.push_back(x);
            c = deflate(c, x);
            progress = true;
            break;
          }
        }
        if (progress) {
          break;
        }
      }
      if (progress) {
        break;
      }
    }
  }
  if (residual) {
    *residual = c;
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Matrix exponential

namespace {

// Sum over mu of poly_mu(t) * exp(mu t), polynomial coefficients ascending.
using ExpSum = std::map<Rational, std::vector<Rational>>;

void trim(std::vector<Rational> & p)
{
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

std::vector<Rational> poly_derivative(const std::vector<Rational> & p)
{
  std::vector<Rational> d;
  for (std::size_t k = 1; k < p.size(); ++k) {
    d.push_back(p[k] * static_cast<long>(k));
  }
  return d;
}

void poly_add_scaled(std::vector<Rational> & a, const std::vector<Rational> & b, const Rational & k)
{
  if (a.size() < b.size()) {
    a.resize(b.size());
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] += k * b[i];
  }
  trim(a);
}

// Solution of r' = lambda r + f, r(0) = 0.
ExpSum solve_first_order(const Rational & lambda, const ExpSum & f)
{
  ExpSum r;
  Rational at_zero = 0;
  for (const auto & [mu, p] : f) {
    std::vector<Rational> q;
    if (mu == lambda) {
      q.push_back(0);
      for (std::size_t k = 0; k < p.size(); ++k) {
        q.push_back(p[k] / static_cast<long>(k + 1));
      }
    } else {
      const Rational d = mu - lambda;
      std::vector<Rational> der = p;
      Rational scale = 1 / d;
      while (!der.empty()) {
        poly_add_scaled(q, der, scale);
        der = poly_derivative(der);
        scale = -scale / d;
      }
    }
    trim(q);
    if (!q.empty()) {
      at_zero += q.front();
      poly_add_scaled(r[mu], q, 1);
    }
  }
  if (at_zero != 0) {
    poly_add_scaled(r[lambda], {at_zero}, -1);
  }
  for (auto it = r.begin(); it != r.end();) {
    it = it->second.empty() ? r.erase(it) : std::next(it);
  }
  return r;
}

ExpPoly to_exppoly(const ExpSum & s, const Symbol & t)
{
  ExpPoly out;
  for (const auto & [mu, p] : s) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] == 0) {
        continue;
      }
      SparseVec powers;
      if (k > 0) {
        powers.emplace_back(t, Rational(static_cast<long>(k)));
      }
      SparseVec form;
      if (mu != 0) {
        form.emplace_back(t, mu);
      }
      out += ExpPoly::monomial(p[k], powers, form);
    }
  }
  return out;
}

}  // namespace

namespace {

void check_exp_input(const SymMatrix & a, const Symbol & t)
{
  if (!a.is_square()) {
    throw InputError("matrix exponential of a non-square matrix");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).depends_on(t)) {
        throw InputError("matrix entries must not depend on " + t.name());
      }
    }
  }
}

}  // namespace

std::optional<SymMatrix> mat_exp_series(const SymMatrix & a, const Symbol & t)
{
  check_exp_input(a, t);
  const std::size_t n = a.rows();
  SymMatrix power = SymMatrix::identity(n);
  SymMatrix sum = power;
  RatExpr coeff(1);
  const RatExpr tt = RatExpr(ExpPoly::symbol(t));
  for (std::size_t k = 1; k <= n; ++k) {
    power = a * power;
    if (power.is_zero()) {
      return sum;
    }
    coeff = coeff * tt / RatExpr(static_cast<long>(k));
    sum = sum + coeff * power;
  }
  return std::nullopt;
}

SymMatrix mat_exp_putzer(const SymMatrix & a, const Symbol & t)
{
  check_exp_input(a, t);
  const std::size_t n = a.rows();
  const auto cp = characteristic_polynomial(a);
  std::vector<Rational> c;
  for (const auto & e : cp) {
    if (!e.is_constant()) {
      throw RationalSpectrumRequired("characteristic polynomial has non-constant coefficient " + to_text(e));
    }
    c.push_back(e.constant_value());
  }
  std::vector<Rational> residual;
  const auto roots = rational_roots(c, &residual);
  if (residual.size() > 1) {
    std::string factor;
    for (std::size_t k = residual.size(); k-- > 0;) {
      if (residual[k] == 0) {
        continue;
      }
      ExpPoly term = ExpPoly::monomial(residual[k], k ? SparseVec{{Symbol("lambda"), Rational(static_cast<long>(k))}} : SparseVec{});
      factor += (factor.empty() ? "" : " + ") + to_text(term);
    }
    throw RationalSpectrumRequired("spectrum is not rational; irreducible factor " + factor);
  }

  // exp(tA) = sum_k r_{k+1}(t) P_k, P_k = prod_{j<=k} (A - lambda_j I)
  SymMatrix result(n, n);
  SymMatrix pk = SymMatrix::identity(n);
  ExpSum r;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      r = ExpSum{{roots[0], {Rational(1)}}};
    } else {
      r = solve_first_order(roots[k], r);
      pk = pk * (a - RatExpr(roots[k - 1]) * SymMatrix::identity(n));
      if (pk.is_zero()) {
        break;
      }
    }
    result = result + RatExpr(to_exppoly(r, t)) * pk;
  }
  return result;
}

SymMatrix mat_exp_ad(const SymMatrix & a_in, const Symbol & t, int sign)
{
  if (sign != 1 && sign != -1) {
    throw InputError("sign must be +1 or -1");
  }
  const SymMatrix a = sign > 0 ? a_in : -a_in;
  if (auto s = mat_exp_series(a, t)) {
    return *s;
  }
  return mat_exp_putzer(a, t);
}

// ---------------------------------------------------------------------------
// Row reduction

namespace {

int pivot_rank(const RatExpr & e)
{
  if (e.is_zero()) {
    return 3;
  }
  if (e.is_constant()) {
    return 0;
  }
  if (e.is_exppoly() && e.num().is_single_term()) {
    return 1;
  }
  return 2;
}

}  // namespace

RowReduction row_reduce(const SymMatrix & m)
{
  RowReduction out;
  SymMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    int best_rank = 3;
    for (std::size_t i = r; i < a.rows(); ++i) {
      const int pr = pivot_rank(a.at(i, c));
      if (pr < best_rank) {
        best_rank = pr;
        best = i;
      }
    }
    if (best == a.rows()) {
      continue;
    }
    if (best != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::swap(a.at(r, j), a.at(best, j));
      }
    }
    const RatExpr pivot = a.at(r, c);
    if (!pivot.is_constant()) {
      out.conditions.push_back(pivot);
    }
    for (std::size_t j = c; j < a.cols(); ++j) {
      a.at(r, j) = a.at(r, j) / pivot;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) {
        continue;
      }
      const RatExpr f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a.at(r, j).is_zero()) {
          a.at(i, j) -= f * a.at(r, j);
        }
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(a);
  return out;
}

std::size_t rank(const SymMatrix & m) { return row_reduce(m).pivots.size(); }

std::vector<Vec> nullspace(const SymMatrix & m)
{
  const auto rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    Vec v(m.cols());
    v[f] = RatExpr(1);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
      v[rr.pivots[k]] = -rr.rref.at(k, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> canonical_span(const std::vector<Vec> & vectors, std::size_t dim)
{
  if (vectors.empty()) {
    return {};
  }
  for (const auto & v : vectors) {
    if (v.size() != dim) {
      throw InputError("vector dimension mismatch");
    }
  }
  const auto rr = row_reduce(SymMatrix::from_rows(vectors));
  std::vector<Vec> out;
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
    out.push_back(rr.rref.row(k));
  }
  return out;
}

bool same_span(const std::vector<Vec> & a, const std::vector<Vec> & b, std::size_t dim)
{
  return canonical_span(a, dim) == canonical_span(b, dim);
}

std::optional<Vec> express_in_span(const std::vector<Vec> & basis, const Vec & v)
{
  if (basis.empty()) {
    if (std::all_of(v.begin(), v.end(), [](const RatExpr & e) { return e.is_zero(); })) {
      return Vec{};
    }
    return std::nullopt;
  }
  // columns = basis vectors, augmented by v
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  SymMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      aug.at(i, j) = basis[j].at(i);
    }
    aug.at(i, k) = v[i];
  }
  const auto rr = row_reduce(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == k) {
    return std::nullopt;
  }
  Vec c(k);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    c[rr.pivots[r]] = rr.rref.at(r, k);
  }
  return c;
}

}  // namespace galreal
