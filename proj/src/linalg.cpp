#include "dzb/linalg.hpp"

#include "dzb/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace dzb {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication");
  return r;
}

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rows, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : int(rows[0].size()));
  IMat m(int(rows.size()), c);
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != c) throw InvalidInput("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IMat IMat::from_cols(const std::vector<IVec>& cols, int rows) {
  int r = rows >= 0 ? rows : (cols.empty() ? 0 : int(cols[0].size()));
  IMat m(r, int(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (int(cols[j].size()) != r) throw InvalidInput("ragged matrix columns");
    for (int i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IVec IMat::row(int i) const { return IVec(a_.begin() + std::size_t(i) * c_, a_.begin() + std::size_t(i + 1) * c_); }

IVec IMat::col(int j) const {
  IVec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

IMat IMat::transpose() const {
  IMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IMat IMat::operator*(const IMat& o) const {
  if (c_ != o.r_) throw InvariantViolation("matrix shape mismatch");
  IMat p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      std::int64_t x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) p(i, j) = checked_add(p(i, j), checked_mul(x, o(k, j)));
    }
  return p;
}

IVec IMat::operator*(const IVec& v) const {
  if (int(v.size()) != c_) throw InvariantViolation("matrix-vector shape mismatch");
  IVec out(r_, 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (v[j] != 0 && (*this)(i, j) != 0) out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
  return out;
}

QVec IMat::operator*(const QVec& v) const {
  if (int(v.size()) != c_) throw InvariantViolation("matrix-vector shape mismatch");
  QVec out(r_, Rational(0));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

IMat IMat::operator-(const IMat& o) const {
  IMat d(r_, c_);
  for (std::size_t k = 0; k < a_.size(); ++k) d.a_[k] = checked_add(a_[k], -o.a_[k]);
  return d;
}

IMat IMat::operator+(const IMat& o) const {
  IMat d(r_, c_);
  for (std::size_t k = 0; k < a_.size(); ++k) d.a_[k] = checked_add(a_[k], o.a_[k]);
  return d;
}

bool IMat::is_identity() const { return r_ == c_ && *this == identity(r_); }

std::size_t IMatHash::operator()(const IMat& m) const {
  std::size_t h = std::size_t(m.rows()) * 1315423911u + m.cols();
  for (auto x : m.data()) h ^= std::hash<std::int64_t>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t IVecHash::operator()(const IVec& v) const {
  std::size_t h = v.size();
  for (auto x : v) h ^= std::hash<std::int64_t>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::int64_t dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw InvariantViolation("dot product length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Rational dot(const QVec& a, const IVec& b) {
  if (a.size() != b.size()) throw InvariantViolation("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) s += a[i] * b[i];
  return s;
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InvariantViolation("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}
IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
  return r;
}
IVec scale(std::int64_t k, const IVec& a) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
  return r;
}
IVec neg(const IVec& a) { return scale(-1, a); }
bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

namespace {

void row_swap(IMat& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void col_swap(IMat& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += k * row_src
void row_axpy(IMat& m, int dst, int src, std::int64_t k) {
  if (k == 0) return;
  for (int j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) = checked_add(m(dst, j), checked_mul(k, m(src, j)));
}
void col_axpy(IMat& m, int dst, int src, std::int64_t k) {
  if (k == 0) return;
  for (int i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) = checked_add(m(i, dst), checked_mul(k, m(i, src)));
}

}  // namespace

SmithForm smith_normal_form(const IMat& M) {
  const int m = M.rows(), n = M.cols();
  SmithForm s{IMat::identity(m), M, IMat::identity(n), 0};
  IMat& D = s.D;
  int t = 0;
  while (t < std::min(m, n)) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D(i, j) != 0 && (pi < 0 || std::llabs(D(i, j)) < std::llabs(D(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    row_swap(D, t, pi), row_swap(s.U, t, pi);
    col_swap(D, t, pj), col_swap(s.V, t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        std::int64_t q = D(i, t) / D(t, t);
        row_axpy(D, i, t, -q), row_axpy(s.U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        std::int64_t q = D(t, j) / D(t, t);
        col_axpy(D, j, t, -q), col_axpy(s.V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        int bi = t, bj = t;
        std::int64_t best = 0;
        for (int i = t + 1; i < m; ++i)
          if (D(i, t) != 0 && (best == 0 || std::llabs(D(i, t)) < best)) best = std::llabs(D(i, t)), bi = i, bj = t;
        for (int j = t + 1; j < n; ++j)
          if (D(t, j) != 0 && (best == 0 || std::llabs(D(t, j)) < best)) best = std::llabs(D(t, j)), bi = t, bj = j;
        if (bi != t) row_swap(D, t, bi), row_swap(s.U, t, bi);
        if (bj != t) col_swap(D, t, bj), col_swap(s.V, t, bj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) { bad = i; break; }
      if (bad < 0) break;
      row_axpy(D, t, bad, 1), row_axpy(s.U, t, bad, 1);
    }
    if (D(t, t) < 0) {
      row_axpy(D, t, t, -2), row_axpy(s.U, t, t, -2);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

IMat unimodular_inverse(const IMat& M) {
  const int n = M.rows();
  if (M.cols() != n) throw InvariantViolation("inverse of a non-square matrix");
  QMat a(n, QVec(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = M(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvariantViolation("singular matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int i = 0; i < n; ++i)
      if (i != c && a[i][c] != 0) {
        Rational f = a[i][c];
        for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
      }
  }
  IMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = to_i64(a[i][n + j]);
  return inv;
}

std::optional<IntegerSolution> solve_integer(const IMat& A, const IVec& b) {
  SmithForm s = smith_normal_form(A);
  IVec ub = s.U * b;
  IVec y(A.cols(), 0);
  for (int i = 0; i < A.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.d(i) != 0) return std::nullopt;
      y[i] = ub[i] / s.d(i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol{s.V * y, {}};
  for (int j = s.rank; j < A.cols(); ++j) sol.kernel.push_back(s.V.col(j));
  return sol;
}

namespace {

std::int64_t pmod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return std::int64_t((__int128)pmod(a, m) * pmod(b, m) % m);
}

// Inverse of a modulo m, gcd(a,m) = 1.
std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, r = pmod(a, m);
  while (r != 0) {
    std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw InvariantViolation("non-invertible residue");
  return pmod(x, m);
}

}  // namespace

namespace {

// A x ≡ b (mod p^e) by elimination over the local ring ℤ/p^e: pivots of least p-valuation
// divide every remaining entry, so all entries stay reduced and nothing overflows.
std::optional<IVec> solve_prime_power(const IMat& A, const IVec& b, std::int64_t p, std::int64_t pe) {
  const int R = A.rows(), C = A.cols();
  std::vector<IVec> M(R, IVec(C + 1));
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) M[i][j] = pmod(A(i, j), pe);
    M[i][C] = pmod(b[i], pe);
  }
  IMat V = IMat::identity(C);
  auto val = [&](std::int64_t x) {
    if (x == 0) return std::int64_t(1) << 62;
    std::int64_t v = 0;
    while (x % p == 0) x /= p, ++v;
    return v;
  };
  int t = 0;
  std::vector<std::int64_t> piv;
  for (; t < std::min(R, C); ++t) {
    int bi = -1, bj = -1;
    std::int64_t best = std::int64_t(1) << 62;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j) {
        const std::int64_t v = val(M[i][j]);
        if (v < best) best = v, bi = i, bj = j;
      }
    if (bi < 0) break;
    std::swap(M[t], M[bi]);
    if (bj != t) {
      for (int i = 0; i < R; ++i) std::swap(M[i][t], M[i][bj]);
      for (int i = 0; i < C; ++i) std::swap(V(i, t), V(i, bj));
    }
    std::int64_t pv = 1;
    for (std::int64_t k = 0; k < best; ++k) pv *= p;
    const std::int64_t unit = invmod(M[t][t] / pv, pe);
    for (int j = 0; j <= C; ++j) M[t][j] = mulmod(M[t][j], unit, pe);
    for (int i = 0; i < R; ++i) {
      if (i == t || M[i][t] == 0) continue;
      const std::int64_t f = M[i][t] / pv;
      for (int j = 0; j <= C; ++j) M[i][j] = pmod(M[i][j] - mulmod(f, M[t][j], pe), pe);
    }
    for (int j = t + 1; j < C; ++j) {
      if (M[t][j] == 0) continue;
      const std::int64_t f = M[t][j] / pv;
      for (int i = 0; i < R; ++i) M[i][j] = pmod(M[i][j] - mulmod(f, M[i][t], pe), pe);
      for (int i = 0; i < C; ++i) V(i, j) = pmod(V(i, j) - mulmod(f, V(i, t), pe), pe);
    }
    piv.push_back(pv);
  }
  IVec y(C, 0);
  for (int i = 0; i < R; ++i) {
    if (i < t) {
      if (M[i][C] % piv[i] != 0) return std::nullopt;
      y[i] = M[i][C] / piv[i];
    } else if (M[i][C] != 0) {
      return std::nullopt;
    }
  }
  IVec x(C, 0);
  for (int i = 0; i < C; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k < C; ++k) acc = pmod(acc + mulmod(V(i, k), y[k], pe), pe);
    x[i] = acc;
  }
  return x;
}

}  // namespace

std::optional<IVec> solve_mod(const IMat& A, const IVec& b, std::int64_t m) {
  if (m <= 0) throw InvariantViolation("modulus must be positive");
  IVec x(A.cols(), 0);
  std::int64_t done = 1, rest = m;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    std::int64_t pe = 1;
    while (rest % p == 0) rest /= p, pe *= p;
    auto xp = solve_prime_power(A, b, p, pe);
    if (!xp) return std::nullopt;
    // Chinese remaindering with the moduli handled so far.
    const std::int64_t inv = invmod(done % pe, pe);
    for (int i = 0; i < A.cols(); ++i) {
      const std::int64_t k = mulmod(pmod((*xp)[i] - x[i], pe), inv, pe);
      x[i] = pmod(x[i] + std::int64_t((__int128)done * k % ((__int128)done * pe)), done * pe);
    }
    done *= pe;
  }
  return x;
}

LatticeQuotient::LatticeQuotient(const IMat& gens) : n_(gens.rows()) {
  SmithForm s = smith_normal_form(gens);
  U_ = s.U;
  mod_.assign(n_, 0);
  for (int i = 0; i < s.rank; ++i) mod_[i] = s.d(i);
}

IVec LatticeQuotient::class_of(const IVec& x) const {
  IVec y = U_ * x;
  for (int i = 0; i < n_; ++i)
    if (mod_[i] != 0) y[i] = pmod(y[i], mod_[i]);
  return y;
}

bool LatticeQuotient::contains(const IVec& x) const { return is_zero(class_of(x)); }

Integer LatticeQuotient::torsion_order() const {
  Integer o = 1;
  for (auto d : mod_)
    if (d != 0) o *= d;
  return o;
}

int LatticeQuotient::free_rank() const { return int(std::count(mod_.begin(), mod_.end(), 0)); }

QMat to_q(const IMat& M) {
  QMat q(M.rows(), QVec(M.cols()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) q[i][j] = M(i, j);
  return q;
}

namespace {

// Reduced row echelon form of [A | b]; returns pivot columns.
std::vector<int> rref(QMat& a, int ncols) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < ncols && r < int(a.size()); ++c) {
    int p = r;
    while (p < int(a.size()) && a[p][c] == 0) ++p;
    if (p == int(a.size())) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int i = 0; i < int(a.size()); ++i)
      if (i != r && a[i][c] != 0) {
        Rational f = a[i][c];
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
      }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::optional<QVec> solve_rational(const QMat& A, const QVec& b) {
  if (A.size() != b.size()) throw InvariantViolation("rational solve shape mismatch");
  int n = A.empty() ? 0 : int(A[0].size());
  QMat a = A;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto piv = rref(a, n);
  for (std::size_t i = piv.size(); i < a.size(); ++i)
    if (a[i][n] != 0) return std::nullopt;
  QVec x(n, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a[i][n];
  return x;
}

std::vector<QVec> nullspace(const QMat& A) {
  int n = A.empty() ? 0 : int(A[0].size());
  QMat a = A;
  auto piv = rref(a, n);
  std::vector<bool> is_piv(n, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    QVec v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
    basis.push_back(v);
  }
  return basis;
}

int rank(const QMat& A) {
  int n = A.empty() ? 0 : int(A[0].size());
  QMat a = A;
  return int(rref(a, n).size());
}

QVec mul(const QMat& A, const QVec& x) {
  QVec y(A.size(), Rational(0));
  for (std::size_t i = 0; i < A.size(); ++i) y[i] = dot(A[i], x);
  return y;
}

}  // namespace dzb
