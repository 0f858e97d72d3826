#include "dzb/extensions.hpp"

#include "dzb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dzb {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : t_(std::move(table)) {
  const int n = size();
  if (n == 0) throw InvalidInput("empty group table");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (int(t_[a].size()) != n) throw InvalidInput("group table is not square");
    if (t_[0][a] != a || t_[a][0] != a) throw InvalidInput("element 0 is not the identity");
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      const int c = t_[a][b];
      if (c < 0 || c >= n || seen[c]) throw InvalidInput("group table is not a Latin square");
      seen[c] = 1;
      if (c == 0) inv_[a] = b;
    }
  }
  if (n <= 64)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t_[t_[a][b]][c] != t_[a][t_[b][c]]) throw InvalidInput("group table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(t);
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int m = b.size(), n = a.size() * m;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  return FiniteGroup(t);
}

FiniteGroup FiniteGroup::dihedral(int n) {
  // r^k s^e ↦ k + n e.
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      const int a = x % n, e = x / n, b = y % n, f = y / n;
      const int k = ((e ? a - b : a + b) % n + n) % n;
      t[x][y] = k + n * ((e + f) % 2);
    }
  return FiniteGroup(t);
}

FiniteGroup FiniteGroup::quaternion() {
  // ±1, ±i, ±j, ±k ↦ unit + 4·[negative], units ordered 1, i, j, k.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      t[x][y] = unit[u][v] + 4 * ((x / 4 + y / 4 + sign[u][v]) % 2);
    }
  return FiniteGroup(t);
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens, std::size_t bound) {
  if (gens.empty()) return cyclic(1);
  const int d = int(gens[0].size());
  std::vector<int> id(d);
  for (int i = 0; i < d; ++i) id[i] = i;
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(d);
    for (int i = 0; i < d; ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t b = 0; b < elems.size(); ++b)
    for (const auto& g : gens) {
      auto x = compose(elems[b], g);
      if (!index.count(x)) {
        if (elems.size() >= bound) throw GroupTooLarge("permutation group exceeds the bound");
        index.emplace(x, int(elems.size()));
        elems.push_back(x);
      }
    }
  const int n = int(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(t);
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_homomorphism(const FiniteGroup& target, const std::vector<int>& f) const {
  if (int(f.size()) != size()) return false;
  for (int x : f)
    if (x < 0 || x >= target.size()) return false;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (f[mul(a, b)] != target.mul(f[a], f[b])) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool CoefficientModule::contains(const QVec& v) const {
  if (int(v.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (v[i] < 0 || v[i] >= 1) return false;
    if (moduli[i] != 0 && !is_integer(v[i] * moduli[i])) return false;
  }
  return true;
}

QVec CoefficientModule::act(int g, const QVec& v) const {
  if (action.empty()) return v;
  return mod1(action[g] * v);
}

namespace {

QVec vadd(const QVec& a, const QVec& b) {
  QVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

QVec vsub(const QVec& a, const QVec& b) {
  QVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

void validate_module(const FiniteGroup& Q, const CoefficientModule& A) {
  for (auto n : A.moduli)
    if (n < 0) throw InvalidInput("negative coefficient modulus");
  if (A.action.empty()) return;
  if (int(A.action.size()) != Q.size()) throw InvalidInput("coefficient action needs one matrix per element");
  for (const auto& m : A.action)
    if (m.rows() != A.dim() || m.cols() != A.dim()) throw InvalidInput("coefficient action matrix has wrong shape");
  if (!A.action[0].is_identity()) throw InvalidInput("identity acts nontrivially on the coefficients");
  // Action must preserve A and be multiplicative on the generators (1/n_i) e_i.
  for (int g = 0; g < Q.size(); ++g)
    for (int i = 0; i < A.dim(); ++i) {
      if (A.moduli[i] == 0) continue;
      QVec e(A.dim(), Rational(0));
      e[i] = Rational(1, A.moduli[i]);
      if (!A.contains(A.act(g, e))) throw InvalidInput("coefficient action does not preserve A");
      for (int h = 0; h < Q.size(); ++h)
        if (A.act(Q.mul(g, h), e) != A.act(g, A.act(h, e)))
          throw InvalidInput("coefficient action is not a group action");
    }
}

QVec coboundary_value(const Cocycle2& c, const std::vector<QVec>& s, int x, int y) {
  const auto& A = c.coefficients();
  return mod1(vadd(vsub(A.act(x, s[y]), s[c.group().mul(x, y)]), s[x]));
}

}  // namespace

Cocycle2::Cocycle2(FiniteGroup Q, CoefficientModule A, std::vector<QVec> table)
    : Q_(std::move(Q)), A_(std::move(A)), c_(std::move(table)) {
  validate_module(Q_, A_);
  const int n = Q_.size();
  if (int(c_.size()) != n * n) throw InvalidInput("cocycle table has wrong size");
  for (auto& v : c_) {
    if (int(v.size()) != A_.dim()) throw InvalidInput("cocycle value has wrong dimension");
    v = mod1(v);
    if (!A_.contains(v)) throw InvalidInput("cocycle value outside the coefficient group");
  }
  for (int x = 0; x < n; ++x)
    if (!is_zero_mod1((*this)(0, x)) || !is_zero_mod1((*this)(x, 0))) throw InvalidInput("cocycle is not normalized");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        QVec lhs = vadd(A_.act(x, (*this)(y, z)), (*this)(x, Q_.mul(y, z)));
        QVec rhs = vadd((*this)(Q_.mul(x, y), z), (*this)(x, y));
        if (!is_zero_mod1(vsub(lhs, rhs))) throw InvalidInput("cocycle identity fails");
      }
}

Cocycle2 Cocycle2::zero(FiniteGroup Q, CoefficientModule A) {
  const int n = Q.size();
  std::vector<QVec> t(std::size_t(n) * n, QVec(A.dim(), Rational(0)));
  return Cocycle2(std::move(Q), std::move(A), std::move(t));
}

bool Cocycle2::is_zero() const {
  for (const auto& v : c_)
    if (!is_zero_mod1(v)) return false;
  return true;
}

Cocycle2 pushout(const Cocycle2& c, const IMat& chi, const IVec& target_moduli) {
  if (chi.cols() != c.coefficients().dim() || chi.rows() != int(target_moduli.size()))
    throw InvalidInput("pushout map has wrong shape");
  std::vector<QVec> t;
  for (const auto& v : c.table()) t.push_back(mod1(chi * v));
  return Cocycle2(c.group(), CoefficientModule{target_moduli, {}}, t);
}

Cocycle2 pullback(const Cocycle2& c, const FiniteGroup& source, const std::vector<int>& f) {
  if (!source.is_homomorphism(c.group(), f)) throw InvalidInput("pullback map is not a homomorphism");
  CoefficientModule A{c.coefficients().moduli, {}};
  if (!c.coefficients().action.empty())
    for (int x = 0; x < source.size(); ++x) A.action.push_back(c.coefficients().action[f[x]]);
  std::vector<QVec> t;
  for (int x = 0; x < source.size(); ++x)
    for (int y = 0; y < source.size(); ++y) t.push_back(c(f[x], f[y]));
  return Cocycle2(source, A, t);
}

Cocycle2 baer_sum(const Cocycle2& a, const Cocycle2& b) {
  if (!(a.group() == b.group()) || !(a.coefficients() == b.coefficients()))
    throw MismatchedBase("Baer sum needs the same group and coefficients");
  std::vector<QVec> t;
  for (std::size_t i = 0; i < a.table().size(); ++i) t.push_back(vadd(a.table()[i], b.table()[i]));
  return Cocycle2(a.group(), a.coefficients(), t);
}

Cocycle2 negate(const Cocycle2& c) {
  std::vector<QVec> t;
  for (const auto& v : c.table()) t.push_back(vsub(QVec(v.size(), Rational(0)), v));
  return Cocycle2(c.group(), c.coefficients(), t);
}

Cocycle2 add_coboundary(const Cocycle2& c, const std::vector<QVec>& s) {
  const int n = c.group().size();
  if (int(s.size()) != n || !is_zero_mod1(s[0])) throw InvalidInput("cochain must vanish at the identity");
  std::vector<QVec> t;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.push_back(vadd(c(x, y), coboundary_value(c, s, x, y)));
  return Cocycle2(c.group(), c.coefficients(), t);
}

void validate(const Cocycle2& c, const EquivariantStructure& e) {
  const FiniteGroup& Q = c.group();
  const auto& A = c.coefficients();
  const int g = e.gamma.size();
  if (int(e.on_group.size()) != g || int(e.on_coefficients.size()) != g || int(e.witness.size()) != g)
    throw InvalidInput("equivariant structure needs data for every element of Γ");
  for (int a = 0; a < g; ++a) {
    if (!Q.is_homomorphism(Q, e.on_group[a])) throw InvalidInput("Γ does not act by automorphisms");
    if (int(e.witness[a].size()) != Q.size()) throw InvalidInput("witness cochain has wrong size");
    for (int x = 0; x < Q.size(); ++x) {
      for (int y = 0; y < Q.size(); ++y) {
        QVec gc = mod1(e.on_coefficients[a] * c(x, y));
        QVec diff = vsub(gc, c(e.on_group[a][x], e.on_group[a][y]));
        QVec ds = vadd(vsub(A.act(x, e.witness[a][y]), e.witness[a][Q.mul(x, y)]), e.witness[a][x]);
        if (!is_zero_mod1(vsub(diff, ds))) throw InvalidInput("equivariance witness is not a coboundary record");
      }
    }
  }
}

std::optional<std::vector<QVec>> splitting(const Cocycle2& c, const EquivariantStructure* eq) {
  if (eq) validate(c, *eq);
  const FiniteGroup& Q = c.group();
  const auto& A = c.coefficients();
  const int n = Q.size(), k = A.dim();
  // Unknown s_i(x) for x ≠ 1 has column (x − 1)·k + i.
  auto col = [&](int x, int i) { return (x - 1) * k + i; };
  std::vector<std::map<int, std::int64_t>> rows;
  QVec rhs;
  auto add_term = [&](std::map<int, std::int64_t>& r, int x, int i, std::int64_t v) {
    if (x == 0 || v == 0) return;
    r[col(x, i)] += v;
  };
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int i = 0; i < k; ++i) {
        std::map<int, std::int64_t> r;
        for (int j = 0; j < k; ++j) {
          const std::int64_t a = A.action.empty() ? (i == j) : A.action[x](i, j);
          add_term(r, y, j, a);
        }
        add_term(r, Q.mul(x, y), i, -1);
        add_term(r, x, i, 1);
        rows.push_back(r);
        rhs.push_back(c(x, y)[i]);
      }
  if (eq)
    for (int g = 0; g < eq->gamma.size(); ++g)
      for (int x = 1; x < n; ++x)
        for (int i = 0; i < k; ++i) {
          std::map<int, std::int64_t> r;
          for (int j = 0; j < k; ++j) add_term(r, x, j, eq->on_coefficients[g](i, j));
          add_term(r, eq->on_group[g][x], i, -1);
          rows.push_back(r);
          rhs.push_back(eq->witness[g][x][i]);
        }
  const int R = int(rows.size());
  std::vector<int> fin, div;
  for (int x = 1; x < n; ++x)
    for (int i = 0; i < k; ++i) (A.moduli[i] == 0 ? div : fin).push_back(col(x, i));

  // Eliminate divisible unknowns through the saturated left kernel K of their columns.
  std::optional<SmithForm> sd;
  QMat K;
  if (!div.empty() && R > 0) {
    IMat D(R, int(div.size()));
    for (int r = 0; r < R; ++r)
      for (int j = 0; j < int(div.size()); ++j) {
        auto it = rows[r].find(div[j]);
        if (it != rows[r].end()) D(r, j) = it->second;
      }
    sd = smith_normal_form(D);
    for (int r = sd->rank; r < R; ++r) K.push_back(to_q(sd->U.row(r)));
  } else {
    for (int r = 0; r < R; ++r) {
      QVec e(R, Rational(0));
      e[r] = 1;
      K.push_back(e);
    }
  }
  const int nf = int(fin.size());
  QMat G(K.size(), QVec(nf, Rational(0)));
  QVec h(K.size(), Rational(0));
  for (std::size_t a = 0; a < K.size(); ++a)
    for (int r = 0; r < R; ++r) {
      if (K[a][r] == 0) continue;
      h[a] += K[a][r] * rhs[r];
      for (int j = 0; j < nf; ++j) {
        auto it = rows[r].find(fin[j]);
        if (it != rows[r].end()) G[a][j] += K[a][r] * Rational(it->second, A.moduli[fin[j] % k]);
      }
    }
  Integer L = 1;
  for (std::size_t a = 0; a < K.size(); ++a) {
    L = lcm(L, den(h[a]));
    for (const auto& v : G[a]) L = lcm(L, den(v));
  }
  const std::int64_t Lm = to_i64(L);
  IMat GM(int(K.size()), nf);
  IVec hb(K.size());
  for (std::size_t a = 0; a < K.size(); ++a) {
    hb[a] = to_i64(Integer(num(h[a] * L) % L));
    for (int j = 0; j < nf; ++j) GM(int(a), j) = to_i64(Integer(num(G[a][j] * L) % L));
  }
  std::vector<QVec> s(n, QVec(k, Rational(0)));
  IVec sigma(nf, 0);
  if (!K.empty()) {
    auto sol = solve_mod(GM, hb, Lm);
    if (!sol) return std::nullopt;
    sigma = *sol;
  }
  for (int j = 0; j < nf; ++j) {
    const int x = fin[j] / k + 1, i = fin[j] % k;
    s[x][i] = mod1(Rational(sigma[j], A.moduli[i]));
  }
  if (sd) {
    QVec y(R);
    for (int r = 0; r < R; ++r) {
      y[r] = rhs[r];
      for (int j = 0; j < nf; ++j) {
        auto it = rows[r].find(fin[j]);
        if (it != rows[r].end()) y[r] -= it->second * s[fin[j] / k + 1][fin[j] % k];
      }
    }
    const QVec uy = sd->U * y;
    QVec t(div.size(), Rational(0));
    for (int i = 0; i < sd->rank; ++i) t[i] = uy[i] / sd->d(i);
    const QVec tv = sd->V * t;
    for (std::size_t j = 0; j < div.size(); ++j) s[div[j] / k + 1][div[j] % k] = mod1(tv[j]);
  }
  // The witness must satisfy the original system exactly.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ensure(coboundary_value(c, s, x, y) == c(x, y), "splitting witness fails ds = c");
  if (eq)
    for (int g = 0; g < eq->gamma.size(); ++g)
      for (int x = 0; x < n; ++x)
        ensure(is_zero_mod1(vsub(vsub(eq->on_coefficients[g] * s[x], s[eq->on_group[g][x]]), eq->witness[g][x])),
               "splitting witness is not equivariant");
  return s;
}

std::optional<std::vector<QVec>> splitting_exhaustive(const Cocycle2& c, std::size_t bound) {
  const auto& A = c.coefficients();
  const int n = c.group().size(), k = A.dim();
  double total = 1;
  for (auto m : A.moduli) {
    if (m == 0) throw InvalidInput("exhaustive search needs finite coefficients");
    total *= std::pow(double(m), n);
  }
  if (total > double(bound)) throw GroupTooLarge("cochain space exceeds the exhaustive-search bound");
  std::vector<std::int64_t> digits(std::size_t(n) * k, 0);
  while (true) {
    std::vector<QVec> s(n, QVec(k));
    for (int x = 0; x < n; ++x)
      for (int i = 0; i < k; ++i) s[x][i] = Rational(digits[std::size_t(x) * k + i], A.moduli[i]);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) ok = coboundary_value(c, s, x, y) == c(x, y);
    if (ok) return s;
    std::size_t pos = 0;
    while (pos < digits.size()) {
      if (++digits[pos] < A.moduli[pos % k]) break;
      digits[pos++] = 0;
    }
    if (pos == digits.size()) return std::nullopt;
  }
}

}  // namespace dzb
