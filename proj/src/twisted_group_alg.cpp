#include "dzb/twisted_group_alg.hpp"

#include "dzb/errors.hpp"
#include "dzb/extensions.hpp"

#include <map>
#include <set>

namespace dzb {

TwistedLatticeAlgebra::TwistedLatticeAlgebra(QMat cocycle) : r_(int(cocycle.size())), m_(std::move(cocycle)) {
  for (const auto& row : m_)
    if (int(row.size()) != r_) throw InvalidInput("cocycle matrix must be square");
}

TwistedLatticeAlgebra TwistedLatticeAlgebra::from_bicharacter(const QMat& beta) {
  const int r = int(beta.size());
  QMat m(r, QVec(r, Rational(0)));
  for (int i = 0; i < r; ++i) {
    if (int(beta[i].size()) != r) throw InvalidInput("bicharacter matrix must be square");
    if (!is_integer(beta[i][i])) throw InvalidInput("bicharacter is not alternating");
    for (int j = 0; j < r; ++j) {
      if (!is_integer(beta[i][j] + beta[j][i])) throw InvalidInput("bicharacter is not alternating");
      if (i < j) m[i][j] = mod1(beta[i][j]);
    }
  }
  return TwistedLatticeAlgebra(m);
}

Rational TwistedLatticeAlgebra::mu(const IVec& x, const IVec& y) const {
  Rational v = 0;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      if (x[i] && y[j]) v += m_[i][j] * x[i] * y[j];
  return mod1(v);
}

Rational TwistedLatticeAlgebra::beta(const IVec& x, const IVec& y) const {
  const QMat b = beta_matrix();
  Rational v = 0;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) v += b[i][j] * x[i] * y[j];
  return mod1(v);
}

QMat TwistedLatticeAlgebra::beta_matrix() const {
  QMat b(r_, QVec(r_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) b[i][j] = mod1(m_[i][j] - m_[j][i]);
  return b;
}

Rational TwistedLatticeAlgebra::commutator_phase(const IVec& x, const IVec& y) const {
  // T_x T_y = e(μ(x,y)) T_{x+y} and T_y T_x = e(μ(y,x)) T_{x+y}.
  return mod1(mu(x, y) - mu(y, x));
}

bool Sublattice::contains(const IVec& x) const { return LatticeQuotient(basis).contains(x); }

Sublattice span_lattice(const std::vector<IVec>& generators, int rank) {
  const IMat G = IMat::from_cols(generators, rank);
  const SmithForm s = smith_normal_form(G);
  if (s.rank != rank) throw InvalidInput("generators do not span a full-rank sublattice");
  const IMat Ui = unimodular_inverse(s.U);
  Sublattice out{IMat(rank, rank), 1};
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < rank; ++k) out.basis(k, i) = checked_mul(Ui(k, i), s.d(i));
    out.index = checked_mul(out.index, s.d(i));
  }
  return out;
}

Sublattice center_lattice(const TwistedLatticeAlgebra& alg) {
  const int r = alg.rank();
  const QMat B = alg.beta_matrix();
  std::int64_t L = 1;
  for (const auto& row : B) L = lcm64(L, to_i64(common_denominator(row)));
  // x is central iff B x ∈ ℤ^r, i.e. (L B) x ≡ 0 mod L.
  IMat A(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) A(i, j) = to_i64(B[i][j] * L);
  const SmithForm s = smith_normal_form(A);
  std::vector<IVec> gens;
  for (int i = 0; i < r; ++i) gens.push_back(scale(L / gcd64(s.d(i), L), s.V.col(i)));
  Sublattice Z = span_lattice(gens, r);
  for (int i = 0; i < r; ++i) {
    const IVec z = Z.basis.col(i);
    for (int j = 0; j < r; ++j) {
      IVec e(r, 0);
      e[j] = 1;
      ensure(alg.beta(z, e) == 0, "center basis vector is not in the radical of β");
    }
  }
  return Z;
}

std::int64_t NormalForm::quotient_order() const {
  std::int64_t n = 1;
  for (auto m : moduli) n = checked_mul(n, m);
  return n;
}

IVec NormalForm::coords(const IVec& x) const {
  IVec y = to_quotient * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = ((y[i] % moduli[i]) + moduli[i]) % moduli[i];
  return y;
}

namespace {

// Mixed-radix enumeration of ⊕ ℤ/n_i.
IVec decode(std::int64_t k, const IVec& moduli) {
  IVec y(moduli.size());
  for (std::size_t i = moduli.size(); i-- > 0;) {
    y[i] = k % moduli[i];
    k /= moduli[i];
  }
  return y;
}

std::int64_t encode(const IVec& y, const IVec& moduli) {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) k = k * moduli[i] + (((y[i] % moduli[i]) + moduli[i]) % moduli[i]);
  return k;
}

Rational form(const QMat& M, const IVec& x, const IVec& y) {
  Rational v = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (x[i] && y[j]) v += M[i][j] * x[i] * y[j];
  return mod1(v);
}

IVec unit(int r, int i) {
  IVec e(r, 0);
  e[i] = 1;
  return e;
}

}  // namespace

NormalForm rescale_normal_form(const TwistedLatticeAlgebra& alg, std::size_t bound) {
  const int r = alg.rank();
  NormalForm nf;
  nf.center = center_lattice(alg);
  const SmithForm s = smith_normal_form(nf.center.basis);
  nf.to_quotient = s.U;
  nf.from_quotient = unimodular_inverse(s.U);
  for (int i = 0; i < r; ++i) nf.moduli.push_back(s.d(i));
  if (std::size_t(nf.quotient_order()) > bound) throw GroupTooLarge("Λ/ZΛ has more than " + std::to_string(bound) + " elements");
  const QMat B = alg.beta_matrix();
  nf.beta_bar.assign(r, QVec(r, Rational(0)));
  nf.mu_bar.assign(r, QVec(r, Rational(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      nf.beta_bar[i][j] = form(B, nf.from_quotient.col(i), nf.from_quotient.col(j));
      ensure(is_integer(nf.beta_bar[i][j] * nf.moduli[i]), "β does not descend to Λ/ZΛ");
      if (i < j) nf.mu_bar[i][j] = nf.beta_bar[i][j];
    }
  bool ok = true;
  for (int i = 0; i < r && ok; ++i)
    for (int j = 0; j < r && ok; ++j) ok = alg.commutator_phase(nf.center.basis.col(i), unit(r, j)) == 0;
  for (std::int64_t k = 1; k < nf.quotient_order() && ok; ++k) {
    const IVec x = nf.from_quotient * decode(k, nf.moduli);
    bool commutes = true;
    for (int j = 0; j < r; ++j) commutes = commutes && alg.commutator_phase(x, unit(r, j)) == 0;
    ok = !commutes;
  }
  nf.center_is_span = ok;
  return nf;
}

namespace {

std::vector<std::int64_t> subgroup_closure(const std::vector<IVec>& gens, const IVec& moduli) {
  std::set<std::int64_t> H{0};
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto h : frontier)
      for (const auto& g : gens) {
        const auto k = encode(add(decode(h, moduli), g), moduli);
        if (H.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  return {H.begin(), H.end()};
}

}  // namespace

IsotropicTower isotropic_tower(const TwistedLatticeAlgebra& alg, const NormalForm& nf) {
  const int r = alg.rank();
  const IVec& mod = nf.moduli;
  std::vector<IVec> gens;
  std::set<std::int64_t> H{0};
  for (std::int64_t k = 1; k < nf.quotient_order(); ++k) {
    if (H.count(k)) continue;
    const IVec y = decode(k, mod);
    bool isotropic = true;
    for (const auto& g : gens) isotropic = isotropic && form(nf.beta_bar, y, g) == 0;
    if (!isotropic) continue;
    gens.push_back(y);
    const auto closed = subgroup_closure(gens, mod);
    H = std::set<std::int64_t>(closed.begin(), closed.end());
  }
  std::vector<IVec> lattice_gens;
  for (int i = 0; i < r; ++i) lattice_gens.push_back(nf.center.basis.col(i));
  for (const auto& g : gens) lattice_gens.push_back(nf.from_quotient * g);
  IsotropicTower t;
  t.isotropic = span_lattice(lattice_gens, r);
  t.outer_index = t.isotropic.index;
  ensure(nf.center.index % t.outer_index == 0, "ZΛ is not contained in CΛ");
  t.inner_index = nf.center.index / t.outer_index;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      ensure(alg.beta(t.isotropic.basis.col(i), t.isotropic.basis.col(j)) == 0, "CΛ is not isotropic");

  // x ↦ β(x, ·) on the basis of CΛ, over representatives of Λ/CΛ.
  const SmithForm s = smith_normal_form(t.isotropic.basis);
  const IMat Ui = unimodular_inverse(s.U);
  IVec cmod;
  for (int i = 0; i < r; ++i) cmod.push_back(s.d(i));
  std::set<QVec> images;
  for (std::int64_t k = 0; k < t.outer_index; ++k) {
    const IVec x = Ui * decode(k, cmod);
    QVec chi;
    for (int j = 0; j < r; ++j) chi.push_back(alg.beta(x, t.isotropic.basis.col(j)));
    images.insert(chi);
  }
  t.pairing_is_isomorphism = std::int64_t(images.size()) == t.outer_index && t.outer_index == t.inner_index;
  return t;
}

namespace {

using Elem = std::vector<Cyclotomic>;

struct FiniteTwisted {
  IVec mod;
  QMat mu;
  int N = 1;
  std::int64_t n = 1;
  std::vector<IVec> coords;               // decode(k) for every k
  std::vector<std::vector<std::int64_t>> mu_int;  // N·μ̄, integral
  std::vector<Cyclotomic> zeta;           // ζ_N^k

  // Call after N and n are set.
  void prepare() {
    for (std::int64_t k = 0; k < n; ++k) coords.push_back(decode(k, mod));
    mu_int.assign(mu.size(), std::vector<std::int64_t>(mu.size()));
    for (std::size_t i = 0; i < mu.size(); ++i)
      for (std::size_t j = 0; j < mu.size(); ++j) mu_int[i][j] = to_i64(mu[i][j] * N);
    for (int k = 0; k < N; ++k) zeta.push_back(Cyclotomic::zeta(N, k));
  }
  Cyclotomic e(const Rational& t) const { return Cyclotomic::zeta(N, to_i64(mod1(t) * N)); }
  Elem basis(std::int64_t k, const Cyclotomic& c) const {
    Elem v(n, Cyclotomic(0));
    v[k] = c;
    return v;
  }
  static std::vector<std::int64_t> support(const Elem& a) {
    std::vector<std::int64_t> s;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) s.push_back(std::int64_t(i));
    return s;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c(n, Cyclotomic(0));
    const auto sb = support(b);
    IVec sum(mod.size());
    for (std::int64_t i : support(a)) {
      const IVec& x = coords[i];
      for (std::int64_t j : sb) {
        const IVec& y = coords[j];
        std::int64_t phase = 0;
        for (std::size_t u = 0; u < x.size(); ++u)
          for (std::size_t v = 0; v < y.size(); ++v) phase += mu_int[u][v] * x[u] * y[v];
        phase = ((phase % N) + N) % N;
        for (std::size_t u = 0; u < x.size(); ++u) sum[u] = x[u] + y[u];
        const Cyclotomic t = a[i] * b[j];
        c[encode(sum, mod)] += phase ? t * zeta[phase] : t;
      }
    }
    return c;
  }
};

bool is_zero(const Elem& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

// v = λ·w for some scalar λ (w nonzero).
bool proportional(const Elem& v, const Elem& w) {
  std::size_t p = 0;
  while (p < w.size() && w[p].is_zero()) ++p;
  if (p == w.size()) return false;
  const Cyclotomic lambda = v[p] / w[p];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != lambda * w[i]) return false;
  return true;
}

}  // namespace

BlockStructure block_structure(const NormalForm& nf, const IsotropicTower& tower) {
  FiniteTwisted A{nf.moduli, nf.mu_bar};
  const int r = int(nf.moduli.size());
  for (const auto& row : nf.beta_bar) A.N = int(lcm64(A.N, to_i64(common_denominator(row))));
  A.n = nf.quotient_order();
  A.prepare();
  BlockStructure out;
  out.d = int(tower.inner_index);
  out.total_dim = A.n;

  // Center: T_a is central iff it commutes with every generator T_{e_i}.
  out.center_dim = 0;
  for (std::int64_t a = 0; a < A.n; ++a) {
    const Elem Ta = A.basis(a, 1);
    bool central = true;
    for (int i = 0; i < r && central; ++i) {
      if (nf.moduli[i] == 1) continue;
      const Elem g = A.basis(encode(unit(r, i), nf.moduli), 1);
      central = A.mul(g, Ta) == A.mul(Ta, g);
    }
    out.center_dim += central ? 1 : 0;
  }

  // H = image of CΛ; rescale T_h by a splitting of μ̄|_H so that h ↦ T_h is a homomorphism.
  std::vector<IVec> cgens;
  for (int i = 0; i < r; ++i) cgens.push_back(nf.coords(tower.isotropic.basis.col(i)));
  const std::vector<std::int64_t> H = subgroup_closure(cgens, nf.moduli);
  std::map<std::int64_t, int> pos;
  for (std::size_t i = 0; i < H.size(); ++i) pos[H[i]] = int(i);
  std::vector<std::vector<int>> table(H.size(), std::vector<int>(H.size()));
  std::vector<QVec> mu_table;
  for (auto h1 : H)
    for (auto h2 : H) {
      const IVec x = decode(h1, nf.moduli), y = decode(h2, nf.moduli);
      table[pos[h1]][pos[h2]] = pos.at(encode(add(x, y), nf.moduli));
      mu_table.push_back({form(nf.mu_bar, x, y)});
    }
  const Cocycle2 c(FiniteGroup(table), CoefficientModule{{0}, {}}, mu_table);
  const auto split = splitting(c);
  ensure(split.has_value(), "μ̄ does not split on the isotropic subgroup");
  std::vector<Cyclotomic> scale_h;
  for (std::size_t i = 0; i < H.size(); ++i) scale_h.push_back(A.e(-(*split)[i][0]));
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = 0; j < H.size(); ++j) {
      const Elem lhs = A.mul(A.basis(H[i], scale_h[i]), A.basis(H[j], scale_h[j]));
      const int k = table[i][j];
      ensure(lhs == A.basis(H[k], scale_h[k]), "rescaled T_h is not multiplicative");
    }

  // Characters of H as β̄(x, ·) for x over representatives of A/H.
  std::vector<IVec> reps;
  std::set<std::int64_t> covered;
  for (std::int64_t k = 0; k < A.n; ++k) {
    if (covered.count(k)) continue;
    const IVec x = decode(k, nf.moduli);
    reps.push_back(x);
    for (auto h : H) covered.insert(encode(add(x, decode(h, nf.moduli)), nf.moduli));
  }
  const Rational inv_h(1, std::int64_t(H.size()));
  for (const auto& x : reps) {
    Elem e(A.n, Cyclotomic(0));
    for (std::size_t i = 0; i < H.size(); ++i)
      e[H[i]] = Cyclotomic(inv_h) * A.e(-form(nf.beta_bar, x, decode(H[i], nf.moduli))) * scale_h[i];
    out.idempotents.push_back(e);
  }

  const Elem one = A.basis(0, 1);
  bool ok = true;
  Elem sum(A.n, Cyclotomic(0));
  for (std::size_t i = 0; i < out.idempotents.size() && ok; ++i) {
    for (std::int64_t k = 0; k < A.n; ++k) sum[k] += out.idempotents[i][k];
    for (std::size_t j = 0; j < out.idempotents.size() && ok; ++j) {
      const Elem p = A.mul(out.idempotents[i], out.idempotents[j]);
      ok = i == j ? p == out.idempotents[i] : is_zero(p);
    }
  }
  out.idempotents_orthogonal = ok && sum == one;

  ok = true;
  for (const auto& e : out.idempotents)
    for (std::int64_t a = 0; a < A.n && ok; ++a) {
      const Elem corner = A.mul(A.mul(e, A.basis(a, 1)), e);
      ok = is_zero(corner) || proportional(corner, e);
    }
  out.corners_one_dimensional = ok;

  std::set<int> hit;
  for (const auto& x : reps) {
    const std::int64_t kx = encode(x, nf.moduli), kminus = encode(neg(x), nf.moduli);
    const Elem Tinv = A.basis(kminus, A.e(-form(nf.mu_bar, x, neg(x))));
    const Elem conj = A.mul(A.mul(A.basis(kx, 1), out.idempotents[0]), Tinv);
    for (std::size_t j = 0; j < out.idempotents.size(); ++j)
      if (conj == out.idempotents[j]) hit.insert(int(j));
  }
  out.conjugation_transitive = hit.size() == out.idempotents.size() && int(hit.size()) == out.d;
  return out;
}

}  // namespace dzb
