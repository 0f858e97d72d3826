#include "dzb/finite_oracle.hpp"

#include "dzb/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace dzb {

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::SL2: return "SL2";
    case GroupKind::GL2: return "GL2";
    case GroupKind::PGL2: return "PGL2";
    case GroupKind::SU3: return "SU3";
    case GroupKind::PU3: return "PU3";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& s) {
  for (auto k : {GroupKind::SL2, GroupKind::GL2, GroupKind::PGL2, GroupKind::SU3, GroupKind::PU3})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown group kind: " + s);
}

namespace {

bool unitary3(const FiniteField& F, int k, const FMat& g) {
  // g* J g = J for J antidiagonal, with * the conjugate transpose under x ↦ x^q.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int acc = 0;
      for (int a = 0; a < 3; ++a) acc = F.add(acc, F.mul(F.frobenius(g[a * 3 + i], k), g[(2 - a) * 3 + j]));
      if (acc != (i + j == 2 ? 1 : 0)) return false;
    }
  return true;
}

int det3(const FiniteField& F, const FMat& g) {
  auto m = [&](int i, int j) { return g[i * 3 + j]; };
  auto t = [&](int a, int b, int c) { return F.mul(m(0, a), F.mul(m(1, b), m(2, c))); };
  int pos = F.add(F.add(t(0, 1, 2), t(1, 2, 0)), t(2, 0, 1));
  int neg = F.add(F.add(t(2, 1, 0), t(0, 2, 1)), t(1, 0, 2));
  return F.sub(pos, neg);
}

}  // namespace

FiniteGroupOfLieType::FiniteGroupOfLieType(GroupKind kind, std::int64_t q, std::size_t bound) : kind_(kind), q_(q) {
  std::int64_t p = 0;
  int k = 0;
  if (!is_prime_power(q, &p, &k)) throw BadPrimePower(std::to_string(q) + " is not a prime power");
  const bool unitary = kind == GroupKind::SU3 || kind == GroupKind::PU3;
  const bool projective = kind == GroupKind::PGL2 || kind == GroupKind::PU3;
  if (expected_order() > std::int64_t(bound))
    throw OracleTooLarge(to_string(kind) + "(" + std::to_string(q) + ") exceeds the order bound " + std::to_string(bound));
  F_ = std::make_unique<FiniteField>(unitary ? q * q : q);
  const FiniteField& F = *F_;
  const int g = F.generator(), m1 = F.neg(1);
  std::vector<FMat> gens;
  FMat shat, minus;
  if (!unitary) {
    for (int x = 1; x < F.size(); ++x) gens.push_back({1, x, 0, 1});
    shat = {0, 1, m1, 0};
    gens.push_back(shat);
    gens.push_back({g, 0, 0, F.inv(g)});
    if (kind != GroupKind::SL2) gens.push_back({g, 0, 0, 1});
    minus = {m1, 0, 0, m1};
    N_ = kind == GroupKind::GL2 ? IVec{q - 1, q - 1} : IVec{q - 1};
  } else {
    for (int x = 0; x < F.size(); ++x)
      for (int y = 0; y < F.size(); ++y)
        for (int z = 0; z < F.size(); ++z) {
          FMat u{1, x, y, 0, 1, z, 0, 0, 1};
          if ((x || y || z) && unitary3(F, k, u)) gens.push_back(u);
        }
    // Torus element diag(a, a^{q−1}, a^{−q}) for a generator a of F_{q²}^×.
    gens.push_back({g, 0, 0, 0, F.pow(g, q - 1), 0, 0, 0, F.pow(g, -q)});
    if (kind == GroupKind::PU3) gens.push_back({1, 0, 0, 0, F.pow(g, q - 1), 0, 0, 0, 1});
    minus = {m1, 0, 0, 0, 1, 0, 0, 0, m1};
    for (int x = 1; x < F.size() && shat.empty(); ++x)
      for (int z = 1; z < F.size() && shat.empty(); ++z) {
        FMat s{0, 0, x, 0, 1, 0, z, 0, 0};
        if (det3(F, s) == 1 && unitary3(F, k, s) && F.mul(x, z) == m1) shat = s;
      }
    ensure(!shat.empty(), "no antidiagonal Tits lift found");
    gens.push_back(shat);
    N_ = IVec{q * q - 1};
  }
  G_ = std::make_unique<MatrixGroup>(F, unitary ? 3 : 2, gens, projective, bound);
  ensure(G_->size() == expected_order(), "group order differs from the order formula for " + to_string(kind));
  s_ = G_->index(shat);
  minus_one_ = G_->index(minus);
  const int d = G_->dim();
  for (int i = 0; i < G_->size(); ++i) {
    const FMat& m = G_->element(i);
    bool upper = true, diag = true, unip = true;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        const int v = m[r * d + c];
        if (r > c && v != 0) upper = false;
        if (r != c && v != 0) diag = false;
        if (r == c && v != m[0]) unip = false;
      }
    if (!upper) continue;
    B_.push_back(i);
    if (diag) T_.push_back(i);
    if (unip && m[0] == 1) U_.push_back(i);
  }
  ensure(B_.size() == T_.size() * U_.size(), "B ≠ T⋉U");
  const std::unordered_set<int> Uset(U_.begin(), U_.end());
  for (int b : B_)
    for (int u : U_) ensure(Uset.count(G_->mul(G_->mul(b, u), G_->inv(b))) == 1, "U is not normal in B");
  ensure(G_->mul(s_, s_) == minus_one_, "Tits lift does not square to α^∨(−1)");
}

std::int64_t FiniteGroupOfLieType::expected_order() const {
  const std::int64_t q = q_;
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::PGL2: return q * (q * q - 1);
    case GroupKind::GL2: return q * (q - 1) * (q * q - 1);
    case GroupKind::SU3:
    case GroupKind::PU3: return q * q * q * (q * q - 1) * (q * q * q + 1);
  }
  return 0;
}

IVec FiniteGroupOfLieType::torus_coordinates(int element) const {
  const FMat& m = G_->element(element);
  const int d = G_->dim();
  const FiniteField& F = *F_;
  auto md = [](std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; };
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::SU3: return {F.log(m[0])};
    case GroupKind::GL2: return {F.log(m[0]), F.log(m[d + 1])};
    case GroupKind::PGL2:
    case GroupKind::PU3: return {md(F.log(m[0]) - F.log(m[d + 1]), N_[0])};
  }
  return {};
}

IMat FiniteGroupOfLieType::weyl_action() const {
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::PGL2: return IMat::from_rows({{-1}});
    case GroupKind::GL2: return IMat::from_rows({{0, 1}, {1, 0}});
    case GroupKind::SU3:
    case GroupKind::PU3: return IMat::from_rows({{-q_}});
  }
  return {};
}

std::vector<QVec> FiniteGroupOfLieType::characters() const {
  std::vector<QVec> out{QVec{}};
  for (auto n : N_) {
    std::vector<QVec> next;
    for (const auto& v : out)
      for (std::int64_t j = 0; j < n; ++j) {
        QVec w = v;
        w.push_back(Rational(j, n));
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

Rational FiniteGroupOfLieType::character_value(const QVec& theta, int element) const {
  const IVec c = torus_coordinates(element);
  Rational v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v += theta[i] * c[i];
  return mod1(v);
}

QVec FiniteGroupOfLieType::weyl_act(const QVec& theta) const {
  // (sθ)(c) = θ(M⁻¹ c) and M is an involution on the coordinates.
  return mod1(weyl_action().transpose() * theta);
}

TorusCharacter RankOneData::character(const QVec& torus_character) const {
  return TorusCharacter(character_map * torus_character);
}

RankOneData rank_one_data(GroupKind kind, std::int64_t q) {
  switch (kind) {
    case GroupKind::SL2: {
      RootDatum d = simply_connected("A1");
      return {d, FrobeniusAction(IMat::identity(1), q, d), {1}, IMat::identity(1)};
    }
    case GroupKind::PGL2: {
      RootDatum d = adjoint("A1");
      return {d, FrobeniusAction(IMat::identity(1), q, d), {2}, IMat::identity(1)};
    }
    case GroupKind::GL2: {
      RootDatum d = gl_datum(2);
      return {d, FrobeniusAction(IMat::identity(2), q, d), {1, -1}, IMat::identity(2)};
    }
    case GroupKind::SU3:
    case GroupKind::PU3: {
      const auto quo = gl_datum(3).quotient({{1, 1, 1}});
      const IMat rev = IMat::from_rows({{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
      const IMat F0 = quo.project * rev * quo.lift;
      const IVec rel{1, 0, -1};
      if (kind == GroupKind::SU3) {
        // N(y) for y ∈ X_* has torus coordinate y₁ − q y₃.
        const IMat cmap = IMat::from_cols({quo.project * IVec{1, 0, -q}}, 2);
        return {quo.datum, FrobeniusAction(F0, q, quo.datum), quo.coproject * rel, cmap};
      }
      // PU3 is the dual datum; N(y) has coordinate (y₁ − q y₃) − (1 − q) y₂.
      const RootDatum d = quo.datum.dual();
      const IMat cmap = IMat::from_cols({quo.coproject * IVec{1, q - 1, -q}}, 2);
      return {d, FrobeniusAction(F0.transpose(), q, d), quo.project * rel, cmap};
    }
  }
  throw InvalidInput("unknown group kind");
}

// ---------------------------------------------------------------------------

namespace {

struct SphericalFunction {
  std::vector<std::vector<std::int64_t>> counts;  // per group element, counts of ζ^k
  bool nonzero = false;
};

}  // namespace

ThetaSphericalAlgebra hecke_fin(const FiniteGroupOfLieType& G, const QVec& theta) {
  const MatrixGroup& M = G.group();
  if (theta.size() != G.torus_moduli().size()) throw InvalidInput("character has wrong number of coordinates");
  for (std::size_t i = 0; i < theta.size(); ++i)
    if (!is_integer(theta[i] * G.torus_moduli()[i])) throw InvalidCharacter("character value outside (1/N)ℤ/ℤ");
  ThetaSphericalAlgebra alg;
  alg.order = int(to_i64(common_denominator(theta)));
  const int N = alg.order;
  const auto& B = G.borel();
  std::vector<std::int64_t> expo(B.size());
  for (std::size_t i = 0; i < B.size(); ++i) expo[i] = to_i64(G.character_value(theta, B[i]) * N);

  // Howlett–Lehrer count from the action on T by conjugation with the Tits lift.
  alg.howlett_lehrer = 1;
  {
    const int s = G.tits_lift(1), si = M.inv(s);
    bool fixed = true;
    for (int t : G.torus())
      fixed = fixed && G.character_value(theta, t) == G.character_value(theta, M.mul(M.mul(si, t), s));
    if (fixed) alg.howlett_lehrer = 2;
  }

  std::vector<SphericalFunction> E(2);
  std::vector<int> reps{G.tits_lift(0), G.tits_lift(1)};
  for (int w = 0; w < 2; ++w) {
    E[w].counts.assign(M.size(), std::vector<std::int64_t>(N, 0));
    for (std::size_t a = 0; a < B.size(); ++a) {
      const int left = M.mul(B[a], reps[w]);
      for (std::size_t b = 0; b < B.size(); ++b) E[w].counts[M.mul(left, B[b])][(expo[a] + expo[b]) % N] += 1;
    }
    // Nonzero iff some value is a nonzero element of ℚ(ζ_N).
    for (int g = 0; g < M.size() && !E[w].nonzero; ++g)
      if (std::any_of(E[w].counts[g].begin(), E[w].counts[g].end(), [](std::int64_t c) { return c != 0; }))
        E[w].nonzero = !Cyclotomic::from_counts(N, E[w].counts[g]).is_zero();
    if (E[w].nonzero) alg.basis.push_back(w);
  }
  const std::int64_t b2 = std::int64_t(B.size()) * std::int64_t(B.size());
  const int n = alg.dim();
  alg.constants.assign(n, std::vector<std::vector<Cyclotomic>>(n, std::vector<Cyclotomic>(n, Cyclotomic(0))));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int zhat = reps[alg.basis[z]];
        std::vector<std::int64_t> acc(N, 0);
        const auto& Ex = E[alg.basis[x]].counts;
        const auto& Ey = E[alg.basis[y]].counts;
        for (int h = 0; h < M.size(); ++h) {
          const auto& u = Ex[h];
          if (std::all_of(u.begin(), u.end(), [](std::int64_t c) { return c == 0; })) continue;
          const auto& v = Ey[M.mul(M.inv(h), zhat)];
          for (int i = 0; i < N; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < N; ++j) acc[(i + j) % N] += u[i] * v[j];
          }
        }
        const Cyclotomic value = Cyclotomic::from_counts(N, acc);
        const Cyclotomic base = Cyclotomic::from_counts(N, E[alg.basis[z]].counts[zhat]);
        ensure(!base.is_zero(), "spherical function vanishes at its representative");
        alg.constants[x][y][z] = value / base / Cyclotomic(Rational(b2), N);
      }
  ensure(alg.has_unit(), "E_e is not the unit");
  ensure(alg.is_associative(), "spherical algebra is not associative");
  return alg;
}

bool ThetaSphericalAlgebra::has_unit() const {
  if (basis.empty() || basis[0] != 0) return false;
  for (int x = 0; x < dim(); ++x)
    for (int z = 0; z < dim(); ++z) {
      const Cyclotomic want(x == z ? 1 : 0);
      if (constants[0][x][z] != want || constants[x][0][z] != want) return false;
    }
  return true;
}

bool ThetaSphericalAlgebra::is_associative() const {
  const int n = dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int u = 0; u < n; ++u) {
          Cyclotomic l(0), r(0);
          for (int w = 0; w < n; ++w) {
            l += constants[x][y][w] * constants[w][z][u];
            r += constants[y][z][w] * constants[x][w][u];
          }
          if (l != r) return false;
        }
  return true;
}

QParameter q_parameter(const ThetaSphericalAlgebra& alg, std::int64_t qF) {
  if (alg.dim() != 2) throw InvalidInput("q-parameter needs a two-dimensional algebra");
  const Cyclotomic& ca = alg.constants[1][1][0];
  const Cyclotomic& cb = alg.constants[1][1][1];
  if (!ca.is_rational() || !cb.is_rational())
    throw NonRationalStructureConstants("T′² = " + ca.to_string() + "·T_e + " + cb.to_string() + "·T′");
  QParameter r{ca.rational_value(), cb.rational_value(), Rational(1)};
  if (r.a == 0) throw NoAdmissibleRoot("T′ is nilpotent");
  if (r.b != 0) {
    // a q² − (2a + b²) q + a = 0; the roots are q and 1/q.
    const Rational B = 2 * r.a + r.b * r.b;
    const Rational disc = B * B - 4 * r.a * r.a;
    const Integer dn = num(disc), dd = den(disc);
    const Integer sn = boost::multiprecision::sqrt(dn), sd = boost::multiprecision::sqrt(dd);
    if (disc < 0 || sn * sn != dn || sd * sd != dd) throw NoAdmissibleRoot("q is irrational");
    const Rational root = Rational(sn, sd);
    Rational q1 = (B + root) / (2 * r.a), q2 = (B - root) / (2 * r.a);
    r.q = q1 >= 1 ? q1 : q2;
    if (r.q < 1) throw NoAdmissibleRoot("no root ≥ 1");
  }
  if (!is_integer(r.q)) throw NoAdmissibleRoot("q = " + to_string(r.q) + " is not an integer");
  Integer x = num(r.q);
  while (x > 1 && x % qF == 0) x /= qF;
  if (x != 1) throw NoAdmissibleRoot("q = " + to_string(r.q) + " is not a power of " + std::to_string(qF));
  return r;
}

TorusNormalizerExtension torus_normalizer_extension(const FiniteGroupOfLieType& G, const QVec& theta) {
  const bool fixed = G.weyl_act(theta) == mod1(theta);
  const int k = int(G.torus_moduli().size());
  CoefficientModule A{G.torus_moduli(), {}};
  FiniteGroup Q = FiniteGroup::cyclic(fixed ? 2 : 1);
  A.action.push_back(IMat::identity(k));
  if (fixed) A.action.push_back(G.weyl_action());
  std::vector<QVec> table(std::size_t(Q.size()) * Q.size(), QVec(k, Rational(0)));
  if (fixed) {
    // c(s,s) = σ(s)² σ(1)⁻¹ = ŝ².
    const int t = G.group().mul(G.tits_lift(1), G.tits_lift(1));
    const IVec c = G.torus_coordinates(t);
    for (int i = 0; i < k; ++i) table[3][i] = Rational(c[i], G.torus_moduli()[i]);
  }
  IMat chi(1, k);
  for (int i = 0; i < k; ++i) chi(0, i) = to_i64(theta[i] * G.torus_moduli()[i]);
  return {Cocycle2(Q, A, table), chi};
}

}  // namespace dzb
