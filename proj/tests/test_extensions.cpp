#include "dzb/errors.hpp"
#include "dzb/extensions.hpp"

#include <doctest.h>

#include <random>

using namespace dzb;

namespace {

const FiniteGroup V4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));

QVec q1(const Rational& r) { return QVec{r}; }

// h((i₁,j₁),(i₂,j₂)) = i₁ j₂ / 2 on (ℤ/2)² with (i, j) ↦ 2i + j.
Cocycle2 heisenberg(const IVec& moduli = {2}) {
  std::vector<QVec> t;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t.push_back(q1(Rational((x / 2) * (y % 2), 2)));
  return Cocycle2(V4, CoefficientModule{moduli, {}}, t);
}

// Carry cocycle on ℤ/n: c(x, y) = [x + y ≥ n]·u.
Cocycle2 carry(int n, const QVec& u, const IVec& moduli) {
  std::vector<QVec> t;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.push_back(x + y >= n ? u : QVec(u.size(), Rational(0)));
  return Cocycle2(FiniteGroup::cyclic(n), CoefficientModule{moduli, {}}, t);
}

bool is_splitting(const Cocycle2& c, const std::vector<QVec>& s) { return add_coboundary(negate(c), s).is_zero(); }

Rational random_value(std::int64_t modulus, std::mt19937& rng) {
  const int d = modulus ? int(modulus) : std::uniform_int_distribution<int>(1, 12)(rng);
  return Rational(std::uniform_int_distribution<int>(0, d - 1)(rng), d);
}

std::vector<QVec> random_cochain(int n, const IVec& moduli, std::mt19937& rng) {
  std::vector<QVec> s(n, QVec(moduli.size(), Rational(0)));
  for (int x = 1; x < n; ++x)
    for (std::size_t i = 0; i < moduli.size(); ++i) s[x][i] = random_value(moduli[i], rng);
  return s;
}

// Random cocycle on ℤ/a × ℤ/b: pulled-back carries, a bilinear term, and a random coboundary.
Cocycle2 random_cocycle(int a, int b, const IVec& moduli, std::mt19937& rng) {
  const FiniteGroup Q = FiniteGroup::product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(b));
  const int g = std::gcd(a, b);
  QVec ua(moduli.size()), ub(moduli.size()), uab(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    ua[i] = random_value(moduli[i], rng);
    ub[i] = random_value(moduli[i], rng);
    // The bilinear term needs g·u = 0 to be well defined.
    const std::int64_t m = moduli[i] ? std::gcd<std::int64_t>(moduli[i], g) : g;
    uab[i] = Rational(std::uniform_int_distribution<int>(0, int(m) - 1)(rng), m);
  }
  std::vector<QVec> t;
  for (int x = 0; x < a * b; ++x)
    for (int y = 0; y < a * b; ++y) {
      const int x1 = x / b, x2 = x % b, y1 = y / b, y2 = y % b;
      QVec v(moduli.size(), Rational(0));
      for (std::size_t i = 0; i < moduli.size(); ++i)
        v[i] = (x1 + y1 >= a ? ua[i] : Rational(0)) + (x2 + y2 >= b ? ub[i] : Rational(0)) + x1 * y2 * uab[i];
      t.push_back(v);
    }
  return add_coboundary(Cocycle2(Q, CoefficientModule{moduli, {}}, t), random_cochain(a * b, moduli, rng));
}

}  // namespace

TEST_CASE("cocycle validation") {
  std::vector<QVec> t(4, q1(0));
  t[3] = q1(Rational(1, 2));
  CHECK_NOTHROW(Cocycle2(FiniteGroup::cyclic(2), CoefficientModule{{2}, {}}, t));
  t[1] = q1(Rational(1, 2));
  CHECK_THROWS_AS(Cocycle2(FiniteGroup::cyclic(2), CoefficientModule{{2}, {}}, t), InvalidInput);  // not normalized
  std::vector<QVec> u(9, q1(0));
  u[4] = q1(Rational(1, 3));  // c(1,1) alone fails the cocycle identity on ℤ/3
  CHECK_THROWS_AS(Cocycle2(FiniteGroup::cyclic(3), CoefficientModule{{3}, {}}, u), InvalidInput);
  CHECK_THROWS_AS(carry(2, q1(Rational(1, 3)), {2}), InvalidInput);  // value outside ℤ/2
}

TEST_CASE("Heisenberg cocycle is not split; exhaustive search and the lattice solver agree") {
  const Cocycle2 h = heisenberg();
  CHECK_FALSE(splitting(h).has_value());
  CHECK_FALSE(splitting_exhaustive(h).has_value());
  // 2·class = 0.
  const auto s = splitting(baer_sum(h, h));
  REQUIRE(s.has_value());
  CHECK(is_splitting(baer_sum(h, h), *s));
  // The commutator pairing of lifts survives enlarging the coefficients to ℤ/4 or ℚ/ℤ.
  CHECK_FALSE(splitting(pushout(h, IMat::from_rows({{1}}), IVec{0})).has_value());
  CHECK_FALSE(splitting(pushout(h, IMat::from_rows({{1}}), IVec{4})).has_value());
  CHECK(pushout(h, IMat::from_rows({{2}}), IVec{4}).is_zero());
}

TEST_CASE("pullback and pushout") {
  const Cocycle2 h = heisenberg();
  const FiniteGroup C2 = FiniteGroup::cyclic(2);
  // First factor: h vanishes identically.
  CHECK(pullback(h, C2, {0, 2}).is_zero());
  // Diagonal: the ℤ/4 extension, nonsplit with ℤ/2 coefficients but split in ℚ/ℤ.
  const Cocycle2 diag = pullback(h, C2, {0, 3});
  CHECK_FALSE(splitting(diag).has_value());
  CHECK(splitting(pushout(diag, IMat::from_rows({{1}}), IVec{0})).has_value());
  // Identity and trivial maps.
  CHECK(pullback(h, V4, {0, 1, 2, 3}).table() == h.table());
  CHECK(pullback(h, V4, {0, 0, 0, 0}).is_zero());
  CHECK(pushout(h, IMat(1, 1), IVec{2}).is_zero());
  CHECK_THROWS_AS(pullback(h, C2, {0, 1, 2}), InvalidInput);
  // Functoriality on random instances.
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    const Cocycle2 c = random_cocycle(2, 4, {4, 2}, rng);
    const IMat chi = IMat::from_rows({{std::int64_t(rng() % 4), 2 * std::int64_t(rng() % 2)}});
    const FiniteGroup Z4 = FiniteGroup::cyclic(4);
    const std::vector<int> f{0, 1, 2, 3};  // ℤ/4 → ℤ/2 × ℤ/4 into the second factor
    CHECK(pushout(pullback(c, Z4, f), chi, IVec{4}).table() == pullback(pushout(c, chi, IVec{4}), Z4, f).table());
  }
}

TEST_CASE("Baer sums") {
  const Cocycle2 h = heisenberg();
  CHECK(baer_sum(h, negate(h)).is_zero());
  CHECK(baer_sum(h, Cocycle2::zero(V4, h.coefficients())).table() == h.table());
  CHECK_THROWS_AS(baer_sum(h, heisenberg({4})), MismatchedBase);

  // Additivity of classes on 50 random cocycles over abelian groups of order ≤ 16: representatives
  // changed by coboundaries sum to the class of the sum.
  std::mt19937 rng(11);
  const std::vector<std::pair<int, int>> shapes{{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 2}, {2, 4}, {1, 8}, {2, 6}, {4, 4}, {3, 3}};
  const std::vector<IVec> coefficient_choices{{2}, {4}, {0}, {2, 2}, {3}};
  for (int k = 0; k < 50; ++k) {
    const auto [a, b] = shapes[k % shapes.size()];
    const IVec& m = coefficient_choices[k % coefficient_choices.size()];
    CAPTURE(k);
    const Cocycle2 c1 = random_cocycle(a, b, m, rng);
    const Cocycle2 c2 = random_cocycle(a, b, m, rng);
    const Cocycle2 c1p = add_coboundary(c1, random_cochain(a * b, m, rng));
    const Cocycle2 c2p = add_coboundary(c2, random_cochain(a * b, m, rng));
    const Cocycle2 diff = baer_sum(baer_sum(c1p, c2p), negate(baer_sum(c1, c2)));
    const auto s = splitting(diff);
    REQUIRE(s.has_value());
    CHECK(is_splitting(diff, *s));
    // Three-term instance: the middle extension built as a Baer sum has the class of the sum.
    const Cocycle2 middle = add_coboundary(baer_sum(c1, c2), random_cochain(a * b, m, rng));
    CHECK(splitting(baer_sum(middle, negate(baer_sum(c1p, c2p)))).has_value());
  }
}

TEST_CASE("cyclic groups with divisible coefficients always split") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 16; ++n)
    for (int k = 0; k < 3; ++k) {
      const Cocycle2 c = random_cocycle(1, n, {0, 0}, rng);
      const auto s = splitting(c);
      REQUIRE(s.has_value());
      CHECK(is_splitting(c, *s));
    }
}

TEST_CASE("lattice solver agrees with exhaustive search") {
  std::mt19937 rng(5);
  const std::vector<std::pair<int, int>> shapes{{2, 2}, {1, 4}, {2, 4}, {1, 6}, {3, 3}};
  for (int k = 0; k < 25; ++k) {
    const auto [a, b] = shapes[k % shapes.size()];
    const IVec m = (a * b <= 6) ? IVec{4} : IVec{2};
    const Cocycle2 c = random_cocycle(a, b, m, rng);
    const auto s = splitting(c);
    CHECK(s.has_value() == splitting_exhaustive(c).has_value());
    if (s) CHECK(is_splitting(c, *s));
  }
  // Nonabelian sources: D4 and Q8 pulled back from (ℤ/2)² through their abelianizations.
  const FiniteGroup D4 = FiniteGroup::dihedral(4);
  std::vector<int> fd;
  for (int x = 0; x < 8; ++x) fd.push_back(2 * ((x % 4) % 2) + x / 4);
  const FiniteGroup Q8 = FiniteGroup::quaternion();
  std::vector<int> fq;
  for (int x = 0; x < 8; ++x) fq.push_back(std::vector<int>{0, 2, 1, 3}[x % 4]);
  for (const auto& [G, f] : {std::pair{D4, fd}, std::pair{Q8, fq}}) {
    const Cocycle2 c = pullback(heisenberg(), G, f);
    CHECK(splitting(c).has_value() == splitting_exhaustive(c).has_value());
  }
}

TEST_CASE("nontrivial coefficient action") {
  // ℤ/2 acting on ℤ/4 by −1; the carry cocycle u = 1/2 is a cocycle for the twisted identity.
  const FiniteGroup C2 = FiniteGroup::cyclic(2);
  const CoefficientModule A{{4}, {IMat::identity(1), IMat::from_rows({{-1}})}};
  std::vector<QVec> t(4, q1(0));
  t[3] = q1(Rational(1, 2));
  const Cocycle2 c(C2, A, t);
  CHECK(splitting(c).has_value() == splitting_exhaustive(c).has_value());
  const Cocycle2 d(C2, A, std::vector<QVec>(4, q1(0)));
  CHECK(splitting(d).has_value());
}

TEST_CASE("equivariant splitting") {
  // Γ = ℤ/2 swapping the factors of (ℤ/2)², trivially on A.
  const FiniteGroup G = FiniteGroup::cyclic(2);
  const std::vector<std::vector<int>> swap{{0, 1, 2, 3}, {0, 2, 1, 3}};
  const std::vector<IMat> on_a{IMat::identity(1), IMat::identity(1)};
  std::mt19937 rng(13);
  int equivariant_hits = 0;
  for (int k = 0; k < 20; ++k) {
    // c = ds with witness ε_γ = γ·s − s∘γ: s itself is an equivariant splitting.
    const auto s = random_cochain(4, {4}, rng);
    const Cocycle2 c = add_coboundary(Cocycle2::zero(V4, CoefficientModule{{4}, {}}), s);
    EquivariantStructure e{G, swap, on_a, {}};
    for (int g = 0; g < 2; ++g) {
      std::vector<QVec> eps;
      for (int x = 0; x < 4; ++x) eps.push_back(mod1(QVec{s[x][0] - s[swap[g][x]][0]}));
      e.witness.push_back(eps);
    }
    CHECK_NOTHROW(validate(c, e));
    const auto se = splitting(c, &e);
    REQUIRE(se.has_value());
    ++equivariant_hits;
    CHECK(is_splitting(c, *se));
    for (int g = 0; g < 2; ++g)
      for (int x = 0; x < 4; ++x) CHECK(is_zero_mod1(QVec{(*se)[x][0] - (*se)[swap[g][x]][0] - e.witness[g][x][0]}));
    CHECK(splitting(c).has_value());  // monotonicity
  }
  CHECK(equivariant_hits == 20);

  // Zero cocycle with a witness that is a nonzero homomorphism fixed by Γ acting trivially:
  // split, but not equivariantly.
  const FiniteGroup C2 = FiniteGroup::cyclic(2);
  const Cocycle2 z = Cocycle2::zero(C2, CoefficientModule{{2}, {}});
  EquivariantStructure e{G, {{0, 1}, {0, 1}}, on_a, {{q1(0), q1(0)}, {q1(0), q1(Rational(1, 2))}}};
  CHECK_NOTHROW(validate(z, e));
  CHECK_FALSE(splitting(z, &e).has_value());
  CHECK(splitting(z).has_value());

  // A broken witness is rejected.
  EquivariantStructure bad{G, swap, on_a, {std::vector<QVec>(4, q1(0)), std::vector<QVec>(4, q1(0))}};
  CHECK_THROWS_AS(validate(heisenberg({4}) , bad), InvalidInput);
}
