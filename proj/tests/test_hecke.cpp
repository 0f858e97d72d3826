#include "dzb/errors.hpp"
#include "dzb/hecke.hpp"

#include <doctest.h>

#include <random>

using namespace dzb;

namespace {

std::shared_ptr<const ExtendedAffineWeyl> group(const RootDatum& d) { return std::make_shared<const ExtendedAffineWeyl>(d); }

IVec small_vec(int n, std::mt19937& rng) {
  IVec v(n);
  for (auto& x : v) x = std::uniform_int_distribution<int>(-2, 2)(rng);
  return v;
}

// Smallest nonzero dominant translation, used as an alternative shift in the Bernstein decomposition.
IVec small_dominant(const CoxeterRealization& R, int n) {
  IVec best;
  int bl = 1 << 30;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) {
      IVec v(n, 0);
      v[0] = a;
      if (n > 1) v[1] = b;
      if (is_zero(v) || !R.is_dominant(v)) continue;
      const int l = R.group().length(R.group().translation(v));
      if (l < bl) bl = l, best = v;
    }
  return best;
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  const Laurent v = Laurent::v(1);
  CHECK(v * Laurent::v(-1) == Laurent(1));
  CHECK((v + Laurent(1)) * (v - Laurent(1)) == Laurent::v(2) - Laurent(1));
  CHECK(Laurent::zeta(4, 1) * Laurent::zeta(4, 1) == Laurent(-1));
  CHECK(Laurent::zeta(3, 1) + Laurent::zeta(3, 2) + Laurent(1) == Laurent());
  CHECK(Laurent::zeta(2, 1) == Laurent(-1));
  CHECK((Laurent::zeta(6, 1) * Laurent::v(3)).coefficient(3) == Cyclotomic::zeta(6, 1));
  CHECK(Laurent(5, 2).shifted(-2) == Laurent(5));
  CHECK((Laurent(2) - Laurent(2)).is_zero());
}

TEST_CASE("quadratic relation and reduced products") {
  auto E = group(simply_connected("A1"));
  const ExtAffineHeckeAlgebra H(CoxeterRealization::full(E), {3, 1});
  for (int s = 0; s < 2; ++s) {
    const Laurent qs = Laurent::v(2 * H.exponents()[s]);
    const HeckeElement Ts = H.generator(s);
    CHECK(H.mul(Ts, Ts) == add(scale(qs - Laurent(1), Ts), scale(qs, H.unit())));
    CHECK(H.mul(Ts, H.generator_inverse(s)) == H.unit());
  }
  // s₀ s₁ s₀ is reduced, so the product of generators is a single basis element.
  const auto& R = H.realization();
  const ExtAffineElement x = E->mul(R.generator(0), E->mul(R.generator(1), R.generator(0)));
  CHECK(H.mul(H.generator(0), H.mul(H.generator(1), H.generator(0))) == H.T(x));
  CHECK(R.length(x) == 3);
  CHECK(H.mul(H.T(x), H.basis_inverse(x)) == H.unit());
}

TEST_CASE("relations: quadratic, braid, and length-zero conjugation") {
  struct Case {
    const char* name;
    RootDatum datum;
    std::vector<int> exponents;
    int depth;
  };
  const std::vector<Case> cases{
      {"SL2 equal", simply_connected("A1"), {1, 1}, 6},
      {"SL2 unequal", simply_connected("A1"), {3, 1}, 6},
      {"PGL2", adjoint("A1"), {1, 1}, 6},
      {"GL2", gl_datum(2), {1, 1}, 5},
      {"PSp4", adjoint("C2"), {1, 3, 3}, 5},
      {"Sp4", simply_connected("C2"), {1, 2, 3}, 4},
      {"SL3", simply_connected("A2"), {1, 1, 1}, 4},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const ExtAffineHeckeAlgebra H(CoxeterRealization::full(group(c.datum)), c.exponents);
    const auto rep = H.check_relations(c.depth);
    CHECK(rep.ok);
    CHECK(rep.failure.empty());
    CHECK(rep.quadratic == H.realization().size());
    CHECK(rep.words > 0);
  }
  // PGL2 has a length-zero element swapping the two generators, so parameters must agree.
  CHECK_THROWS_AS(ExtAffineHeckeAlgebra(CoxeterRealization::full(group(adjoint("A1"))), {1, 2}), InvalidInput);
}

TEST_CASE("derived systems of a facet") {
  auto Esc = group(simply_connected("C2"));
  const CoxeterRealization R = CoxeterRealization::derived(Esc, {0});
  CHECK(R.size() == 2);
  CHECK(R.braid_order(0, 1) == 0);  // infinite dihedral
  const ExtAffineHeckeAlgebra H(R, {3, 1});
  CHECK(H.check_relations(6).ok);
  const BernsteinPair bp = bernstein_pair(3, 1);
  CHECK(bp.q == 2);
  CHECK(bp.q_star == 1);

  auto Ead = group(adjoint("C2"));
  const ExtAffineHeckeAlgebra Had(CoxeterRealization::derived(Ead, {0}), {2, 2});
  CHECK(Had.check_relations(6).ok);
  CHECK(Had.realization().omega_generators().size() == 1);
}

TEST_CASE("Bernstein elements") {
  std::mt19937 rng(23);
  const std::vector<std::pair<RootDatum, std::vector<int>>> cases{
      {simply_connected("A1"), {1, 1}}, {simply_connected("A1"), {3, 1}}, {adjoint("A1"), {1, 1}},
      {gl_datum(2), {1, 1}},            {adjoint("C2"), {1, 3, 3}}};
  for (const auto& [d, ex] : cases) {
    auto E = group(d);
    const ExtAffineHeckeAlgebra H(CoxeterRealization::full(E), ex);
    const int n = d.rank();
    CHECK(H.bernstein_theta(IVec(n, 0)) == H.unit());
    const IVec dom = small_dominant(H.realization(), n);
    REQUIRE(!dom.empty());
    // Dominant x: θ_x is the normalized T_x.
    CHECK(H.bernstein_theta(dom) == H.normalized(E->translation(dom)));
    for (int k = 0; k < 8; ++k) {
      const IVec x = small_vec(n, rng), y = small_vec(n, rng);
      const HeckeElement tx = H.bernstein_theta(x);
      CHECK(tx == H.bernstein_theta(x, add(H.default_shift(x), dom)));  // independent of the decomposition
      CHECK(H.mul(tx, H.bernstein_theta(y)) == H.bernstein_theta(add(x, y)));
      CHECK(H.mul(tx, H.bernstein_theta(neg(x))) == H.unit());
    }
  }
}

TEST_CASE("Bernstein-Lusztig relation on A1 with unequal parameters") {
  auto E = group(simply_connected("A1"));
  for (auto [ef, ea] : std::vector<std::pair<int, int>>{{1, 1}, {3, 1}, {1, 3}, {2, 0}}) {
    CAPTURE(ef);
    CAPTURE(ea);
    const ExtAffineHeckeAlgebra H(CoxeterRealization::full(E), {ef, ea});
    const HeckeElement Ts = H.generator(0);
    const HeckeElement lhs = sub(H.mul(H.bernstein_theta({1}), Ts), H.mul(Ts, H.bernstein_theta({-1})));
    const BernsteinPair bp = bernstein_pair(ef, ea);
    const int a = int(to_i64(bp.q * 2)), b = int(to_i64(bp.q_star * 2));
    const HeckeElement rhs = add(scale(Laurent::v(2 * ef) - Laurent(1), H.bernstein_theta({1})),
                                 scale(Laurent::v(a) - Laurent::v(b), H.unit()));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("center") {
  for (const auto& [d, ex] : std::vector<std::pair<RootDatum, std::vector<int>>>{
           {simply_connected("A1"), {1, 1}}, {simply_connected("A1"), {3, 1}}, {gl_datum(2), {1, 1}}, {adjoint("C2"), {1, 3, 3}}}) {
    const ExtAffineHeckeAlgebra H(CoxeterRealization::full(group(d)), ex);
    IVec x(d.rank(), 0);
    x[0] = 1;
    CHECK(H.verify_central(H.orbit_sum(x)).central);
    CHECK(H.verify_central(H.unit()).central);
    const auto w = H.verify_central(H.bernstein_theta(x));
    CHECK_FALSE(w.central);
    CHECK_FALSE(w.failing_generator.empty());
    CHECK_FALSE(H.verify_central(H.generator(0)).central);
  }
  // Second elementary symmetric function of the orbit {θ_{wx}} on SL2: θ_x θ_{−x} = 1 is central trivially,
  // and (Σ θ_{wx})² is central.
  const ExtAffineHeckeAlgebra H(CoxeterRealization::full(group(simply_connected("A1"))), {1, 1});
  const HeckeElement z = H.orbit_sum({1});
  CHECK(H.verify_central(H.mul(z, z)).central);
}
