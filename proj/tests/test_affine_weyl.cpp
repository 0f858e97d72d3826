#include "dzb/affine_weyl.hpp"
#include "dzb/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace dzb;

namespace {

ExtAffineElement random_element(const ExtendedAffineWeyl& E, std::mt19937& rng, int box) {
  std::uniform_int_distribution<int> d(-box, box), w(0, E.weyl().size() - 1);
  IVec lambda(E.datum().rank());
  for (auto& x : lambda) x = d(rng);
  return {lambda, w(rng)};
}

}  // namespace

TEST_CASE("simple affine roots") {
  const ExtendedAffineWeyl A1(simply_connected("A1"));
  REQUIRE(A1.num_simple_affine() == 2);
  const auto& d1 = A1.simple_affine_roots();
  CHECK(d1[0] == AffineRoot{A1.datum().simple_index(0), 0});
  CHECK(A1.datum().root(d1[1].root) == scale(-1, A1.datum().root(A1.datum().simple_index(0))));
  CHECK(d1[1].k == 1);

  const ExtendedAffineWeyl A2(simply_connected("A2"));
  REQUIRE(A2.num_simple_affine() == 3);
  CHECK(A2.datum().root_coefficients(A2.datum().negative(A2.simple_affine_roots()[2].root)) == IVec{1, 1});

  const ExtendedAffineWeyl C2(simply_connected("C2"));
  REQUIRE(C2.num_simple_affine() == 3);
  CHECK(C2.datum().root_coefficients(C2.datum().negative(C2.simple_affine_roots()[2].root)) == IVec{2, 1});
  CHECK(C2.null_coefficients() == std::vector<std::int64_t>{2, 1, 1});
}

TEST_CASE("length-zero subgroup") {
  CHECK(ExtendedAffineWeyl(simply_connected("A1")).omega().size() == 1);
  CHECK(ExtendedAffineWeyl(adjoint("A1")).omega().size() == 2);
  CHECK(ExtendedAffineWeyl(adjoint("A2")).omega().size() == 3);
  CHECK(ExtendedAffineWeyl(adjoint("C2")).omega().size() == 2);
  CHECK(ExtendedAffineWeyl(adjoint("D4")).omega().size() == 4);
  for (const char* t : {"A2", "C2", "D4", "A3"}) {
    const ExtendedAffineWeyl E(adjoint(t));
    for (const auto& w : E.omega()) {
      CHECK(E.length(w) == 0);
      auto perm = E.omega_permutation(w);
      std::sort(perm.begin(), perm.end());
      for (int a = 0; a < E.num_simple_affine(); ++a) CHECK(perm[a] == a);
      for (const auto& u : E.omega())
        CHECK(E.canonical_mod_center(E.mul(w, u)) == E.canonical_mod_center(E.mul(u, w)));  // abelian
    }
  }
}

TEST_CASE("length: composition law, formula and subadditivity") {
  std::mt19937 rng(11);
  for (const char* t : {"A2", "C2", "G2"}) {
    const ExtendedAffineWeyl E(adjoint(t));
    for (int k = 0; k < 200; ++k) {
      const auto a = random_element(E, rng, 2), b = random_element(E, rng, 2);
      const auto ab = E.mul(a, b);
      CHECK(ab.lambda == add(a.lambda, E.weyl().act_y(a.w, b.lambda)));
      CHECK(ab.w == E.weyl().mul(a.w, b.w));
      CHECK(E.length(ab) <= E.length(a) + E.length(b));
      CHECK(E.length(E.inv(a)) == E.length(a));
      ExtAffineElement omega;
      const auto word = E.reduced_word(a, &omega);
      CHECK(int(word.size()) == E.length(a));
      CHECK(E.length(omega) == 0);
      ExtAffineElement x = E.identity();
      for (int s : word) x = E.mul(x, E.simple_reflection(s));
      CHECK(E.mul(x, omega) == a);
    }
  }
}

TEST_CASE("length equals the number of separating walls") {
  // Count affine roots a > 0 on the base alcove that are negative on x·p, using the generic point p.
  const ExtendedAffineWeyl E(adjoint("C2"));
  const auto& R = E.datum();
  std::mt19937 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto x = random_element(E, rng, 2);
    const QVec p = E.generic_point(), xp = E.act(x, p);
    int count = 0;
    for (int r = 0; r < R.num_positive(); ++r)
      for (std::int64_t j = -20; j <= 20; ++j) {
        const AffineRoot a{r, j};
        const Rational u = E.eval(a, p), v = E.eval(a, xp);
        if ((u > 0) != (v > 0)) ++count;
      }
    CHECK(count == E.length(x));
  }
}

TEST_CASE("R-elements") {
  const ExtendedAffineWeyl C2(simply_connected("C2"));
  const auto v = C2.r_element(1, {0});
  REQUIRE(v.has_value());
  CHECK(C2.mul(*v, *v) == C2.identity());
  CHECK(*v == C2.mul(C2.longest({0, 1}), C2.simple_reflection(0)));
  CHECK(C2.stabilizes(*v, {0}));

  const ExtendedAffineWeyl A2(simply_connected("A2"));
  CHECK_FALSE(A2.r_element(1, {0}).has_value());
  for (int a = 0; a < A2.num_simple_affine(); ++a) CHECK(*A2.r_element(a, {}) == A2.simple_reflection(a));
}

TEST_CASE("derived affine systems") {
  const ExtendedAffineWeyl C2(simply_connected("C2"));
  const DerivedSystem D = C2.derived_affine_system({0});
  CHECK(D.generators.size() == 2);
  for (const auto& g : D.generators) {
    CHECK(C2.mul(g, g) == C2.identity());
    CHECK(C2.stabilizes(g, {0}));
  }
  // v₁v₂ has infinite order: distinct powers up to length 8.
  const auto prod = C2.mul(D.generators[0], D.generators[1]);
  std::set<std::pair<int, IVec>> seen;
  ExtAffineElement p = C2.identity();
  for (int k = 0; k < 8; ++k) {
    CHECK(seen.insert({p.w, p.lambda}).second);
    p = C2.mul(p, prod);
  }

  const ExtendedAffineWeyl A2(simply_connected("A2"));
  const DerivedSystem D2 = A2.derived_affine_system({0});
  CHECK(D2.delta_f.empty());
  const DerivedSystem D0 = A2.derived_affine_system({});
  CHECK(D0.generators.size() == 3);
}

TEST_CASE("pointwise stabilizer of a facet") {
  for (const char* t : {"A2", "C2", "A3"}) {
    const ExtendedAffineWeyl E(adjoint(t));
    for (const std::vector<int>& J : std::vector<std::vector<int>>{{}, {0}, {1}}) {
      const auto D = E.derived_affine_system(J, true);
      const auto chk = check_pointwise_stabilizer(E, D);
      CHECK(chk.centralizes);
      CHECK(chk.meets_commutator_trivially);
    }
  }
}

TEST_CASE("alcove reduction") {
  const ExtendedAffineWeyl A1(adjoint("A1"));
  const auto r = A1.alcove_reduce(QVec{Rational(7, 3)});
  CHECK(r.point == QVec{Rational(1, 3)});
  CHECK(A1.act(r.element, QVec{Rational(7, 3)}) == r.point);
  const auto id = A1.alcove_reduce(QVec{Rational(1, 3)});
  CHECK(id.element == A1.identity());

  const ExtendedAffineWeyl A2(gl_datum(3));
  const QVec x{Rational(5, 3), Rational(-1, 3), Rational(-4, 3)};
  const auto red = A2.alcove_reduce(x);
  CHECK(A2.act(red.element, x) == red.point);
  for (const auto& a : A2.simple_affine_roots()) CHECK(A2.eval(a, red.point) >= 0);
  CHECK(A2.length(red.element) <= 4);
}
