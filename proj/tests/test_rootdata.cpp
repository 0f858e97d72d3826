#include "dzb/cyclotomic.hpp"
#include "dzb/errors.hpp"
#include "dzb/rootdata.hpp"

#include <doctest.h>

#include <random>

using namespace dzb;

namespace {

RootDatum sl3() { return gl_datum(3).quotient({{1, 1, 1}}).datum; }

// θ given in ℤ³ coordinates, pushed to X*(SL3) = ℤ³/ℤ(1,1,1).
TorusCharacter sl3_character(const QVec& v) {
  const auto q = gl_datum(3).quotient({{1, 1, 1}});
  return TorusCharacter(q.project * v);
}

IVec sl3_coroot(const IVec& c) { return gl_datum(3).quotient({{1, 1, 1}}).coproject * c; }

}  // namespace

TEST_CASE("Weyl group orders") {
  CHECK(WeylGroup(simply_connected("A1")).size() == 2);
  CHECK(WeylGroup(simply_connected("A2")).size() == 6);
  CHECK(WeylGroup(simply_connected("C2")).size() == 8);
  CHECK(WeylGroup(simply_connected("G2")).size() == 12);
  CHECK(WeylGroup(simply_connected("F4")).size() == 1152);
  CHECK(WeylGroup(adjoint("E6")).size() == 51840);
}

TEST_CASE("Weyl group order matches the classification formula for types A to D up to rank 4") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "A1xA1", "A1xB2", "A2xA1"}) {
    CAPTURE(t);
    CHECK(WeylGroup(simply_connected(t)).size() == classification_weyl_order(t));
    CHECK(WeylGroup(adjoint(t)).size() == classification_weyl_order(t));
  }
}

TEST_CASE("Weyl group size guard") {
  CHECK_THROWS_AS(WeylGroup(simply_connected("E6"), 1000), GroupTooLarge);
}

TEST_CASE("reflections are involutions preserving the pairing") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (const char* t : {"A2", "C2", "G2", "B3"}) {
    const RootDatum R = simply_connected(t);
    for (int a = 0; a < R.num_roots(); ++a)
      for (int k = 0; k < 5; ++k) {
        IVec x(R.rank()), y(R.rank());
        for (auto& v : x) v = d(rng);
        for (auto& v : y) v = d(rng);
        CHECK(R.reflect(a, R.reflect(a, x)) == x);
        CHECK(dot(R.reflect(a, x), R.coreflect(a, y)) == dot(x, y));
      }
  }
}

TEST_CASE("root data invariants") {
  const RootDatum R = simply_connected("C2");
  for (int i = 0; i < R.semisimple_rank(); ++i) CHECK(R.cartan()(i, i) == 2);
  for (int a = 0; a < R.num_roots(); ++a)
    for (int b = 0; b < R.num_roots(); ++b) CHECK(R.find_root(R.reflect(a, R.root(b))).has_value());
  CHECK_THROWS_AS(RootDatum({{2, 0}, {-3, 2}}, {{1, 0}, {0, 1}}), InvalidInput);  // affine pairing
  CHECK_THROWS_AS(RootDatum({{1, 0}}, {{1, 0}}), InvalidInput);                   // ⟨α, α^∨⟩ = 2 fails
}

TEST_CASE("pairing examples") {
  const TorusCharacter theta = sl3_character({0, Rational(1, 3), Rational(2, 3)});
  CHECK(pairing(theta, sl3_coroot({1, -1, 0})) == Rational(2, 3));  // −1/3 mod 1
  CHECK(pairing(TorusCharacter(QVec{0, 0}), sl3_coroot({0, 1, -1})) == 0);
  CHECK(pairing(TorusCharacter(QVec{Rational(1, 2)}), IVec{2}) == 0);
}

TEST_CASE("norm pairing examples") {
  const RootDatum sl2 = simply_connected("A1");
  const FrobeniusAction F(IMat::identity(1), 3, sl2);
  const TorusCharacter legendre(QVec{Rational(1, 2)});
  CHECK(norm_pairing(legendre, sl2.coroot(0), F) == Rational(1, 2));
  CHECK(norm_pairing(TorusCharacter(QVec{0}), sl2.coroot(0), F) == 0);
  CHECK_THROWS_AS(norm_pairing(TorusCharacter(QVec{Rational(1, 3)}), sl2.coroot(0), F), InvalidCharacter);
  // d = 1 agrees with the plain pairing on a split torus.
  const FrobeniusAction F7(IMat::identity(1), 7, sl2);
  for (int k = 0; k < 6; ++k) {
    const TorusCharacter t(QVec{Rational(k, 6)});
    CHECK(norm_pairing(t, sl2.coroot(0), F7) == pairing(t, sl2.coroot(0)));
  }
}

TEST_CASE("norm pairing on a unitary torus with a Weyl-fixed character vanishes") {
  // SU3: F₀ = −w₀ on X*(SL3), q = 2; θ with s θ = θ for the relative root.
  const RootDatum R = sl3();
  const auto Q = gl_datum(3).quotient({{1, 1, 1}});
  const IMat w0 = IMat::from_rows({{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
  const FrobeniusAction F(Q.project * w0 * Q.lift, 2, R);
  const TorusCharacter theta = sl3_character({0, Rational(1, 3), 0});
  REQUIRE(theta.is_valid_for(F));
  CHECK(norm_pairing(theta, sl3_coroot({1, 0, -1}), F) == 0);
}

TEST_CASE("non-singularity") {
  const RootDatum R = sl3();
  const FrobeniusAction F(IMat::identity(2), 7, R);
  const TorusCharacter bary = sl3_character({0, Rational(1, 3), Rational(2, 3)});
  CHECK(is_nonsingular(bary, R, F));
  CHECK_FALSE(is_nonsingular(TorusCharacter(QVec{0, 0}), R, F));
  const RootDatum sl2 = simply_connected("A1");
  CHECK(is_nonsingular(TorusCharacter(QVec{Rational(1, 2)}), sl2, FrobeniusAction(IMat::identity(1), 3, sl2)));
  // W-invariance.
  const WeylGroup W(R);
  for (int w = 0; w < W.size(); ++w) {
    CHECK(is_nonsingular(bary.act(W, w), R, F));
    const TorusCharacter t = sl3_character({0, 0, Rational(1, 3)});
    CHECK(is_nonsingular(t.act(W, w), R, F) == is_nonsingular(t, R, F));
  }
}

TEST_CASE("Frobenius and character validation") {
  const RootDatum sl2 = simply_connected("A1");
  CHECK_THROWS_AS(FrobeniusAction(IMat::identity(1), 6, sl2), BadPrimePower);
  const FrobeniusAction F(IMat::identity(1), 5, sl2);
  CHECK(TorusCharacter(QVec{Rational(1, 4)}).is_valid_for(F));
  CHECK_FALSE(TorusCharacter(QVec{Rational(1, 3)}).is_valid_for(F));
  CHECK(TorusCharacter(IVec{5}, 4).values() == QVec{Rational(1, 4)});
}

TEST_CASE("Smith normal form") {
  const IMat M = IMat::from_rows({{2, 0}, {0, 3}});
  const SmithForm s = smith_normal_form(M);
  CHECK(s.d(0) == 1);
  CHECK(s.d(1) == 6);
  CHECK(s.U * M * s.V == s.D);
  const SmithForm id = smith_normal_form(IMat::identity(3));
  CHECK(id.D == IMat::identity(3));
  CHECK(smith_normal_form(IMat::from_rows({{0}})).D == IMat::from_rows({{0}}));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int k = 0; k < 30; ++k) {
    IMat A(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) A(i, j) = d(rng);
    const SmithForm f = smith_normal_form(A);
    CHECK(f.U * A * f.V == f.D);
    for (int i = 0; i + 1 < f.rank; ++i) CHECK(f.d(i + 1) % f.d(i) == 0);
  }
}

TEST_CASE("cyclotomic arithmetic") {
  const Cyclotomic z = Cyclotomic::zeta(3, 1);
  CHECK(z * z * z == Cyclotomic(1));
  CHECK(z + z * z == Cyclotomic(-1));
  CHECK(z.inverse() * z == Cyclotomic(1));
  const Cyclotomic i = Cyclotomic::zeta(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(12, 3) == i);  // promotion between orders
}
