#include "dzb/errors.hpp"
#include "dzb/graded.hpp"

#include <doctest.h>

using namespace dzb;

namespace {

std::vector<int> all_roots(const RootDatum& d) {
  std::vector<int> v;
  for (int r = 0; r < d.num_roots(); ++r) v.push_back(r);
  return v;
}

// W-invariant parameters: value[i] on the W-orbit of the i-th simple root.
std::map<int, Rational> orbit_parameters(const RootDatum& d, const std::vector<Rational>& value) {
  const WeylGroup W(d);
  std::map<int, Rational> k;
  for (int i = 0; i < d.semisimple_rank(); ++i)
    for (int w = 0; w < W.size(); ++w) {
      const int a = W.root_image(w, d.simple_index(i));
      if (!k.count(a)) k[a] = value[i];
    }
  return k;
}

}  // namespace

TEST_CASE("lambda exponents") {
  const std::int64_t q = 5;
  CHECK(lambda_exponents(q, q, q).lambda == 2);
  CHECK(lambda_exponents(q, q, q).lambda_star == 0);
  CHECK(lambda_exponents(q * q * q, q, q).lambda == 4);
  CHECK(lambda_exponents(q * q * q, q, q).lambda_star == 2);
  CHECK(lambda_exponents(1, 1, q).lambda == 0);
  CHECK(lambda_exponents(1, 1, q).lambda_star == 0);
  CHECK(lambda_exponents(Rational(1, q), 1, q).lambda == -1);
  CHECK_THROWS_AS(lambda_exponents(6, 1, q), NotAPower);
}

TEST_CASE("graded parameters from q-parameters") {
  const std::int64_t q = 3;
  CHECK(k_parameter(q, q, 1, q) == 2);  // log q_F = 2r
  CHECK(k_parameter(q, 1, -1, q) == 0);
  CHECK(k_parameter(q * q * q, q, -1, q) == 2);
  CHECK(k_parameter(q * q * q, q, 1, q) == 6);
  CHECK_THROWS_AS(k_parameter(q, q, 0, q), InvalidInput);
  // Both formulas agree on the full grid of powers and signs.
  const std::vector<Rational> powers{1, q, q * q, q * q * q};
  int cases = 0;
  for (const auto& a : powers)
    for (const auto& b : powers)
      for (int sign : {1, -1}) {
        const LambdaExponents le = lambda_exponents(a, b, q);
        CHECK(k_parameter(a, b, sign, q) == le.lambda + sign * le.lambda_star);
        ++cases;
      }
  CHECK(cases == 32);
}

TEST_CASE("one-step cross relation") {
  const RootDatum d = simply_connected("A2");
  const Rational kval(3, 2);
  const GradedHeckeAlgebra H(d, all_roots(d), orbit_parameters(d, {kval, kval}), {});
  for (int i = 0; i < 2; ++i) {
    const int a = d.simple_index(i);
    const int s = H.weyl().simple_reflection(i);
    const GradedHeckeAlgebra::Element lhs = H.mul(H.N(s), H.P(poly_linear(d.root(a))));
    const GradedHeckeAlgebra::Element rhs{{s, poly_linear(neg(d.root(a)))},
                                          {H.weyl().identity(), poly_scale(Cyclotomic(2 * kval), poly_r(H.n()))}};
    CHECK(lhs == rhs);
    // Constants commute and N_s² = 1.
    CHECK(H.mul(H.N(s), H.P(poly_const(7, H.n()))) == H.mul(H.P(poly_const(7, H.n())), H.N(s)));
    CHECK(H.mul(H.N(s), H.N(s)) == H.N(H.weyl().identity()));
  }
}

TEST_CASE("divided differences") {
  const RootDatum d = simply_connected("A2");
  const GradedHeckeAlgebra H(d, all_roots(d), orbit_parameters(d, {1, 1}), {});
  Poly f = poly_mul(poly_mul(poly_linear({1, 1}), poly_linear({2, -1})), poly_linear({0, 1}));
  f = poly_add(f, poly_mul(poly_r(2), poly_linear({1, 0})));
  for (int r = 0; r < d.num_roots(); ++r) {
    const Poly lhs = poly_mul(poly_linear(d.root(r)), H.delta(r, f));
    const Poly rhs = poly_add(f, poly_scale(-1, H.act(H.weyl().reflection(r), f)));
    CHECK(lhs == rhs);
    CHECK(degree(H.delta(r, f)) == degree(f) - 1);
  }
}

TEST_CASE("cross relation and symmetric center, rank at most two") {
  struct Case {
    const char* name;
    RootDatum datum;
    std::vector<Rational> k;
  };
  const std::vector<Case> cases{
      {"A1", simply_connected("A1"), {1}},
      {"A1xA1", simply_connected("A1xA1"), {1, 0}},
      {"A2", simply_connected("A2"), {2, 2}},
      {"C2", simply_connected("C2"), {1, 3}},
      {"G2", simply_connected("G2"), {Rational(1, 2), 5}},
      {"GL2", gl_datum(2), {1}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const GradedHeckeAlgebra H(c.datum, all_roots(c.datum), orbit_parameters(c.datum, c.k), {});
    CHECK(H.check_cross_relation(5));
    CHECK(H.check_symmetric_central(4));
  }
}

TEST_CASE("operator representation is an algebra homomorphism") {
  const RootDatum d = simply_connected("C2");
  const GradedHeckeAlgebra H(d, all_roots(d), orbit_parameters(d, {1, 2}), {});
  const int s0 = H.weyl().simple_reflection(0), s1 = H.weyl().simple_reflection(1);
  const auto x = H.mul(H.N(s0), H.P(poly_linear({1, 0})));
  const auto y = H.mul(H.N(s1), H.P(poly_add(poly_linear({0, 1}), poly_r(2))));
  const auto z = H.mul(H.P(poly_linear({1, 1})), H.N(H.weyl().mul(s1, s0)));
  const std::vector<Poly> tests{poly_const(1, 2), poly_linear({1, 0}), poly_mul(poly_linear({1, 1}), poly_linear({2, -1}))};
  for (const auto& f : tests) {
    CHECK(H.represent(H.mul(x, y), f) == H.represent(x, H.represent(y, f)));
    CHECK(H.represent(H.mul(y, z), f) == H.represent(y, H.represent(z, f)));
    CHECK(H.represent(H.mul(H.mul(x, y), z), f) == H.represent(H.mul(x, H.mul(y, z)), f));
  }
  // Braid relation of the N_s in the operator picture.
  for (const auto& f : tests) {
    const Poly a = H.represent(H.N(s0), H.represent(H.N(s1), H.represent(H.N(s0), H.represent(H.N(s1), f))));
    const Poly b = H.represent(H.N(s1), H.represent(H.N(s0), H.represent(H.N(s1), H.represent(H.N(s0), f))));
    CHECK(a == b);
  }
}

TEST_CASE("decomposition into an equal-parameter core and a twisted part") {
  {
    // One zero parameter orbit on A1×A1: R′ of rank one, Γ′ of order two.
    const RootDatum d = simply_connected("A1xA1");
    const GradedHeckeAlgebra H(d, all_roots(d), orbit_parameters(d, {1, 0}), {});
    const auto dec = H.decompose();
    CHECK(dec.core_roots.size() == 2);
    CHECK(dec.core_simple.size() == 1);
    CHECK(dec.gamma_prime.size() == 2);
    CHECK(dec.semidirect);
    CHECK(dec.stabilizes);
    const auto H2 = H.rebuild(dec);
    CHECK(H2.group().size() == H.group().size());
    const auto dec2 = H2.decompose();
    CHECK(dec2.core_roots == dec.core_roots);
    CHECK(dec2.gamma_prime == dec.gamma_prime);
    CHECK(H2.check_cross_relation(3));
  }
  {
    // All parameters zero: everything is twisted.
    const RootDatum d = simply_connected("A2");
    const GradedHeckeAlgebra H(d, all_roots(d), orbit_parameters(d, {0, 0}), {});
    const auto dec = H.decompose();
    CHECK(dec.core_roots.empty());
    CHECK(dec.gamma_prime.size() == 6);
    CHECK(dec.semidirect);
  }
  {
    // All nonzero without Γ: a pure graded Hecke algebra.
    const RootDatum d = simply_connected("C2");
    const GradedHeckeAlgebra H(d, all_roots(d), orbit_parameters(d, {1, 3}), {});
    const auto dec = H.decompose();
    CHECK(dec.core_roots.size() == 8);
    CHECK(dec.gamma_prime.size() == 1);
  }
  {
    // C2 with the long orbit at zero: R′ is the short subsystem of type A1×A1, and Γ′ has order two.
    const RootDatum d = simply_connected("C2");
    const GradedHeckeAlgebra H(d, all_roots(d), orbit_parameters(d, {1, 0}), {});
    const auto dec = H.decompose();
    CHECK(dec.core_roots.size() == 4);
    CHECK(dec.gamma_prime.size() == 2);
    CHECK(dec.semidirect);
    CHECK(dec.stabilizes);
    CHECK(H.rebuild(dec).check_cross_relation(3));
  }
}

TEST_CASE("twisted group part with a nontrivial cocycle") {
  // Γ = W(A1×A1) ≅ (ℤ/2)² acting on an empty root system with ♮(x, y) = x₁y₂/2.
  const RootDatum d = simply_connected("A1xA1");
  const WeylGroup W2(d);
  const int s0 = W2.simple_reflection(0), s1 = W2.simple_reflection(1);
  const std::vector<int> gamma{W2.identity(), s0, s1, W2.mul(s0, s1)};
  const int bits[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<Rational> nat;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) nat.push_back(Rational(bits[x][0] * bits[y][1], 2));
  const GradedHeckeAlgebra H(d, {}, {}, gamma, nat);
  const auto ab = H.mul(H.N(s0), H.N(s1));
  const auto ba = H.mul(H.N(s1), H.N(s0));
  REQUIRE(ab.size() == 1);
  REQUIRE(ba.size() == 1);
  CHECK(ab.begin()->first == ba.begin()->first);
  CHECK(poly_scale(-1, ab.begin()->second) == ba.begin()->second);
  // Associativity of the twisted multiplication.
  for (int a : gamma)
    for (int b : gamma)
      for (int c : gamma) CHECK(H.mul(H.mul(H.N(a), H.N(b)), H.N(c)) == H.mul(H.N(a), H.mul(H.N(b), H.N(c))));
  // A table failing the cocycle identity is rejected.
  std::vector<Rational> broken(16, Rational(0));
  broken[5] = Rational(1, 2);  // ♮(s0, s0) alone
  broken[6] = Rational(1, 3);
  CHECK_THROWS_AS(GradedHeckeAlgebra(d, {}, {}, gamma, broken), InvalidInput);
}

TEST_CASE("input validation") {
  const RootDatum d = simply_connected("C2");
  std::map<int, Rational> k = orbit_parameters(d, {1, 3});
  k[d.simple_index(0)] = 2;  // no longer W-invariant
  CHECK_THROWS_AS(GradedHeckeAlgebra(d, all_roots(d), k, {}), InvalidInput);
  std::map<int, Rational> partial;
  partial[0] = 1;
  CHECK_THROWS_AS(GradedHeckeAlgebra(d, all_roots(d), partial, {}), InvalidInput);
}
