#include "dzb/errors.hpp"
#include "dzb/stabilizers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace dzb;

namespace {

QVec qadd(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

struct SL3 {
  RootDatum::Quotient q = gl_datum(3).quotient({{1, 1, 1}});
  TorusCharacter character(const QVec& v) const { return TorusCharacter(q.project * v); }
};

// Element of W acting on ℤ³ as a permutation matrix (gl3 coordinates), as an element of W(SL3).
int sl3_element(const WeylGroup& W, const SL3& s, const std::vector<int>& perm) {
  IMat P(3, 3);
  for (int i = 0; i < 3; ++i) P(perm[i], i) = 1;
  return *W.find(s.q.project * P * s.q.lift);
}

bool is_cyclic_of_order(const WeylGroup& W, const std::vector<int>& G, int n) {
  if (int(G.size()) != n) return false;
  return std::any_of(G.begin(), G.end(), [&](int g) { return W.order_of(g) == n; });
}

}  // namespace

TEST_CASE("SL3 barycentric character") {
  const SL3 s;
  const WeylGroup W(s.q.datum);
  const TorusCharacter theta = s.character({0, Rational(1, 3), Rational(2, 3)});
  const auto st = stab_theta(W, theta);
  CHECK(st.size() == 3);
  const int c = sl3_element(W, s, {1, 2, 0});  // the 3-cycle
  CHECK(std::find(st.begin(), st.end(), c) != st.end());
  CHECK(is_cyclic_of_order(W, st, 3));

  const auto dec = gamma_decomposition(W, theta);
  CHECK(dec.singular.roots.empty());
  CHECK(dec.gamma == dec.stabilizer);

  const QVec lift = alcove_lift(s.q.datum, theta);
  const auto lifts = alcove_lift_stabilizer(W, lift, st);
  CHECK(lifts.size() == 3);
  std::set<int> proj;
  for (const auto& e : lifts) {
    proj.insert(e.w);
    CHECK(qadd(to_q(e.x), W.act_x(e.w, lift)) == lift);
  }
  CHECK(proj == std::set<int>(st.begin(), st.end()));

  const auto cm = gamma_class_map(W, lift, dec.gamma);
  CHECK(cm.quotient.torsion_order() == 3);
  std::set<IVec> classes(cm.classes.begin(), cm.classes.end());
  CHECK(classes.size() == 3);  // bijective onto X*/ℤR ≅ ℤ/3
}

TEST_CASE("trivial character") {
  const WeylGroup W(simply_connected("B3"));
  const TorusCharacter zero(QVec(3, Rational(0)));
  CHECK(int(stab_theta(W, zero).size()) == W.size());
  const auto dec = gamma_decomposition(W, zero);
  CHECK(int(dec.singular.roots.size()) == W.datum().num_roots());
  CHECK(dec.gamma == std::vector<int>{W.identity()});
  const auto lifts = alcove_lift_stabilizer(W, alcove_lift(W.datum(), zero), dec.stabilizer);
  CHECK(int(lifts.size()) == W.size());
  for (const auto& e : lifts) CHECK(is_zero(e.x));
  CHECK(gamma_class_map(W, QVec(3, Rational(0)), dec.gamma).classes.size() == 1);
}

TEST_CASE("C2 singular subsystem") {
  const RootDatum sp4({{1, -1}, {0, 2}}, {{1, -1}, {0, 1}});
  const WeylGroup W(sp4);
  const auto ss = singular_subsystem(W, TorusCharacter(QVec{Rational(1, 2), 0}));
  REQUIRE(ss.roots.size() == 2);
  std::set<IVec> roots;
  for (int r : ss.roots) roots.insert(sp4.root(r));
  CHECK(roots == std::set<IVec>{{0, 2}, {0, -2}});
  CHECK(ss.reflection_group.size() == 2);
}

TEST_CASE("nonsingular characters have no reflection part") {
  const SL3 s;
  const WeylGroup W(s.q.datum);
  const TorusCharacter theta = s.character({0, Rational(1, 7), Rational(3, 7)});
  const auto dec = gamma_decomposition(W, theta);
  CHECK(dec.singular.roots.empty());
  CHECK(dec.singular.reflection_group.size() == 1);
  CHECK(dec.gamma == dec.stabilizer);
}

TEST_CASE("A1 alcove midpoint") {
  const RootDatum pgl2 = adjoint("A1");
  const WeylGroup W(pgl2);
  const QVec mid{Rational(1, 2)};
  const auto lifts = alcove_lift_stabilizer(W, mid, stab_theta(W, TorusCharacter(mid)));
  CHECK(lifts.size() == 2);
}

TEST_CASE("D4 reflection-free stabilizer of order two") {
  // Spin(8) in fundamental-weight coordinates; θ = (0, 1/5, 2/5, 1/2) in ε-coordinates.
  const RootDatum D4 = simply_connected("D4");
  const WeylGroup W(D4);
  const TorusCharacter theta(QVec{Rational(4, 5), Rational(4, 5), Rational(9, 10), Rational(9, 10)});
  const auto dec = gamma_decomposition(W, theta);
  CHECK(dec.stabilizer.size() == 2);
  CHECK(dec.singular.roots.empty());
  CHECK(dec.gamma.size() == 2);
  const StabilizerReport rep = stabilizer_report(W, theta);
  const auto& cm = rep.class_map;
  CHECK(cm.quotient.moduli() == IVec{1, 1, 2, 2});  // X*/ℤR ≅ (ℤ/2)² for Spin(8)
  CHECK(cm.quotient.torsion_order() == 4);
  CHECK(std::set<IVec>(cm.classes.begin(), cm.classes.end()).size() == 2);
}

TEST_CASE("E6 barycentre has a cyclic stabilizer of order three") {
  const RootDatum E6 = simply_connected("E6");
  const WeylGroup W(E6);
  // (1/7) Σ ϖ_i / n_i with highest-root coefficients n = (1,2,2,3,2,1).
  const TorusCharacter theta(QVec{Rational(1, 7), Rational(1, 14), Rational(1, 14), Rational(1, 21),
                                  Rational(1, 14), Rational(1, 7)});
  const auto dec = gamma_decomposition(W, theta);
  CHECK(is_cyclic_of_order(W, dec.stabilizer, 3));
  CHECK(dec.singular.roots.empty());
  CHECK(dec.gamma.size() == 3);
}

TEST_CASE("random characters: semidirect decomposition, lift isomorphism, injective class map, equivariance") {
  std::mt19937 rng(2024);
  const std::vector<RootDatum> data{simply_connected("A2"), adjoint("A2"), simply_connected("C2"), adjoint("C2"),
                                    simply_connected("G2"), simply_connected("A3"), adjoint("B3"), gl_datum(3)};
  for (int k = 0; k < 24; ++k) {
    const RootDatum& R = data[k % data.size()];
    const WeylGroup W(R);
    std::uniform_int_distribution<int> den(1, 12);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(0, d - 1);
    QVec v(R.rank());
    for (auto& x : v) x = Rational(num(rng), d);
    const TorusCharacter theta(v);
    const auto dec = gamma_decomposition(W, theta);
    CHECK(dec.stabilizer.size() == dec.singular.reflection_group.size() * dec.gamma.size());
    const StabilizerReport rep = stabilizer_report(W, theta);
    CHECK(theta.act(W, rep.conjugator) == TorusCharacter(rep.lift));
    CHECK(rep.lift_stabilizer.size() == dec.stabilizer.size());
    CHECK(rep.class_map.gamma.size() == dec.gamma.size());
    std::set<IVec> images(rep.class_map.classes.begin(), rep.class_map.classes.end());
    CHECK(images.size() == dec.gamma.size());
    std::uniform_int_distribution<int> pick(0, W.size() - 1);
    const int w = pick(rng);
    std::vector<int> conj;
    for (int u : dec.stabilizer) conj.push_back(W.mul(W.mul(w, u), W.inv(w)));
    std::sort(conj.begin(), conj.end());
    CHECK(stab_theta(W, theta.act(W, w)) == conj);
  }
}

TEST_CASE("Frobenius filter and the Levi centrality check") {
  const SL3 s;
  const WeylGroup W(s.q.datum);
  const TorusCharacter theta = s.character({0, Rational(1, 3), Rational(2, 3)});
  const IMat id = IMat::identity(2);
  CHECK(stab_theta(W, theta, &id).size() == 3);
  const IMat w0 = s.q.project * IMat::from_rows({{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}}) * s.q.lift;
  for (int w : stab_theta(W, theta, &w0)) CHECK(W.on_x(w) * w0 == w0 * W.on_x(w));

  const RootDatum A3 = simply_connected("A3");
  const WeylGroup W3(A3);
  const auto central = levi_stabilizer_central(W3, TorusCharacter(QVec{Rational(1, 3), 0, 0}), {0});
  REQUIRE(central.has_value());
  CHECK(*central);
  CHECK_FALSE(levi_stabilizer_central(W3, TorusCharacter(QVec{0, 0, 0}), {0}).has_value());
}
