#include "dzb/stabilizers.hpp"

#include "dzb/errors.hpp"

#include <algorithm>
#include <set>

namespace dzb {

std::vector<int> stab_theta(const WeylGroup& W, const TorusCharacter& theta, const IMat* frobenius) {
  std::vector<int> out;
  const QVec& t = theta.values();
  for (int w = 0; w < W.size(); ++w) {
    QVec y = W.act_x(w, t);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= t[i];
    if (!is_zero_mod1(y)) continue;
    if (frobenius && !(*frobenius * W.on_x(w) == W.on_x(w) * *frobenius)) continue;
    out.push_back(w);
  }
  return out;
}

SingularSubsystem singular_subsystem(const WeylGroup& W, const TorusCharacter& theta) {
  SingularSubsystem s;
  std::vector<int> refl;
  const RootDatum& d = W.datum();
  for (int j = 0; j < d.num_roots(); ++j)
    if (pairing(theta, d.coroot(j)) == 0) {
      s.roots.push_back(j);
      refl.push_back(W.reflection(j));
    }
  s.reflection_group = W.generate(refl);
  return s;
}

GammaDecomposition gamma_decomposition(const WeylGroup& W, const TorusCharacter& theta, const IMat* frobenius) {
  const RootDatum& d = W.datum();
  GammaDecomposition g;
  g.stabilizer = stab_theta(W, theta, frobenius);
  g.singular = singular_subsystem(W, theta);
  std::vector<int> pos;
  for (int j : g.singular.roots)
    if (d.is_positive(j)) pos.push_back(j);
  const std::set<int> Wt(g.stabilizer.begin(), g.stabilizer.end());
  for (int w : g.stabilizer) {
    bool keeps = true;
    for (int j : pos) keeps = keeps && d.is_positive(W.root_image(w, j));
    if (keeps) g.gamma.push_back(w);
  }
  // Unique factorization w = u·γ: the products cover W_θ and the counts multiply.
  std::vector<int> Wo = g.singular.reflection_group;
  if (frobenius) {
    std::vector<int> kept;
    for (int u : Wo)
      if (Wt.count(u)) kept.push_back(u);
    Wo = kept;
  }
  std::set<int> products;
  for (int u : Wo) {
    if (!Wt.count(u)) throw DecompositionFailure("reflection subgroup is not contained in the stabilizer");
    for (int c : g.gamma) products.insert(W.mul(u, c));
  }
  if (products != Wt || Wo.size() * g.gamma.size() != g.stabilizer.size())
    throw DecompositionFailure("stabilizer is not the product of its reflection part and Γ");
  const std::set<int> WoSet(Wo.begin(), Wo.end());
  for (int w : g.stabilizer)
    for (int u : Wo)
      if (!WoSet.count(W.mul(W.mul(w, u), W.inv(w))))
        throw DecompositionFailure("reflection part is not normal in the stabilizer");
  return g;
}

QVec alcove_lift(const RootDatum& datum, const TorusCharacter& theta) {
  // X* is the cocharacter lattice of the dual datum, whose affine roots are the coroots.
  const ExtendedAffineWeyl dual(datum.dual());
  return dual.alcove_reduce(theta.values()).point;
}

int alcove_conjugator(const WeylGroup& W, const TorusCharacter& theta, const QVec& lift) {
  const TorusCharacter target(lift);
  for (int w = 0; w < W.size(); ++w)
    if (theta.act(W, w) == target) return w;
  throw InvariantViolation("alcove lift is not congruent to a W-conjugate of θ");
}

std::vector<LiftElement> alcove_lift_stabilizer(const WeylGroup& W, const QVec& lift, const std::vector<int>& w_theta) {
  std::vector<LiftElement> out;
  for (int w = 0; w < W.size(); ++w) {
    const QVec y = W.act_x(w, lift);
    IVec x(lift.size());
    bool integral = true;
    for (std::size_t i = 0; i < lift.size() && integral; ++i) {
      const Rational c = lift[i] - y[i];
      integral = is_integer(c);
      if (integral) x[i] = to_i64(c);
    }
    if (integral) out.push_back({w, x});
  }
  std::vector<int> proj;
  for (const auto& e : out) proj.push_back(e.w);
  if (proj != w_theta) throw InvariantViolation("alcove-lift stabilizer does not project onto W_θ");
  return out;
}

ClassMap gamma_class_map(const WeylGroup& W, const QVec& lift, const std::vector<int>& gamma) {
  const RootDatum& d = W.datum();
  std::vector<IVec> gens;
  for (const auto& a : d.simple_roots()) gens.push_back(a);
  ClassMap m;
  m.quotient = gens.empty() ? LatticeQuotient(IMat(d.rank(), 0)) : LatticeQuotient(IMat::from_cols(gens, d.rank()));
  m.gamma = gamma;
  std::vector<IVec> raw;
  for (int g : gamma) {
    const QVec y = W.act_x(g, lift);
    IVec x(lift.size());
    for (std::size_t i = 0; i < lift.size(); ++i) {
      const Rational c = lift[i] - y[i];
      if (!is_integer(c)) throw InvariantViolation("Γ element does not fix the lift modulo X*");
      x[i] = to_i64(c);
    }
    raw.push_back(x);
    m.classes.push_back(m.quotient.class_of(x));
  }
  std::set<IVec> seen(m.classes.begin(), m.classes.end());
  if (seen.size() != m.classes.size()) throw NonInjective("Γ → X*/ℤR is not injective");
  auto index = [&](int w) {
    auto it = std::find(gamma.begin(), gamma.end(), w);
    if (it == gamma.end()) throw InvariantViolation("Γ is not closed under products");
    return int(it - gamma.begin());
  };
  for (std::size_t a = 0; a < gamma.size(); ++a)
    for (std::size_t b = 0; b < gamma.size(); ++b) {
      const IVec& ab = raw[index(W.mul(gamma[a], gamma[b]))];
      if (!m.quotient.contains(sub(ab, add(raw[a], raw[b])))) throw NonInjective("Γ → X*/ℤR is not a homomorphism");
    }
  return m;
}

std::optional<bool> levi_stabilizer_central(const WeylGroup& W, const TorusCharacter& theta,
                                            const std::vector<int>& levi) {
  const RootDatum& d = W.datum();
  // R_L: roots whose simple coefficients vanish outside `levi`.
  std::vector<char> in_levi(d.num_roots(), 0);
  std::vector<int> refl;
  for (int j = 0; j < d.num_roots(); ++j) {
    bool ok = true;
    for (int i = 0; i < d.semisimple_rank(); ++i)
      if (d.root_coefficients(j)[i] != 0 && std::find(levi.begin(), levi.end(), i) == levi.end()) ok = false;
    if (!ok) continue;
    in_levi[j] = 1;
    if (pairing(theta, d.coroot(j)) == 0) return std::nullopt;
    refl.push_back(W.reflection(j));
  }
  const std::vector<int> Wt = stab_theta(W, theta);
  const std::set<int> WL = [&] {
    auto g = W.generate(refl);
    return std::set<int>(g.begin(), g.end());
  }();
  std::vector<int> normalizer, levi_part;
  for (int w : Wt) {
    bool keeps = true;
    for (int j = 0; j < d.num_roots() && keeps; ++j)
      if (in_levi[j]) keeps = in_levi[W.root_image(w, j)];
    if (keeps) normalizer.push_back(w);
    if (WL.count(w)) levi_part.push_back(w);
  }
  for (int a : levi_part)
    for (int b : normalizer)
      if (W.mul(a, b) != W.mul(b, a)) return false;
  return true;
}

StabilizerReport stabilizer_report(const WeylGroup& W, const TorusCharacter& theta, const FrobeniusAction* F,
                                   bool frobenius_filter) {
  StabilizerReport r;
  r.decomposition = gamma_decomposition(W, theta, frobenius_filter && F ? &F->F0 : nullptr);
  r.lift = alcove_lift(W.datum(), theta);
  r.conjugator = alcove_conjugator(W, theta, r.lift);
  // The Frobenius filter does not survive conjugation, so the lift model uses the full stabilizer of θ′.
  r.lifted = gamma_decomposition(W, TorusCharacter(r.lift));
  r.lift_stabilizer = alcove_lift_stabilizer(W, r.lift, r.lifted.stabilizer);
  r.class_map = gamma_class_map(W, r.lift, r.lifted.gamma);
  if (F) r.nonsingular = is_nonsingular(theta, W.datum(), *F);
  return r;
}

}  // namespace dzb
