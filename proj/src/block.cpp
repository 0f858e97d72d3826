#include "dzb/errors.hpp"
#include "dzb/hecke.hpp"

#include <algorithm>
#include <set>

namespace dzb {

namespace {

// Closure of the reflections y ↦ y − ⟨α, y⟩α^∨ on X_*, computed from the coroots alone.
std::int64_t dual_weyl_order(const RootDatum& d, const std::vector<int>& roots) {
  const int n = d.rank();
  std::vector<IMat> gens;
  for (int r : roots) {
    IMat M = IMat::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) -= d.coroot(r)[i] * d.root(r)[j];
    gens.push_back(M);
  }
  std::set<std::vector<std::int64_t>> seen{IMat::identity(n).data()};
  std::vector<IMat> frontier{IMat::identity(n)};
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        IMat p = g * m;
        if (seen.insert(p.data()).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return std::int64_t(seen.size());
}

}  // namespace

BlockAlgebra build_block_algebra(const RootDatum& datum, const FrobeniusAction& F, const TorusCharacter& theta,
                                 const std::vector<int>& J, std::size_t oracle_bound) {
  if (!J.empty())
    throw UnrecognizedRankOneKind("q-parameters for a nonempty facet J must be supplied by the caller");
  if (!F.F0.is_identity())
    throw UnrecognizedRankOneKind("q-parameters for a non-split Frobenius must be supplied by the caller");
  theta.validate(F);
  BlockAlgebra B;
  B.E = std::make_shared<const ExtendedAffineWeyl>(datum);
  const WeylGroup& W = B.E->weyl();
  const RootDatum& d = B.E->datum();
  const std::int64_t q = F.q;
  B.stabilizer = stab_theta(W, theta);
  const std::set<int> stab(B.stabilizer.begin(), B.stabilizer.end());

  for (int a = 0; a < d.num_positive(); ++a) {
    if (!stab.count(W.reflection(a))) continue;
    const IVec& c = d.coroot(a);
    const bool divisible = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x % 2 == 0; });
    BlockRoot br{a, c, divisible ? GroupKind::PGL2 : GroupKind::SL2, Rational(1), norm_pairing(theta, c, F)};
    // Torus of the rank-one group: x ↦ α^∨(x) for SL2, x ↦ (α^∨/2)(x) for PGL2.
    Rational t = pairing(theta, c);
    if (divisible) {
      IVec half(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) half[i] = c[i] / 2;
      t = pairing(theta, half);
    }
    const FiniteGroupOfLieType G(br.kind, q, oracle_bound);
    const auto alg = hecke_fin(G, {t});
    if (alg.dim() == 2) br.q = q_parameter(alg, q).q;
    B.reflecting.push_back(br);
    if (br.q > 1) {
      B.r_sigma.push_back(a);
      B.r_sigma.push_back(d.negative(a));
      B.dual_roots.push_back(c);
      B.dual_roots.push_back(neg(c));
    }
  }
  std::sort(B.r_sigma.begin(), B.r_sigma.end());

  std::vector<int> refl;
  for (int r : B.r_sigma)
    if (d.is_positive(r)) refl.push_back(W.reflection(r));
  B.weyl_order_sigma = std::int64_t(W.generate(refl).size());
  std::vector<int> pos_sigma;
  for (int r : B.r_sigma)
    if (d.is_positive(r)) pos_sigma.push_back(r);
  B.weyl_order_dual = dual_weyl_order(d, pos_sigma);

  // Γ = elements of W_θ preserving R_σ⁺.
  for (int w : B.stabilizer) {
    bool keeps = true;
    for (int r : pos_sigma) keeps = keeps && d.is_positive(W.root_image(w, r));
    if (keeps) B.gamma.push_back(w);
  }
  ensure(std::int64_t(B.gamma.size()) * B.weyl_order_sigma == std::int64_t(B.stabilizer.size()),
         "W_θ ≠ W(R_σ) ⋊ Γ");

  // Parameter matching α ↦ α^∨ between R_σ and R_{s∨}.
  bool preserving = B.weyl_order_sigma == B.weyl_order_dual;
  std::set<IVec> dual_set(B.dual_roots.begin(), B.dual_roots.end());
  preserving = preserving && dual_set.size() == B.dual_roots.size();
  for (const auto& br : B.reflecting) {
    if (br.q == 1) continue;
    const auto back = d.find_coroot(br.coroot);
    preserving = preserving && back && *back == br.root;
  }
  B.parameter_preserving = preserving;

  auto R = CoxeterRealization::subsystem(B.E, B.r_sigma, B.stabilizer);
  std::vector<int> exps;
  for (const auto& wall : R.walls()) {
    const int r = d.is_positive(wall.root) ? wall.root : d.negative(wall.root);
    const auto it = std::find_if(B.reflecting.begin(), B.reflecting.end(), [&](const BlockRoot& b) { return b.root == r; });
    ensure(it != B.reflecting.end(), "wall of R_σ without a parameter");
    exps.push_back(exact_log(it->q, q));
  }
  B.omega_generators = R.omega_generators();
  B.hecke.emplace(std::move(R), exps);

  // Shape of Ω(J,σ): translation rank and the order of its image in W.
  std::vector<IVec> cor;
  for (int r : pos_sigma) cor.push_back(d.coroot(r));
  B.omega_translation_rank = d.rank() - (cor.empty() ? 0 : rank(to_q(IMat::from_rows(cor, d.rank()))));
  std::vector<int> finite_parts;
  for (const auto& w : B.omega_generators) finite_parts.push_back(w.w);
  B.omega_finite_order = int(W.generate(finite_parts).size());
  return B;
}

}  // namespace dzb
