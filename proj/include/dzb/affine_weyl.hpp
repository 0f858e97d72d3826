#pragma once

#include "dzb/rootdata.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dzb {

// The affine function x ↦ ⟨Dα, x⟩ + k on X_*⊗ℚ, with Dα given by its root index.
struct AffineRoot {
  int root = 0;
  std::int64_t k = 0;
  bool operator==(const AffineRoot&) const = default;
};

// t_λ·w acting on X_*⊗ℚ by x ↦ λ + w x.
struct ExtAffineElement {
  IVec lambda;
  int w = 0;
  bool operator==(const ExtAffineElement&) const = default;
};

struct ExtAffineHash {
  std::size_t operator()(const ExtAffineElement& x) const;
};

struct DerivedSystem;

class ExtendedAffineWeyl {
public:
  explicit ExtendedAffineWeyl(const RootDatum& datum, std::size_t bound = WeylGroup::kDefaultBound);

  const RootDatum& datum() const { return W_.datum(); }
  const WeylGroup& weyl() const { return W_; }

  // Δ_aff: the finite simple roots in index order, then one affine root 1 − θ_h per component.
  const std::vector<AffineRoot>& simple_affine_roots() const { return delta_; }
  int num_simple_affine() const { return int(delta_.size()); }
  // Coefficients n_a with Σ n_a a = 1 on each component.
  const std::vector<std::int64_t>& null_coefficients() const { return ncoef_; }
  int component_of(int a) const { return comp_[a]; }
  const QVec& generic_point() const { return p_; }

  Rational eval(const AffineRoot& a, const QVec& x) const;
  AffineRoot negate(const AffineRoot& a) const { return {datum().negative(a.root), -a.k}; }

  ExtAffineElement identity() const;
  ExtAffineElement translation(const IVec& lambda) const { return {lambda, W_.identity()}; }
  ExtAffineElement finite(int w) const;
  ExtAffineElement reflection(const AffineRoot& a) const;
  ExtAffineElement simple_reflection(int a) const { return reflection(delta_[a]); }
  ExtAffineElement mul(const ExtAffineElement& x, const ExtAffineElement& y) const;
  ExtAffineElement inv(const ExtAffineElement& x) const;
  ExtAffineElement power(const ExtAffineElement& x, int n) const;

  QVec act(const ExtAffineElement& x, const QVec& point) const;
  AffineRoot act(const ExtAffineElement& x, const AffineRoot& a) const;

  int length(const ExtAffineElement& x) const;
  bool is_left_descent(const ExtAffineElement& x, int a) const;
  // x = s_{a_1} ⋯ s_{a_k} ω with k = ℓ(x) and ℓ(ω) = 0.
  std::vector<int> reduced_word(const ExtAffineElement& x, ExtAffineElement* omega = nullptr) const;

  // X_* ∩ R^⊥, the translations acting trivially on the alcove structure.
  const std::vector<IVec>& central_lattice() const { return center_; }
  ExtAffineElement canonical_mod_center(const ExtAffineElement& x) const;
  bool in_coroot_lattice_mod_center(const IVec& lambda) const;
  // Length-zero elements modulo central translations; identity first.
  const std::vector<ExtAffineElement>& omega() const { return omega_; }
  // Permutation of Δ_aff induced by a length-zero element.
  std::vector<int> omega_permutation(const ExtAffineElement& w) const;
  std::optional<int> find_simple_affine(const AffineRoot& a) const;

  struct Reduction {
    QVec point;
    ExtAffineElement element;  // element · x = point
  };
  Reduction alcove_reduce(const QVec& x, std::size_t max_steps = 1000000) const;

  // Finite parabolic subgroup generated by the given simple affine reflections.
  std::vector<ExtAffineElement> parabolic(const std::vector<int>& gens, std::size_t bound = 100000) const;
  ExtAffineElement longest(const std::vector<int>& gens) const;
  std::optional<ExtAffineElement> r_element(int a, const std::vector<int>& J) const;
  bool stabilizes(const ExtAffineElement& x, const std::vector<int>& J) const;
  QVec facet_point(const std::vector<int>& J) const;
  DerivedSystem derived_affine_system(const std::vector<int>& J, bool relax = false) const;

private:
  void build_omega();
  WeylGroup W_;
  std::vector<AffineRoot> delta_;
  std::vector<std::int64_t> ncoef_;
  std::vector<int> comp_;
  QVec p_;
  std::vector<IVec> center_;
  LatticeQuotient coroot_mod_center_;
  IMat simple_root_rows_;
  std::vector<ExtAffineElement> omega_;
};

struct DerivedSystem {
  std::vector<int> J;
  std::vector<int> delta_f;                 // indices of Δ_{f,aff} in Δ_aff
  std::vector<ExtAffineElement> generators;  // v(α,J), aligned with delta_f
  std::vector<ExtAffineElement> omega_reps;  // Ω(J) = omega_reps · t(omega_lattice)
  std::vector<IVec> omega_lattice;
  QVec facet_point;

  bool is_left_descent(const ExtendedAffineWeyl& E, const ExtAffineElement& x, int gen) const;
  // x ∈ N_W(J) written as v_{i_1} ⋯ v_{i_k} ω with ω ∈ Ω(J); nullopt if x ∉ N_W(J) or the reduction fails.
  std::optional<std::pair<std::vector<int>, ExtAffineElement>> decompose(const ExtendedAffineWeyl& E,
                                                                          const ExtAffineElement& x,
                                                                          std::size_t max_steps = 10000) const;
  bool in_omega(const ExtendedAffineWeyl& E, const ExtAffineElement& x) const;
};

// Elements of Ω fixing the facet of type J pointwise, each adjusted by a central translation.
struct PointwiseStabilizerCheck {
  std::vector<ExtAffineElement> elements;
  bool centralizes = true;          // commute with every generator of N_W(J)
  bool meets_commutator_trivially = true;  // nontrivial elements lie outside W_aff ⊇ [N_W(J), N_W(J)]
};
PointwiseStabilizerCheck check_pointwise_stabilizer(const ExtendedAffineWeyl& E, const DerivedSystem& D);

}  // namespace dzb
