#pragma once

#include "dzb/affine_weyl.hpp"
#include "dzb/rootdata.hpp"

#include <optional>
#include <vector>

namespace dzb {

// {w ∈ W : wθ ≡ θ}; with `frobenius`, only elements commuting with F₀ on X*.
std::vector<int> stab_theta(const WeylGroup& W, const TorusCharacter& theta, const IMat* frobenius = nullptr);

struct SingularSubsystem {
  std::vector<int> roots;          // R_θ, root indices
  std::vector<int> reflection_group;  // W_θ° = W(R_θ)
};
SingularSubsystem singular_subsystem(const WeylGroup& W, const TorusCharacter& theta);

struct GammaDecomposition {
  std::vector<int> stabilizer;  // W_θ
  SingularSubsystem singular;
  std::vector<int> gamma;  // {w ∈ W_θ : w(R_θ⁺) = R_θ⁺}
};
// Verifies W_θ = W_θ° ⋊ Γ; throws DecompositionFailure otherwise.
GammaDecomposition gamma_decomposition(const WeylGroup& W, const TorusCharacter& theta,
                                       const IMat* frobenius = nullptr);

// θ̃ ∈ X*⊗ℚ in the closed fundamental alcove of the coroot system. It lifts a W-conjugate of θ,
// not θ itself in general, since alcove reduction applies affine reflections.
QVec alcove_lift(const RootDatum& datum, const TorusCharacter& theta);
// Some w with w·θ ≡ lift mod X*.
int alcove_conjugator(const WeylGroup& W, const TorusCharacter& theta, const QVec& lift);

struct LiftElement {
  int w;
  IVec x;  // w θ̃ + x = θ̃
};
// Stabilizer of θ̃ in W ⋉ X*; the projection to W is checked to be a bijection onto W_θ.
std::vector<LiftElement> alcove_lift_stabilizer(const WeylGroup& W, const QVec& lift, const std::vector<int>& w_theta);

struct ClassMap {
  LatticeQuotient quotient;  // X*/ℤR
  std::vector<int> gamma;
  std::vector<IVec> classes;  // aligned with gamma
};
// γ ↦ class of θ̃ − γθ̃ in X*/ℤR; throws NonInjective unless an injective homomorphism.
ClassMap gamma_class_map(const WeylGroup& W, const QVec& lift, const std::vector<int>& gamma);

// For θ nonsingular on the Levi subsystem spanned by `levi` (simple indices), checks that
// (W_L)_θ commutes with every element of N_W(R_L)_θ. nullopt when θ is singular on R_L.
std::optional<bool> levi_stabilizer_central(const WeylGroup& W, const TorusCharacter& theta,
                                            const std::vector<int>& levi);

struct StabilizerReport {
  GammaDecomposition decomposition;
  QVec lift;
  int conjugator = 0;               // w with θ′ = wθ ≡ θ̃
  GammaDecomposition lifted;        // decomposition for θ′; lift stabilizer and class map refer to it
  std::vector<LiftElement> lift_stabilizer;
  ClassMap class_map;
  std::optional<bool> nonsingular;  // present when a Frobenius action is supplied
};
StabilizerReport stabilizer_report(const WeylGroup& W, const TorusCharacter& theta,
                                   const FrobeniusAction* F = nullptr, bool frobenius_filter = false);

}  // namespace dzb
