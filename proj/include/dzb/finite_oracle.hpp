#pragma once

#include "dzb/cyclotomic.hpp"
#include "dzb/extensions.hpp"
#include "dzb/finite_group.hpp"
#include "dzb/rootdata.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dzb {

enum class GroupKind { SL2, GL2, PGL2, SU3, PU3 };
std::string to_string(GroupKind k);
GroupKind parse_group_kind(const std::string& s);

// Rank-one finite group of Lie type with B = T⋉U upper triangular.
// Torus characters are vectors θ with θ_i ∈ (1/N_i)ℤ/ℤ, evaluated as Σ θ_i c_i(t) for the torus coordinates c_i.
class FiniteGroupOfLieType {
public:
  static constexpr std::size_t kDefaultBound = 1000000;
  FiniteGroupOfLieType(GroupKind kind, std::int64_t q, std::size_t bound = kDefaultBound);

  GroupKind kind() const { return kind_; }
  std::int64_t q() const { return q_; }
  const FiniteField& field() const { return *F_; }
  const MatrixGroup& group() const { return *G_; }
  const std::vector<int>& borel() const { return B_; }
  const std::vector<int>& torus() const { return T_; }
  const std::vector<int>& unipotent() const { return U_; }
  std::int64_t expected_order() const;

  const IVec& torus_moduli() const { return N_; }
  IVec torus_coordinates(int element) const;  // element of B; coordinates of its torus part
  IMat weyl_action() const;                    // coordinates of ŝ t ŝ⁻¹ in terms of those of t
  std::vector<QVec> characters() const;
  Rational character_value(const QVec& theta, int element) const;  // θ extended to B trivially on U
  QVec weyl_act(const QVec& theta) const;                           // (sθ)(t) = θ(ŝ⁻¹ t ŝ)

  // Tits lift of w ∈ {0 = e, 1 = s}.
  int tits_lift(int w) const { return w == 0 ? G_->identity() : s_; }
  int coroot_minus_one() const { return minus_one_; }

private:
  GroupKind kind_;
  std::int64_t q_;
  std::unique_ptr<FiniteField> F_;
  std::unique_ptr<MatrixGroup> G_;
  std::vector<int> B_, T_, U_;
  IVec N_;
  int s_ = 0, minus_one_ = 0;
};

// Root datum, Frobenius and relative coroot matching the torus coordinates of a kind.
struct RankOneData {
  RootDatum datum;
  FrobeniusAction frobenius;
  IVec coroot;
  IMat character_map;  // torus-character coordinates → X*⊗ℚ/ℤ
  TorusCharacter character(const QVec& torus_character) const;
};
RankOneData rank_one_data(GroupKind kind, std::int64_t q);

// End_G(Ind_B^G θ) in the basis E_w = e·ẇ·e with e = |B|⁻¹ Σ_b θ(b) b.
struct ThetaSphericalAlgebra {
  int order = 1;                  // coefficients in ℚ(ζ_order)
  std::vector<int> basis;         // Weyl elements with E_w ≠ 0
  std::vector<std::vector<std::vector<Cyclotomic>>> constants;  // E_x E_y = Σ_z constants[x][y][z] E_z
  int howlett_lehrer = 0;         // #{w : wθ = θ}
  int dim() const { return int(basis.size()); }
  bool is_associative() const;
  bool has_unit() const;
};
ThetaSphericalAlgebra hecke_fin(const FiniteGroupOfLieType& G, const QVec& theta);

struct QParameter {
  Rational a, b;  // T′² = a T_e + b T′
  Rational q;
};
QParameter q_parameter(const ThetaSphericalAlgebra& alg, std::int64_t qF);

// 1 → T → N_G(T)_θ → W_θ → 1 from the Tits section, valued in T ≅ ⊕ (1/N_i)ℤ/ℤ.
struct TorusNormalizerExtension {
  Cocycle2 cocycle;
  IMat theta_map;  // pushout along θ: integer multipliers N_i θ_i
  Cocycle2 pushed() const { return pushout(cocycle, theta_map, IVec{0}); }
};
TorusNormalizerExtension torus_normalizer_extension(const FiniteGroupOfLieType& G, const QVec& theta);

}  // namespace dzb
