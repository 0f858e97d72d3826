#pragma once

#include "dzb/cyclotomic.hpp"
#include "dzb/linalg.hpp"

#include <vector>

namespace dzb {

// ℂ[Λ, μ] for Λ = ℤ^r and a bilinear 2-cocycle μ(x, y) = xᵀ M y ∈ ℚ/ℤ, so that
// T_x T_y = e(μ(x, y)) T_{x+y} with e(t) = exp(2πi t).
class TwistedLatticeAlgebra {
public:
  explicit TwistedLatticeAlgebra(QMat cocycle);
  // Strictly upper triangular cocycle realizing an alternating β.
  static TwistedLatticeAlgebra from_bicharacter(const QMat& beta);

  int rank() const { return r_; }
  const QMat& cocycle() const { return m_; }
  Rational mu(const IVec& x, const IVec& y) const;
  // β(x, y) with T_x T_y = e(β(x, y)) T_y T_x.
  Rational beta(const IVec& x, const IVec& y) const;
  QMat beta_matrix() const;
  // Phase of T_x T_y relative to T_y T_x computed from the two products.
  Rational commutator_phase(const IVec& x, const IVec& y) const;

private:
  int r_;
  QMat m_;
};

// Columns of `basis` span a full-rank sublattice of ℤ^r.
struct Sublattice {
  IMat basis;
  std::int64_t index = 1;
  bool contains(const IVec& x) const;
};
// Basis of the lattice spanned by full-rank generators.
Sublattice span_lattice(const std::vector<IVec>& generators, int rank);

// ZΛ = radical of β.
Sublattice center_lattice(const TwistedLatticeAlgebra& alg);

// Λ/ZΛ ≅ ⊕ ℤ/n_i through x ↦ (U x)_i mod n_i, with β and a bilinear cocycle on the quotient.
struct NormalForm {
  Sublattice center;
  IMat to_quotient;      // U
  IMat from_quotient;    // U⁻¹
  IVec moduli;           // n_i (1 for trivial factors)
  QMat beta_bar;         // β in quotient coordinates
  QMat mu_bar;           // strictly upper part of beta_bar; a cocycle on ⊕ ℤ/n_i
  bool center_is_span = false;  // T_z (z ∈ ZΛ) commute with every T_{e_i}, and no other coset class does
  std::int64_t quotient_order() const;
  IVec coords(const IVec& x) const;  // reduced quotient coordinates
};
NormalForm rescale_normal_form(const TwistedLatticeAlgebra& alg, std::size_t bound = 1u << 16);

struct IsotropicTower {
  Sublattice isotropic;          // CΛ
  std::int64_t outer_index = 1;  // [Λ:CΛ]
  std::int64_t inner_index = 1;  // [CΛ:ZΛ]
  bool pairing_is_isomorphism = false;  // Λ/CΛ → Hom(CΛ/ZΛ, ℚ/ℤ)
};
IsotropicTower isotropic_tower(const TwistedLatticeAlgebra& alg, const NormalForm& nf);

struct BlockStructure {
  int d = 1;
  std::int64_t total_dim = 1;
  int center_dim = 1;
  std::vector<std::vector<Cyclotomic>> idempotents;  // one per character of CΛ/ZΛ
  bool idempotents_orthogonal = false;  // e_χ² = e_χ, e_χ e_ψ = 0, Σ e_χ = 1
  bool corners_one_dimensional = false; // e_χ A e_χ = ℂ e_χ
  bool conjugation_transitive = false;  // T_x e_χ T_x⁻¹ run through every e_ψ
  bool is_matrix_algebra() const {
    return center_dim == 1 && total_dim == std::int64_t(d) * d && idempotents_orthogonal && corners_one_dimensional &&
           conjugation_transitive;
  }
};
BlockStructure block_structure(const NormalForm& nf, const IsotropicTower& tower);

}  // namespace dzb
