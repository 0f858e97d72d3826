#pragma once

#include "dzb/linalg.hpp"
#include "dzb/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dzb {

// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
public:
  FiniteGroup() = default;
  explicit FiniteGroup(std::vector<std::vector<int>> table);
  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);  // (i, j) ↦ i·|b| + j
  static FiniteGroup dihedral(int n);                                      // order 2n
  static FiniteGroup quaternion();
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens, std::size_t bound = 100000);

  int size() const { return int(t_.size()); }
  int mul(int a, int b) const { return t_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  bool is_abelian() const;
  bool is_homomorphism(const FiniteGroup& target, const std::vector<int>& f) const;
  const std::vector<std::vector<int>>& table() const { return t_; }
  bool operator==(const FiniteGroup& o) const { return t_ == o.t_; }

private:
  std::vector<std::vector<int>> t_;
  std::vector<int> inv_;
};

// A = ⊕ (1/n_i)ℤ/ℤ ⊂ (ℚ/ℤ)^k, with n_i = 0 meaning all of ℚ/ℤ; values are vectors in [0,1)^k.
struct CoefficientModule {
  IVec moduli;
  std::vector<IMat> action;  // integer matrices, one per group element; empty means trivial action
  int dim() const { return int(moduli.size()); }
  bool contains(const QVec& v) const;
  QVec act(int g, const QVec& v) const;
  bool operator==(const CoefficientModule& o) const { return moduli == o.moduli && action == o.action; }
};

// Normalized 2-cocycle c: Q × Q → A for the twisted identity x·c(y,z) − c(xy,z) + c(x,yz) − c(x,y) = 0.
class Cocycle2 {
public:
  Cocycle2() = default;
  Cocycle2(FiniteGroup Q, CoefficientModule A, std::vector<QVec> table);
  static Cocycle2 zero(FiniteGroup Q, CoefficientModule A);

  const FiniteGroup& group() const { return Q_; }
  const CoefficientModule& coefficients() const { return A_; }
  const QVec& operator()(int x, int y) const { return c_[std::size_t(x) * Q_.size() + y]; }
  const std::vector<QVec>& table() const { return c_; }
  bool is_zero() const;

private:
  FiniteGroup Q_;
  CoefficientModule A_;
  std::vector<QVec> c_;
};

// χ: A → (ℚ/ℤ)^m given by an integer m × k matrix, landing in `target` (trivial action on the target).
Cocycle2 pushout(const Cocycle2& c, const IMat& chi, const IVec& target_moduli);
Cocycle2 pullback(const Cocycle2& c, const FiniteGroup& source, const std::vector<int>& f);
Cocycle2 baer_sum(const Cocycle2& a, const Cocycle2& b);
Cocycle2 negate(const Cocycle2& c);
// c + d s for a 1-cochain s with s(1) = 0.
Cocycle2 add_coboundary(const Cocycle2& c, const std::vector<QVec>& s);

// Γ acting on Q by automorphisms and on A by integer matrices, with γ·c(x,y) − c(γx,γy) = (dε_γ)(x,y).
struct EquivariantStructure {
  FiniteGroup gamma;
  std::vector<std::vector<int>> on_group;  // on_group[γ][x] = γ·x
  std::vector<IMat> on_coefficients;
  std::vector<std::vector<QVec>> witness;  // ε_γ(x)
};
// Checks the actions and the stored coboundary witnesses.
void validate(const Cocycle2& c, const EquivariantStructure& e);

// A 1-cochain s with ds = c (and γ·s(x) − s(γx) = ε_γ(x) when `eq` is given), or nullopt.
std::optional<std::vector<QVec>> splitting(const Cocycle2& c, const EquivariantStructure* eq = nullptr);
// Exhaustive search over all cochains; finite coefficients only.
std::optional<std::vector<QVec>> splitting_exhaustive(const Cocycle2& c, std::size_t bound = 1u << 22);

}  // namespace dzb
