#pragma once

#include "dzb/linalg.hpp"
#include "dzb/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dzb {

// Based root datum with X* = X_* = ℤⁿ under the dot product.
class RootDatum {
public:
  RootDatum() = default;
  // `rank` is required when there are no roots.
  RootDatum(std::vector<IVec> simple_roots, std::vector<IVec> simple_coroots, int rank = -1);

  int rank() const { return n_; }                      // lattice rank
  int semisimple_rank() const { return int(sroots_.size()); }
  const std::vector<IVec>& simple_roots() const { return sroots_; }
  const std::vector<IVec>& simple_coroots() const { return scoroots_; }

  // Positive roots come first (ordered by height), then their negatives in the same order.
  int num_roots() const { return int(roots_.size()); }
  int num_positive() const { return int(roots_.size()) / 2; }
  const IVec& root(int i) const { return roots_[i]; }
  const IVec& coroot(int i) const { return coroots_[i]; }
  const IVec& root_coefficients(int i) const { return coeffs_[i]; }
  bool is_positive(int i) const { return i < num_positive(); }
  int negative(int i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  int simple_index(int i) const { return simple_pos_[i]; }  // root index of α_i
  int height(int i) const;
  std::optional<int> find_root(const IVec& v) const;
  std::optional<int> find_coroot(const IVec& v) const;

  const IMat& cartan() const { return cartan_; }  // ⟨α_i, α_j^∨⟩
  // Connected components of the Dynkin diagram, as lists of simple indices.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of_simple(int i) const { return comp_of_[i]; }
  int highest_root(int component) const { return highest_[component]; }
  int component_of_root(int r) const;

  IVec reflect(int r, const IVec& x) const;    // on X*
  QVec reflect(int r, const QVec& x) const;
  IVec coreflect(int r, const IVec& y) const;  // on X_*
  QVec coreflect(int r, const QVec& y) const;

  RootDatum dual() const { return RootDatum(scoroots_, sroots_, n_); }

  // Identifies X* with ℤⁿ/K for a saturated sublattice K orthogonal to every coroot.
  struct Quotient;
  Quotient quotient(const std::vector<IVec>& K) const;

private:
  int n_ = 0;
  std::vector<IVec> sroots_, scoroots_;
  std::vector<IVec> roots_, coroots_, coeffs_;
  std::vector<int> simple_pos_;
  IMat cartan_;
  std::vector<std::vector<int>> components_;
  std::vector<int> comp_of_, highest_;
  std::unordered_map<IVec, int, IVecHash> root_idx_, coroot_idx_;
};

struct RootDatum::Quotient {
  RootDatum datum;
  IMat project;  // X*-coordinates in ℤⁿ → quotient coordinates
  IMat lift;     // quotient coordinates → a representative in ℤⁿ
  IMat coproject;  // X_* ⊂ ℤⁿ (orthogonal to K) → quotient dual coordinates
};

// Cartan matrices in Bourbaki numbering; `type` like "A2", "C2", "E6", "A1xB2".
IMat cartan_matrix(const std::string& type);
RootDatum simply_connected(const std::string& type);
RootDatum adjoint(const std::string& type);
RootDatum gl_datum(int n);  // GL_n on ℤⁿ
int classification_weyl_order(const std::string& type);  // for types A–D (products allowed)

class WeylGroup {
public:
  static constexpr std::size_t kDefaultBound = 1000000;
  explicit WeylGroup(const RootDatum& datum, std::size_t bound = kDefaultBound);

  const RootDatum& datum() const { return d_; }
  int size() const { return int(onx_.size()); }
  int identity() const { return 0; }
  const IMat& on_x(int w) const { return onx_[w]; }  // x ↦ M x on X*
  const IMat& on_y(int w) const { return ony_[w]; }  // contragredient action on X_*
  int mul(int a, int b) const;
  int inv(int w) const { return inv_[w]; }
  int root_image(int w, int r) const { return perm_[std::size_t(w) * nr_ + r]; }
  int simple_reflection(int i) const { return simple_[i]; }
  int reflection(int r) const { return refl_[r]; }
  int length(int w) const { return len_[w]; }
  int longest() const { return longest_; }
  std::vector<int> reduced_word(int w) const;
  std::optional<int> find(const IMat& on_x) const;
  // Index of the element acting on the roots as the given permutation of simple roots, if any.
  std::optional<int> from_simple_images(const std::vector<int>& images) const;
  QVec act_x(int w, const QVec& x) const { return onx_[w] * x; }
  QVec act_y(int w, const QVec& y) const { return ony_[w] * y; }
  IVec act_y(int w, const IVec& y) const { return ony_[w] * y; }
  int order_of(int w) const;
  // Subgroup generated by the given elements, sorted.
  std::vector<int> generate(const std::vector<int>& gens) const;

private:
  std::vector<int> key(int w) const;
  RootDatum d_;
  int nr_ = 0;
  std::vector<IMat> onx_, ony_;
  std::vector<int> inv_, perm_, len_, simple_, refl_;
  int longest_ = 0;
  std::unordered_map<IVec, int, IVecHash> index_;
};

// Frobenius: F₀ on X* of finite order, q a prime power; acts on X_* through F₀ᵀ.
struct FrobeniusAction {
  IMat F0;
  std::int64_t q = 0;
  FrobeniusAction() = default;
  FrobeniusAction(IMat f0, std::int64_t q_, const RootDatum& datum);
  int order() const { return order_; }
  int coroot_degree(const IVec& coroot) const;  // least d ≥ 1 with (F₀ᵀ)^d α^∨ = α^∨

private:
  int order_ = 1;
};

bool is_prime_power(std::int64_t q, std::int64_t* p = nullptr, int* k = nullptr);

// θ ∈ X*⊗ℚ/ℤ, coordinates in [0,1).
class TorusCharacter {
public:
  TorusCharacter() = default;
  explicit TorusCharacter(QVec theta);
  TorusCharacter(const IVec& numerators, std::int64_t denominator);
  const QVec& values() const { return v_; }
  int rank() const { return int(v_.size()); }
  Integer denominator() const { return common_denominator(v_); }
  bool is_valid_for(const FrobeniusAction& F) const;  // (q F₀ − 1) θ ≡ 0
  void validate(const FrobeniusAction& F) const;       // throws InvalidCharacter
  TorusCharacter act(const WeylGroup& W, int w) const;
  bool operator==(const TorusCharacter& o) const { return v_ == o.v_; }

private:
  QVec v_;
};

Rational pairing(const TorusCharacter& theta, const IVec& coroot);
Rational norm_pairing(const TorusCharacter& theta, const IVec& coroot, const FrobeniusAction& F, int multiple = 1);
bool is_nonsingular(const TorusCharacter& theta, const RootDatum& datum, const FrobeniusAction& F);

}  // namespace dzb
