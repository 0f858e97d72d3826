#pragma once

#include "dzb/affine_weyl.hpp"
#include "dzb/cyclotomic.hpp"
#include "dzb/finite_oracle.hpp"
#include "dzb/stabilizers.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dzb {

// Laurent polynomial in the formal symbol v (v² = q_F) over ℤ[ζ_N]; each coefficient is stored in the
// power basis of ℤ[ζ_N] modulo Φ_N with overflow-checked int64 entries.
class Laurent {
public:
  Laurent() = default;
  Laurent(std::int64_t c, int exponent = 0);
  static Laurent v(int exponent) { return Laurent(1, exponent); }
  static Laurent zeta(int order, std::int64_t k);

  int order() const { return n_; }
  const std::map<int, IVec>& terms() const { return t_; }
  Cyclotomic coefficient(int exponent) const;
  bool is_zero() const { return t_.empty(); }
  Laurent shifted(int k) const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  bool operator==(const Laurent& o) const;
  std::string to_string() const;

private:
  Laurent promote(int order) const;
  int n_ = 1;
  std::map<int, IVec> t_;
};

struct ExtAffineLess {
  bool operator()(const ExtAffineElement& a, const ExtAffineElement& b) const {
    return a.w != b.w ? a.w < b.w : a.lambda < b.lambda;
  }
};

// A Coxeter system inside the extended affine Weyl group together with its length-zero part:
// x = s_{i_1} ⋯ s_{i_k} ω with descents decided geometrically.
class CoxeterRealization {
public:
  enum class Kind { Full, Derived, Subsystem };

  // Simple affine reflections of the whole group; Ω from alcove stabilizers and central translations.
  static CoxeterRealization full(std::shared_ptr<const ExtendedAffineWeyl> E);
  // W_aff(J) ⋊ Ω(J) acting on the facet of type J.
  static CoxeterRealization derived(std::shared_ptr<const ExtendedAffineWeyl> E, const std::vector<int>& J,
                                    bool relax = false);
  // Affine Weyl group of a closed subsystem R′ (root indices, closed under negation) inside X_* ⋊ W′,
  // with W′ ⊆ W a finite group normalizing R′ and containing W(R′). Walls relative to the R′-alcove containing C₀.
  static CoxeterRealization subsystem(std::shared_ptr<const ExtendedAffineWeyl> E, const std::vector<int>& roots,
                                      const std::vector<int>& finite_group);

  Kind kind() const { return kind_; }
  const ExtendedAffineWeyl& group() const { return *E_; }
  int size() const { return int(gens_.size()); }
  const ExtAffineElement& generator(int s) const { return gens_[s]; }
  const std::vector<ExtAffineElement>& generators() const { return gens_; }
  // Linear part of the wall of each generator (root index) and its affine offset.
  const std::vector<AffineRoot>& walls() const { return walls_; }
  const std::vector<ExtAffineElement>& omega_generators() const { return omega_gens_; }
  // Positive roots of the linear root system (for dominance); empty for derived systems.
  const std::vector<int>& positive_roots() const { return positive_; }
  // Finite group acting on translations (indices into the Weyl group).
  const std::vector<int>& finite_group() const { return finite_; }

  bool contains(const ExtAffineElement& x) const;
  bool is_left_descent(const ExtAffineElement& x, int s) const;
  struct Decomposition {
    std::vector<int> word;
    ExtAffineElement omega;
  };
  const Decomposition& decompose(const ExtAffineElement& x) const;
  int length(const ExtAffineElement& x) const { return int(decompose(x).word.size()); }
  // Order of s t, or 0 if it exceeds `bound`.
  int braid_order(int s, int t, int bound = 12) const;
  std::optional<int> find_generator(const ExtAffineElement& x) const;
  bool is_dominant(const IVec& lambda) const;
  IVec regular_dominant() const;  // Σ of positive coroots

  std::size_t max_length = 64;

private:
  Kind kind_ = Kind::Full;
  std::shared_ptr<const ExtendedAffineWeyl> E_;
  std::vector<ExtAffineElement> gens_;
  std::vector<AffineRoot> walls_;
  std::vector<ExtAffineElement> omega_gens_;
  std::vector<int> positive_, finite_;
  std::shared_ptr<const DerivedSystem> derived_;
  QVec point_;
  mutable std::unordered_map<ExtAffineElement, Decomposition, ExtAffineHash> cache_;
};

using HeckeElement = std::map<ExtAffineElement, Laurent, ExtAffineLess>;

// H = H(W_aff′, q) ⋊ ℂ[Ω′, μ] with basis T_x = T_{s_1}⋯T_{s_k} T_ω and q_s = q_F^{e_s}.
class ExtAffineHeckeAlgebra {
public:
  using OmegaCocycle = std::function<Rational(const ExtAffineElement&, const ExtAffineElement&)>;
  // μ must take values in (1/root_order)ℤ/ℤ.
  ExtAffineHeckeAlgebra(CoxeterRealization R, std::vector<int> exponents, OmegaCocycle mu = nullptr, int root_order = 1);

  const CoxeterRealization& realization() const { return R_; }
  const std::vector<int>& exponents() const { return e_; }

  HeckeElement T(const ExtAffineElement& x, const Laurent& c = Laurent(1)) const;
  HeckeElement unit() const { return T(R_.group().identity()); }
  HeckeElement generator(int s) const { return T(R_.generator(s)); }
  HeckeElement generator_inverse(int s) const;
  HeckeElement basis_inverse(const ExtAffineElement& x) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  // Laurent-scaled T_x: v^{-Σ e_{s_i}} T_x over a reduced word of x.
  HeckeElement normalized(const ExtAffineElement& x) const;
  int weight(const ExtAffineElement& x) const;  // Σ e_{s_i}

  // θ_λ = T̃_{λ₁} T̃_{λ₂}⁻¹ with λ = λ₁ − λ₂ and λ₁, λ₂ dominant. Without an explicit λ₂ the
  // shortest dominant λ₂ in a small box is used.
  HeckeElement bernstein_theta(const IVec& lambda, std::optional<IVec> lambda2 = std::nullopt) const;
  IVec default_shift(const IVec& lambda) const;
  // Σ_{w ∈ finite group} θ_{w λ} over the orbit of λ.
  HeckeElement orbit_sum(const IVec& lambda) const;

  struct CentralityWitness {
    bool central = true;
    std::string failing_generator;
  };
  CentralityWitness verify_central(const HeckeElement& z) const;

  struct RelationReport {
    int quadratic = 0, braid = 0, omega = 0, words = 0;
    bool ok = true;
    std::string failure;
  };
  // Quadratic, braid and Ω-conjugation relations, plus associativity of all generator words up to `max_word`.
  RelationReport check_relations(int max_word) const;

  HeckeElement right_mul_generator(const HeckeElement& a, int s) const;
  HeckeElement right_mul_omega(const HeckeElement& a, const ExtAffineElement& w) const;

private:
  HeckeElement left_mul_generator(int s, const HeckeElement& a) const;
  HeckeElement left_mul_omega(const ExtAffineElement& w, const HeckeElement& a) const;
  Laurent mu_phase(const ExtAffineElement& a, const ExtAffineElement& b) const;
  CoxeterRealization R_;
  std::vector<int> e_;
  OmegaCocycle mu_;
  int root_order_ = 1;
};

HeckeElement add(const HeckeElement& a, const HeckeElement& b);
HeckeElement sub(const HeckeElement& a, const HeckeElement& b);
HeckeElement scale(const Laurent& c, const HeckeElement& a);
bool is_zero(const HeckeElement& a);
std::string to_string(const HeckeElement& a);

// Exponents of (q_α, q_α*) from a finite and an affine generator with the same linear root:
// q_α = (q_fin q_aff)^{1/2}, q_α* = (q_fin / q_aff)^{1/2}, as exponents of q_F (possibly half-integers).
struct BernsteinPair {
  Rational q, q_star;
};
BernsteinPair bernstein_pair(int e_fin, int e_aff);

// ---------------------------------------------------------------------------
// Block assembly.

struct BlockRoot {
  int root;             // index of α ∈ R_σ (positive)
  IVec coroot;          // α^∨ ∈ R_{s∨}
  GroupKind kind;       // rank-one group used by the oracle
  Rational q;           // q_{θ,α}
  Rational norm_pairing;
};

struct BlockAlgebra {
  std::shared_ptr<const ExtendedAffineWeyl> E;
  std::optional<ExtAffineHeckeAlgebra> hecke;  // absent when R_σ is empty
  std::vector<int> stabilizer;                 // W_θ
  std::vector<int> gamma;                      // Γ
  std::vector<BlockRoot> reflecting;           // positive α with s_α θ = θ, all queried
  std::vector<int> r_sigma;                    // root indices of R_σ (both signs)
  std::vector<IVec> dual_roots;                // R_{s∨}: the coroots of R_σ
  std::int64_t weyl_order_sigma = 1, weyl_order_dual = 1;
  std::vector<ExtAffineElement> omega_generators;  // of Ω(J,σ)
  int omega_translation_rank = 0;
  int omega_finite_order = 1;
  bool parameter_preserving = false;
  bool is_twisted_lattice_algebra() const { return r_sigma.empty(); }
};

// Principal-series blocks (J = ∅, split F₀); q_{θ,α} from the finite oracle for each s_α fixing θ.
BlockAlgebra build_block_algebra(const RootDatum& datum, const FrobeniusAction& F, const TorusCharacter& theta,
                                 const std::vector<int>& J, std::size_t oracle_bound = FiniteGroupOfLieType::kDefaultBound);

}  // namespace dzb
