#pragma once

#include "dzb/cyclotomic.hpp"
#include "dzb/rootdata.hpp"

#include <map>
#include <memory>
#include <vector>

namespace dzb {

// λ = log_{q_F}(q q*), λ* = log_{q_F}(q / q*).
struct LambdaExponents {
  Rational lambda, lambda_star;
};
LambdaExponents lambda_exponents(const Rational& q, const Rational& q_star, std::int64_t qF);

// k_α as a multiple of r = log q_F^{1/2}: log q for sign +1 and log q* for sign −1, asserted equal to r(λ + sign·λ*).
Rational k_parameter(const Rational& q, const Rational& q_star, int sign, std::int64_t qF);

// Polynomials in x_1..x_n (coordinates of X*⊗ℚ, functions on X_*⊗ℚ) and the formal unit r (last slot).
using Monomial = IVec;
using Poly = std::map<Monomial, Cyclotomic>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Cyclotomic& c, const Poly& a);
Poly poly_const(const Cyclotomic& c, int n);
Poly poly_linear(const IVec& xi);  // ξ ∈ X* as a linear form
Poly poly_r(int n);
int degree(const Poly& p);

// Twisted graded Hecke algebra ℂ[W′, ♮] ⊗ S(𝔱*) ⊗ ℂ[r] for W′ = W(R) ⋊ Γ, with
// N_s f − (s·f) N_s = k_α r Δ_α(f), Δ_α(f) = (f − s_α f)/α, and N_u N_v = e(♮(ū, v̄)) N_{uv}.
class GradedHeckeAlgebra {
public:
  using Element = std::map<int, Poly>;  // Weyl group index → polynomial coefficient (left of N_w)

  // `roots`: closed subsystem (root indices, both signs); `k`: one value per root index in `roots` (W′-invariant);
  // `gamma`: elements of W normalizing R⁺; `natural`: optional ℚ/ℤ cocycle table on `gamma` (|Γ|² entries, Γ order as given).
  GradedHeckeAlgebra(const RootDatum& datum, std::vector<int> roots, std::map<int, Rational> k, std::vector<int> gamma,
                     std::vector<Rational> natural = {});

  const WeylGroup& weyl() const { return *W_; }
  const std::vector<int>& roots() const { return roots_; }
  const std::vector<int>& simple_roots() const { return simple_; }
  const std::vector<int>& gamma() const { return gamma_; }
  const std::vector<int>& group() const { return group_; }  // W′
  const std::map<int, Rational>& k() const { return k_; }
  int n() const { return W_->datum().rank(); }

  Poly act(int w, const Poly& f) const;
  Poly delta(int root, const Poly& f) const;
  Element N(int w) const;
  Element P(const Poly& f) const;
  Element mul(const Element& a, const Element& b) const;

  // Operator representation on S(𝔱*)[r]: f ↦ multiplication, N_s ↦ s + k_α r Δ_α, N_γ ↦ γ.
  Poly represent(const Element& a, const Poly& f) const;

  // Cross relation as an operator identity on all monomials up to `max_degree`; also N_s² = 1 there.
  bool check_cross_relation(int max_degree) const;
  // W′-symmetrized monomials of degree ≤ max_degree commute with every N_s and N_γ.
  bool check_symmetric_central(int max_degree) const;

  struct Decomposition {
    std::vector<int> core_roots;   // R′ = {α : k_α ≠ 0}
    std::vector<int> core_simple;
    std::vector<int> gamma_prime;  // elements of W′ stabilizing R′⁺
    bool semidirect = false;       // |W′| = |W(R′)|·|Γ′|
    bool stabilizes = false;       // every γ ∈ Γ′ maps R′⁺ to R′⁺
  };
  Decomposition decompose() const;
  // The algebra over (R′, k|R′, Γ′) with trivial ♮.
  GradedHeckeAlgebra rebuild(const Decomposition& d) const;

private:
  std::pair<std::vector<int>, int> split(int w) const;  // w = s_{i_1} ⋯ s_{i_k} γ with simple roots of R
  Rational natural_value(int u, int v) const;
  Element left_mul_simple(int root, const Element& a) const;
  std::shared_ptr<const WeylGroup> W_;
  std::vector<int> roots_, simple_, gamma_, group_;
  std::map<int, Rational> k_;
  std::vector<Rational> natural_;
  std::map<int, int> gamma_of_;  // W′ element → index of its Γ-part
};

}  // namespace dzb
