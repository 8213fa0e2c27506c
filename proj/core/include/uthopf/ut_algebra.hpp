#pragma once

// The graded Hopf algebra of class functions of UT_n(F_q) at a fixed prime q:
// μ = Inf ∘ st⁻¹ and Δ = Σ_I st ∘ Def ∘ Res, computed by brute force.

#include "uthopf/class_functions.hpp"
#include "uthopf/report.hpp"
#include "uthopf/scf.hpp"

#include <map>
#include <utility>

namespace uthopf {

/// ⊕_n cf(UT_n) at one prime; zero components are dropped.
class UtCfElement {
public:
  explicit UtCfElement(PrimeField f) : field_(f) {}

  static UtCfElement unit(PrimeField f);
  /// A single component; ψ must live on some UT_n.
  static UtCfElement homogeneous(const ClassFunction &psi);

  const PrimeField &field() const { return field_; }
  const std::map<int, ClassFunction> &components() const { return components_; }

  void add(const ClassFunction &psi);
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const UtCfElement &a, const UtCfElement &b);

private:
  PrimeField field_;
  std::map<int, ClassFunction> components_;
};

/// ⊕_{i,j} cf(UT_i × UT_j).
class UtTensor {
public:
  explicit UtTensor(PrimeField f) : field_(f) {}

  const PrimeField &field() const { return field_; }
  const std::map<std::pair<int, int>, ProductFunction> &components() const { return components_; }

  void add(const ProductFunction &t);
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const UtTensor &a, const UtTensor &b);

private:
  PrimeField field_;
  std::map<std::pair<int, int>, ProductFunction> components_;
};

/// Degree of a group built by ut_group (its dimension); throws otherwise.
int ut_degree(const GroupTable &g);

/// Inf^{UT_{i+j}}_{UL_[i]} ∘ st⁻¹ of a function on UT_i × UT_j.
ClassFunction ut_mu_homogeneous(const ProductFunction &t);

UtCfElement ut_mu(const UtCfElement &x, const UtCfElement &y);

/// st_(I, Iᶜ) ∘ Def^{UP_I}_{UL_I} ∘ Res^{UT_n}_{UP_I}.
ProductFunction ut_delta_component(const ClassFunction &psi, const LabelSet &subset);

UtTensor ut_delta(const UtCfElement &x);

/// δ_π: the indicator of UT(π) inside UT_n.
ClassFunction subgroup_indicator(const Nuio &pi, const PrimeField &f);

/// χ^π = Ind_{UT(π)}^{UT_n}(1).
ClassFunction permutation_character(const Nuio &pi, const PrimeField &f);

/// t ↦ 1/q and δ_π ↦ subgroup_indicator(π).
UtCfElement specialize(const ScfElement &x, const PrimeField &f);
UtTensor specialize(const ScfTensor &x, const PrimeField &f);

/// 𝔡: ψ ↦ ψ ∘ † on each component.
ClassFunction dagger_cf(const ClassFunction &psi);
UtCfElement dagger_ut(const UtCfElement &x);

std::string canonical(const UtCfElement &x);
std::string canonical(const UtTensor &x);

// ---------------------------------------------------------------------------
// Oracle checks

/// Brute-force Δ(δ_π) against the symbolic coproduct at t = 1/q, for all
/// π ∈ NO_n with n ≤ n_max.
VerificationReport verify_coproduct_oracle(int n_max, const PrimeField &f);

/// Brute-force μ(δ_π ⊗ δ_ρ) against δ_{π ⊕sh ρ}, all pairs with total
/// degree ≤ n_max.
VerificationReport verify_product_oracle(int n_max, const PrimeField &f);

/// specialize is multiplicative and comultiplicative on all basis pairs
/// with total degree ≤ n_max.
VerificationReport verify_specialization_hom(int n_max, const PrimeField &f);

/// χ^π = [UT_n : UT(π)] δ_π for π ∈ NO_n, n ≤ n_max.
VerificationReport verify_permutation_characters(int n_max, const PrimeField &f);

} // namespace uthopf
