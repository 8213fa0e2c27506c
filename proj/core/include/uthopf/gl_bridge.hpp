#pragma once

// Parabolic induction and Harish-Chandra restriction on cf(GL_n(F_q)), and
// the checks relating them to the unitriangular side.  The parabolic P_i,
// Levi L_i and radical R_i of the composition (i, n − i) are handled through
// membership predicates; only the radical is enumerated.

#include "uthopf/class_functions.hpp"
#include "uthopf/report.hpp"
#include "uthopf/ut_algebra.hpp"

#include <map>
#include <utility>

namespace uthopf {

class GlCfElement {
public:
  explicit GlCfElement(PrimeField f) : field_(f) {}

  static GlCfElement unit(PrimeField f);
  static GlCfElement homogeneous(const ClassFunction &psi);

  const PrimeField &field() const { return field_; }
  const std::map<int, ClassFunction> &components() const { return components_; }

  void add(const ClassFunction &psi);
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const GlCfElement &a, const GlCfElement &b);

private:
  PrimeField field_;
  std::map<int, ClassFunction> components_;
};

class GlTensor {
public:
  explicit GlTensor(PrimeField f) : field_(f) {}

  const PrimeField &field() const { return field_; }
  const std::map<std::pair<int, int>, ProductFunction> &components() const { return components_; }

  void add(const ProductFunction &t);
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const GlTensor &a, const GlTensor &b);

private:
  PrimeField field_;
  std::map<std::pair<int, int>, ProductFunction> components_;
};

/// Degree of a group built by general_linear_group; throws otherwise.
int gl_degree(const GroupTable &g);

/// Ind_{P_i}^{GL_n} ∘ Inf_{L_i}^{P_i} ∘ st⁻¹ of a function on GL_i × GL_j.
ClassFunction gl_mu_homogeneous(const ProductFunction &t);

GlCfElement gl_product(const GlCfElement &x, const GlCfElement &y);

/// st ∘ Def_{L_i}^{P_i} ∘ Res_{P_i}^{GL_n}: (a, b) ↦ (1/|R_i|) Σ_r ψ((a ⊕ b) r).
ProductFunction gl_delta_component(const ClassFunction &psi, int i);

GlTensor gl_coproduct(const GlCfElement &x);

/// Ind_{UT_n}^{GL_n}, degreewise.
ClassFunction induce_ut_to_gl(const ClassFunction &psi);
GlCfElement induce_ut_to_gl(const UtCfElement &x);
ProductFunction induce_ut_to_gl(const ProductFunction &t);
GlTensor induce_ut_to_gl(const UtTensor &x);

std::string canonical(const GlCfElement &x);
std::string canonical(const GlTensor &x);

// ---------------------------------------------------------------------------
// Checks

/// μ_GL ∘ (Ind ⊗ Ind) = Ind ∘ μ_UT and Δ_GL ∘ Ind = (Ind ⊗ Ind) ∘ Δ_UT on
/// class indicators of UT_i ⊗ UT_j and UT_n, total degree ≤ n_max.
VerificationReport verify_induction_hom(int n_max, const PrimeField &f);

/// Res_{P_i} ∘ Ind_{UT_n}^{GL_n} = Σ_{|I|=i} Ind_{w⁻¹ UP_I w}^{P_i} ∘ (w_I)^* ∘ Res_{UP_I}
/// on the class indicators of UT_n.
VerificationReport mackey_witness(int n, int i, const PrimeField &f);

/// The sets UT_n w_I P_i, |I| = i, are disjoint and cover GL_n.
VerificationReport verify_double_cosets(int n, int i, const PrimeField &f);

/// UL_I, UR_I, UP_I equal ^{w_I}L_i, ^{w_I}R_i, ^{w_I}P_i intersected with
/// UT_n, for every I ⊆ [n].
VerificationReport verify_bruhat_intersections(int n, const PrimeField &f);

/// g and g† are GL_n-conjugate for every g ∈ UT_n.
VerificationReport verify_dagger_conjugacy(int n, const PrimeField &f);

/// Ind ∘ 𝔡 = Ind on the class indicators of UT_n, n ≤ n_max.
VerificationReport verify_dagger_induction(int n_max, const PrimeField &f);

} // namespace uthopf
