#pragma once

// The Catalan-indexed Hopf algebra spanned by the subgroup indicators δ_π,
// π a natural unit interval order, with coefficients Laurent polynomials in
// t = 1/q.  Everything here is symbolic; specialize() in ut_algebra.hpp
// maps it into concrete class functions.

#include "uthopf/combinatorics.hpp"
#include "uthopf/laurent.hpp"

#include <map>
#include <utility>
#include <vector>

namespace uthopf {

/// Σ c_π δ_π.  Ordered by (degree, strict pairs); zero coefficients are
/// never stored.
class ScfElement {
public:
  ScfElement() = default;

  static ScfElement basis(const Nuio &pi, Laurent coeff = Laurent(1));
  static ScfElement unit() { return basis(Nuio()); }

  const std::map<Nuio, Laurent> &terms() const { return terms_; }
  Laurent coeff(const Nuio &pi) const;
  bool is_zero() const { return terms_.empty(); }

  /// The degree-n part.
  ScfElement homogeneous(int n) const;

  void add(const Nuio &pi, const Laurent &c);

  ScfElement &operator+=(const ScfElement &o);
  ScfElement &operator-=(const ScfElement &o);
  ScfElement &operator*=(const Laurent &c);
  friend ScfElement operator+(ScfElement a, const ScfElement &b) { return a += b; }
  friend ScfElement operator-(ScfElement a, const ScfElement &b) { return a -= b; }
  friend ScfElement operator*(const Laurent &c, ScfElement a) { return a *= c; }
  friend bool operator==(const ScfElement &, const ScfElement &) = default;

private:
  std::map<Nuio, Laurent> terms_;
};

/// Σ c δ_π ⊗ δ_ρ, ordered by (left degree, left poset, right poset).
class ScfTensor {
public:
  using Key = std::pair<Nuio, Nuio>;

  ScfTensor() = default;

  static ScfTensor basis(const Nuio &left, const Nuio &right, Laurent coeff = Laurent(1));
  static ScfTensor tensor(const ScfElement &a, const ScfElement &b);

  const std::map<Key, Laurent> &terms() const { return terms_; }
  Laurent coeff(const Nuio &left, const Nuio &right) const;
  bool is_zero() const { return terms_.empty(); }

  /// Terms with left degree i and right degree j.
  ScfTensor component(int i, int j) const;

  /// a ⊗ b ↦ b ⊗ a.
  ScfTensor swapped() const;

  void add(const Nuio &left, const Nuio &right, const Laurent &c);

  ScfTensor &operator+=(const ScfTensor &o);
  ScfTensor &operator-=(const ScfTensor &o);
  friend ScfTensor operator+(ScfTensor a, const ScfTensor &b) { return a += b; }
  friend ScfTensor operator-(ScfTensor a, const ScfTensor &b) { return a -= b; }
  friend bool operator==(const ScfTensor &, const ScfTensor &) = default;

private:
  std::map<Key, Laurent> terms_;
};

/// Bilinear extension of δ_π · δ_ρ = δ_{π ⊕sh ρ}.
ScfElement scf_product(const ScfElement &x, const ScfElement &y);

/// One summand of Δ(δ_π): t^exponent δ_{π|sh_I} ⊗ δ_{π|sh_Iᶜ}.
struct CoproductTerm {
  LabelSet subset;
  int exponent;
  Nuio left;
  Nuio right;
};

/// The 2ⁿ subset summands of Δ(δ_π), in bitmask order of I.
std::vector<CoproductTerm> coproduct_terms(const Nuio &pi);

ScfTensor scf_coproduct(const ScfElement &x);

/// Graded recursion S(δ_π) = −Σ_{I ⊊ [n]} t^{asc_I(π)} S(δ_{π|sh_I}) δ_{π|sh_Iᶜ};
/// memoized per π.
ScfElement scf_antipode(const ScfElement &x);

/// δ_π ↦ δ_{π†}.
ScfElement dagger_scf(const ScfElement &x);

/// (a ⊗ b)(c ⊗ d) = ac ⊗ bd, with no sign.
ScfTensor tensor_product(const ScfTensor &x, const ScfTensor &y);

/// μ applied to a tensor.
ScfElement multiply_tensor(const ScfTensor &x);

/// Coefficient of δ_∅.
Laurent counit(const ScfElement &x);

/// f ⊗ g applied term by term.
ScfTensor apply_each(const ScfTensor &x, ScfElement (*left)(const ScfElement &),
                     ScfElement (*right)(const ScfElement &));

/// The identity map, usable with apply_each.
ScfElement identity_map(const ScfElement &x);

} // namespace uthopf
