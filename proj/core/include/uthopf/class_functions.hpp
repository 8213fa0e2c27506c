#pragma once

// Exact class functions on enumerated groups and the transport maps between
// them.  Values are stored per element; every constructor re-checks that
// they are constant on conjugacy classes.

#include "uthopf/group_engine.hpp"
#include "uthopf/rational.hpp"

#include <functional>
#include <vector>

namespace uthopf {

class ClassFunction {
public:
  using Index = GroupTable::Index;

  /// Throws InvalidArgument unless `values` has one entry per element and
  /// is constant on conjugacy classes.
  ClassFunction(GroupPtr group, std::vector<Rational> values);

  static ClassFunction zero(GroupPtr group);
  static ClassFunction one(GroupPtr group);
  /// One value per conjugacy class, in class order.
  static ClassFunction from_class_values(GroupPtr group, const std::vector<Rational> &values);
  static ClassFunction class_indicator(GroupPtr group, std::size_t cls);
  /// Indicator of {g : pred(g)}; the set must be a union of classes.
  static ClassFunction indicator(GroupPtr group, const std::function<bool(const FqMatrix &)> &pred);

  const GroupTable &group() const { return *group_; }
  const GroupPtr &group_ptr() const { return group_; }

  const Rational &operator[](Index i) const { return values_[i]; }
  const std::vector<Rational> &values() const { return values_; }
  /// Value at `x`; throws when `x` is not an element.
  const Rational &at(const FqMatrix &x) const;
  std::vector<Rational> class_values() const;
  bool is_zero() const;

  ClassFunction &operator+=(const ClassFunction &other);
  ClassFunction &operator-=(const ClassFunction &other);
  ClassFunction &operator*=(const Rational &c);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction &b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction &b) { return a -= b; }
  friend ClassFunction operator*(const Rational &c, ClassFunction a) { return a *= c; }

  /// Same group (by identity or by name) and equal values.
  friend bool operator==(const ClassFunction &a, const ClassFunction &b);

private:
  void require_same_group(const ClassFunction &other) const;

  GroupPtr group_;
  std::vector<Rational> values_;
};

/// Groups are interchangeable when they are the same object or share a name.
bool same_group(const GroupTable &a, const GroupTable &b);

/// (1/|G|) Σ_g ψ(g) φ(g).
Rational inner_product(const ClassFunction &psi, const ClassFunction &phi);

/// ψ restricted to the subgroup `sub`.
ClassFunction restrict_to(const ClassFunction &psi, GroupPtr sub);

/// Ind ψ(g) = (1/|K|) Σ_{x∈G} ψ̇(x g x⁻¹), evaluated at class representatives.
ClassFunction induce(const ClassFunction &psi, GroupPtr group);

/// ψ on the complement L pulled back to K = L ⋉ H along K → K/H ≅ L.
ClassFunction inflate(const ClassFunction &psi, GroupPtr group, const GroupTable &kernel);

/// Def ψ(l) = (1/|H|) Σ_{h∈H} ψ(l h), on the complement L ≅ K/H.
ClassFunction deflate(const ClassFunction &psi, const GroupTable &kernel, GroupPtr complement);

/// Def∘Res from UT(τ) through UP(τ, A) onto UL(τ, A).
ClassFunction resflate(const ClassFunction &psi, const TotalOrder &tau, const SetComposition &a);

/// g ↦ (1/|UR|) Σ_{x∈UR} ψ(g x) on UL(τ, A), without the parabolic.
ClassFunction resflate_closed_form(const ClassFunction &psi, const TotalOrder &tau, const SetComposition &a);

enum class MapKind { homomorphism, antihomomorphism };

/// ψ∘f on `source`, after checking that f lands in ψ's group and respects
/// products (all pairs up to 1024 elements, a fixed sample beyond).
ClassFunction pullback(const ClassFunction &psi, GroupPtr source,
                       const std::function<FqMatrix(const FqMatrix &)> &f, MapKind kind);

// ---------------------------------------------------------------------------
// Functions on a product of two groups

/// A function on G₁ × G₂ stored as a |G₁| × |G₂| grid, constant on products
/// of conjugacy classes.
class ProductFunction {
public:
  using Index = GroupTable::Index;

  ProductFunction(GroupPtr left, GroupPtr right, std::vector<Rational> values);

  static ProductFunction zero(GroupPtr left, GroupPtr right);
  static ProductFunction tensor(const ClassFunction &a, const ClassFunction &b);

  const GroupTable &left() const { return *left_; }
  const GroupTable &right() const { return *right_; }
  const GroupPtr &left_ptr() const { return left_; }
  const GroupPtr &right_ptr() const { return right_; }

  const Rational &operator()(Index a, Index b) const { return values_[a * right_->order() + b]; }
  const std::vector<Rational> &values() const { return values_; }
  bool is_zero() const;

  /// Σ c · δ_{c₁} ⊗ δ_{c₂} over pairs of class indices with nonzero value.
  struct Term {
    Rational coeff;
    std::size_t left_class;
    std::size_t right_class;
  };
  std::vector<Term> class_terms() const;

  /// (a, b) ↦ T(b, a) on G₂ × G₁.
  ProductFunction swapped() const;

  ProductFunction &operator+=(const ProductFunction &other);
  ProductFunction &operator*=(const Rational &c);
  friend ProductFunction operator+(ProductFunction a, const ProductFunction &b) { return a += b; }
  friend ProductFunction operator*(const Rational &c, ProductFunction a) { return a *= c; }
  friend bool operator==(const ProductFunction &a, const ProductFunction &b);

private:
  GroupPtr left_, right_;
  std::vector<Rational> values_;
};

/// st_(I, Iᶜ): a class function on UL_I ⊆ UT_n transported to
/// UT_|I| × UT_|Iᶜ| through the canonical relabelling of each block.
ProductFunction straighten(const ClassFunction &psi, int n, const LabelSet &subset);

/// Inverse of straighten; the result lives on UL_I.
ClassFunction unstraighten(const ProductFunction &t, int n, const LabelSet &subset);

} // namespace uthopf
