#pragma once

// Enumerated matrix groups over prime fields.
//
// Matrices are indexed by the positions of a ground set's labels in
// increasing order, so a matrix over ground {2, 5, 7} has row 0 for label 2.
// Every group is fully enumerated; elements are sorted lexicographically on
// their row-major entries and conjugacy representatives are least indices.

#include "uthopf/combinatorics.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace uthopf {

class PrimeField {
public:
  /// Throws InvalidArgument unless p is a prime below 37.
  explicit PrimeField(int p);

  int p() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int neg(int a) const { return (p_ - a) % p_; }
  int inv(int a) const;
  int reduce(long long a) const;

  friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
  int p_;
};

class FqMatrix {
public:
  static constexpr int kMaxDim = 6;

  FqMatrix() = default;
  explicit FqMatrix(int dim);

  static FqMatrix identity(int dim);
  static FqMatrix from_rows(const std::vector<std::vector<int>> &rows, const PrimeField &f);

  int dim() const { return dim_; }
  int operator()(int r, int c) const { return a_[r * dim_ + c]; }
  void set(int r, int c, int v) { a_[r * dim_ + c] = static_cast<std::uint8_t>(v); }

  /// Row-major entries, one base-36 digit each.
  std::string digits() const;
  std::size_t hash() const;

  friend bool operator==(const FqMatrix &a, const FqMatrix &b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }
  friend std::strong_ordering operator<=>(const FqMatrix &a, const FqMatrix &b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0)
      return c;
    return a.a_ <=> b.a_;
  }

private:
  int dim_ = 0;
  std::array<std::uint8_t, kMaxDim * kMaxDim> a_{};
};

struct FqMatrixHash {
  std::size_t operator()(const FqMatrix &m) const { return m.hash(); }
};

FqMatrix multiply(const FqMatrix &a, const FqMatrix &b, const PrimeField &f);
FqMatrix transpose(const FqMatrix &a);
int rank(const FqMatrix &a, const PrimeField &f);
/// Throws InvalidArgument on a singular matrix.
FqMatrix inverse(const FqMatrix &a, const PrimeField &f);

// ---------------------------------------------------------------------------
// Label-addressed matrix helpers

/// Entry (i, j) of `x`, addressed by labels of `ground`.
int entry(const FqMatrix &x, const LabelSet &ground, Label i, Label j);

/// The principal submatrix on `subset` ⊆ `ground`.
FqMatrix submatrix(const FqMatrix &x, const LabelSet &ground, const LabelSet &subset);

/// ^σX over σ(ground): (^σX)_{σ(i),σ(j)} = X_{i,j}.
FqMatrix relabel_matrix(const FqMatrix &x, const LabelSet &ground, const LabelBijection &sigma);

/// X^(1) ⊕ ... ⊕ X^(l); block k is indexed by the sorted part A_k.
FqMatrix direct_sum_embed(const std::vector<FqMatrix> &blocks, const SetComposition &parts);

/// P with P e_j = e_{w(j)}, for a permutation w of [n] given as images w(1..n).
FqMatrix permutation_matrix(const std::vector<int> &images);

/// w_I: 1..k ↦ sorted I, k+1..n ↦ sorted Iᶜ.
std::vector<int> coset_permutation(int n, const LabelSet &subset);
FqMatrix coset_rep_w(int n, const LabelSet &subset);

/// x† with x†(r, s) = x(w̃(s), w̃(r)), w̃(i) = n + 1 - i.
FqMatrix dagger(const FqMatrix &x);

// ---------------------------------------------------------------------------
// Pattern descriptors

class PatternDescriptor {
public:
  PatternDescriptor() = default;

  /// Validates that the pairs are strict, inside ground × ground,
  /// antisymmetric and closed under (i,j)+(j,k) → (i,k).
  PatternDescriptor(LabelSet ground, std::set<LabelPair> allowed);

  static PatternDescriptor from_order(const PartialOrder &order);
  static PatternDescriptor from_nuio(const Nuio &pi);

  const LabelSet &ground() const { return ground_; }
  const std::set<LabelPair> &allowed() const { return allowed_; }

  /// Unit diagonal and support of x − 1 inside the allowed pairs.
  bool admits(const FqMatrix &x) const;

  std::string describe() const;

  friend bool operator==(const PatternDescriptor &, const PatternDescriptor &) = default;
  friend auto operator<=>(const PatternDescriptor &a, const PatternDescriptor &b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0)
      return c;
    return a.allowed_ <=> b.allowed_;
  }

private:
  LabelSet ground_;
  std::set<LabelPair> allowed_;
};

/// UL = τ ∩ Eq(A), UR = τ ∩ Asc(A), UP = τ ∩ (Eq ∪ Asc), strict parts only.
struct LeviTriple {
  PatternDescriptor levi;
  PatternDescriptor radical;
  PatternDescriptor parabolic;
};

LeviTriple levi_radical_parabolic(const TotalOrder &tau, const SetComposition &a);

/// The triple for τ = 1 < ... < n and A = (I, Iᶜ) with empty parts dropped.
LeviTriple subset_triple(int n, const LabelSet &subset);

/// The composition (I, Iᶜ) of [n] with empty parts dropped.
SetComposition subset_composition(int n, const LabelSet &subset);

// ---------------------------------------------------------------------------
// Group tables

/// Largest group any enumeration may produce; UTHOPF_BUDGET overrides the
/// default of 25000.
std::size_t enumeration_budget();

class GroupTable {
public:
  using Index = std::uint32_t;

  /// Sorts and deduplicates `elements`; computes inverses and conjugacy
  /// classes.  Closure is the caller's responsibility (see is_closed).
  GroupTable(std::string name, LabelSet ground, PrimeField field, std::vector<FqMatrix> elements,
             std::optional<PatternDescriptor> pattern = std::nullopt);

  const std::string &name() const { return name_; }
  const LabelSet &ground() const { return ground_; }
  int dim() const { return static_cast<int>(ground_.size()); }
  const PrimeField &field() const { return field_; }
  /// Set for groups built by pattern_group.
  const std::optional<PatternDescriptor> &pattern() const { return pattern_; }

  std::size_t order() const { return elements_.size(); }
  const FqMatrix &element(Index i) const { return elements_[i]; }
  const std::vector<FqMatrix> &elements() const { return elements_; }

  /// Index of `x`, or order() when absent.
  Index find(const FqMatrix &x) const;
  bool contains(const FqMatrix &x) const { return find(x) != order(); }
  /// Throws InvalidArgument when `x` is not an element.
  Index index_of(const FqMatrix &x) const;

  Index identity() const { return identity_; }
  Index inverse(Index a) const { return inverse_[a]; }
  Index multiply(Index a, Index b) const;
  /// x · g · x⁻¹.
  Index conjugate(Index g, Index x) const;

  std::size_t class_count() const { return reps_.size(); }
  std::size_t class_of(Index g) const { return class_of_[g]; }
  Index class_rep(std::size_t c) const { return reps_[c]; }
  std::size_t class_size(std::size_t c) const { return class_sizes_[c]; }
  const std::vector<Index> &class_reps() const { return reps_; }

  /// x · rep(c) · x⁻¹ for every element index x.
  const std::vector<Index> &rep_conjugates(std::size_t c) const { return rep_conj_[c]; }

  /// Full O(|G|²) closure check under products and inverses.
  bool is_closed() const;

private:
  std::string name_;
  LabelSet ground_;
  PrimeField field_;
  std::optional<PatternDescriptor> pattern_;
  std::vector<FqMatrix> elements_;
  std::unordered_map<FqMatrix, Index, FqMatrixHash> index_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
  std::vector<std::size_t> class_of_;
  std::vector<Index> reps_;
  std::vector<std::size_t> class_sizes_;
  std::vector<std::vector<Index>> rep_conj_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// UT(π) for a descriptor; cached per (descriptor, p).  Throws
/// BudgetExceeded when q^{#allowed} exceeds the budget.
GroupPtr pattern_group(const PatternDescriptor &pattern, const PrimeField &f);

/// UT_n = UT(1 < ... < n).
GroupPtr ut_group(int n, const PrimeField &f);

/// GL_n over ground [n]; cached per (n, p).
GroupPtr general_linear_group(int n, const PrimeField &f, std::size_t budget = enumeration_budget());

/// ∏_{i<n} (qⁿ − qⁱ).
std::uint64_t gl_order(int n, int q);

/// {g ∈ G : pred(g)}; the predicate must cut out a subgroup.
GroupPtr subgroup_where(const GroupTable &g, const std::function<bool(const FqMatrix &)> &pred,
                        std::string name);

/// {w h w⁻¹ : h ∈ H}.
GroupPtr conjugate_subgroup(const GroupTable &h, const FqMatrix &w, std::string name);

/// Same ground and field, and every element of `sub` lies in `group`.
bool is_subgroup(const GroupTable &sub, const GroupTable &group);

/// `normal` ⊴ `group`, checked by conjugating every element.
bool is_normal_subgroup(const GroupTable &normal, const GroupTable &group);

/// g = g_L · g_R with g_L ∈ levi and g_R ∈ radical, found by searching the
/// radical; throws when `g` has no such factorization.
std::pair<FqMatrix, FqMatrix> semidirect_factorize(const FqMatrix &g, const GroupTable &levi,
                                                   const GroupTable &radical);

std::pair<FqMatrix, FqMatrix> semidirect_factorize(const FqMatrix &g, const TotalOrder &tau,
                                                   const SetComposition &a, const PrimeField &f);

// GL block predicates for the composition (first i, last n − i) of [n].

/// Invertible with the lower-left (n−i) × i block zero.
bool in_parabolic(const FqMatrix &g, int i, const PrimeField &f);
/// Parabolic with the upper-right block zero as well.
bool in_levi(const FqMatrix &g, int i, const PrimeField &f);
/// Identity diagonal blocks and zero lower-left block.
bool in_radical(const FqMatrix &g, int i);

} // namespace uthopf
