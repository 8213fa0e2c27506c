#pragma once

// Label-level combinatorics: set compositions, partial and total orders,
// natural unit interval orders (NUIOs), Dyck words and the statistics that
// feed the Hopf structure constants.
//
// Every ground set is a finite set of nonnegative integer labels stored as a
// strictly increasing vector.  Arbitrary labelled sets are modelled by
// relabelling through a LabelBijection.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace uthopf {

using Label = int;
using LabelSet = std::vector<Label>;
using LabelPair = std::pair<Label, Label>;

/// Sorts and validates a list of labels (nonnegative, no duplicates).
LabelSet make_label_set(std::vector<Label> labels);

/// The set {1, ..., n}.
LabelSet interval(int n);

bool is_subset(const LabelSet &sub, const LabelSet &super);
LabelSet set_union(const LabelSet &a, const LabelSet &b);
LabelSet set_intersection(const LabelSet &a, const LabelSet &b);
LabelSet set_difference(const LabelSet &a, const LabelSet &b);
bool contains(const LabelSet &set, Label x);

/// All subsets of `ground`, ordered by bitmask over the sorted labels.
std::vector<LabelSet> all_subsets(const LabelSet &ground);

// ---------------------------------------------------------------------------
// Set compositions

class SetComposition {
public:
  /// The unique composition of the empty set.
  SetComposition() = default;

  /// Validates that the parts are nonempty and pairwise disjoint.
  explicit SetComposition(std::vector<std::vector<Label>> parts);

  const LabelSet &ground() const { return ground_; }
  const std::vector<LabelSet> &parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }

  /// Index of the part containing `x`; throws if `x` is not in the ground.
  std::size_t part_of(Label x) const;

  friend bool operator==(const SetComposition &, const SetComposition &) = default;
  friend auto operator<=>(const SetComposition &a, const SetComposition &b) {
    return a.parts_ <=> b.parts_;
  }

private:
  LabelSet ground_;
  std::vector<LabelSet> parts_;
};

/// A · B over the disjoint union of the ground sets.
SetComposition concat(const SetComposition &a, const SetComposition &b);

/// (C_1 ∩ I, ..., C_l ∩ I) with empty intersections removed.
SetComposition restrict_composition(const SetComposition &c, const LabelSet &subset);

/// True iff B = B|A_1 · ... · B|A_l.
bool refines(const SetComposition &b, const SetComposition &a);

/// A ∧ B = B|A_1 · ... · B|A_l.
SetComposition tits_product(const SetComposition &a, const SetComposition &b);

/// Every set composition of `ground` (ordered set partitions), sorted.
std::vector<SetComposition> all_compositions(const LabelSet &ground);

/// The A-ascents, A-equalities and A-inversions of a composition; together
/// they partition ground × ground.
struct PairPartition {
  std::set<LabelPair> ascents;
  std::set<LabelPair> equalities;
  std::set<LabelPair> inversions;
};

PairPartition asc_eq_inv(const SetComposition &a);

// ---------------------------------------------------------------------------
// Label bijections

class LabelBijection {
public:
  LabelBijection() = default;

  /// Validates that the pairing is a bijection between its key and value sets.
  explicit LabelBijection(std::map<Label, Label> map);

  static LabelBijection identity(const LabelSet &ground);

  const LabelSet &domain() const { return domain_; }
  const LabelSet &codomain() const { return codomain_; }
  const std::map<Label, Label> &map() const { return map_; }

  Label operator()(Label x) const;
  LabelSet apply(const LabelSet &set) const;
  LabelBijection inverse() const;

  friend bool operator==(const LabelBijection &, const LabelBijection &) = default;

private:
  std::map<Label, Label> map_;
  LabelSet domain_;
  LabelSet codomain_;
};

/// The order-preserving bijection I → {1, ..., |I|}.
LabelBijection cano(const LabelSet &subset);

// ---------------------------------------------------------------------------
// Partial and total orders

/// A partial order stored reflexively and transitively closed, so |relation|
/// counts the diagonal.
class PartialOrder {
public:
  PartialOrder() = default;

  /// Transitive closure of `strict` plus the diagonal; throws if the closure
  /// is not antisymmetric or mentions labels outside `ground`.
  static PartialOrder from_strict(LabelSet ground, const std::vector<LabelPair> &strict);

  /// Validates an already closed relation (reflexive, antisymmetric,
  /// transitive, contained in ground × ground).
  static PartialOrder from_relation(LabelSet ground, std::set<LabelPair> relation);

  static PartialOrder antichain(LabelSet ground);
  static PartialOrder chain(const std::vector<Label> &order);

  const LabelSet &ground() const { return ground_; }
  const std::set<LabelPair> &relation() const { return relation_; }
  std::size_t size() const { return relation_.size(); }

  /// Sorted strict pairs (i, j), i != j: the canonical serialization.
  std::vector<LabelPair> strict_pairs() const;

  bool related(Label i, Label j) const { return relation_.count({i, j}) != 0; }
  bool is_total() const;

  friend bool operator==(const PartialOrder &, const PartialOrder &) = default;
  friend auto operator<=>(const PartialOrder &a, const PartialOrder &b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0)
      return c;
    return a.relation_ <=> b.relation_;
  }

private:
  PartialOrder(LabelSet ground, std::set<LabelPair> relation)
      : ground_(std::move(ground)), relation_(std::move(relation)) {}

  LabelSet ground_;
  std::set<LabelPair> relation_;
};

/// π1 ⊔ π2 ⊔ (I1 × I2).
PartialOrder ordinal_sum(const PartialOrder &first, const PartialOrder &second);

/// relation ∩ (J × J).
PartialOrder restrict_order(const PartialOrder &order, const LabelSet &subset);

/// {(σ(i), σ(j)) : (i, j) ∈ π}.
PartialOrder relabel_order(const PartialOrder &order, const LabelBijection &sigma);

class TotalOrder {
public:
  TotalOrder() = default;

  /// a_1 < a_2 < ... < a_k.
  explicit TotalOrder(std::vector<Label> chain);

  /// Throws unless `order` has binomial(|I|+1, 2) relations.
  static TotalOrder from_partial(const PartialOrder &order);

  const std::vector<Label> &chain() const { return chain_; }
  const PartialOrder &order() const { return order_; }
  const LabelSet &ground() const { return order_.ground(); }

  /// Position of `x` in the chain.
  std::size_t rank(Label x) const;
  bool less(Label i, Label j) const { return i != j && order_.related(i, j); }

  friend bool operator==(const TotalOrder &a, const TotalOrder &b) { return a.chain_ == b.chain_; }

private:
  std::vector<Label> chain_;
  PartialOrder order_;
};

/// All total orders of `ground` in lexicographic order of their chains.
std::vector<TotalOrder> all_total_orders(const LabelSet &ground);

TotalOrder restrict_total(const TotalOrder &tau, const LabelSet &subset);
TotalOrder relabel_total(const TotalOrder &tau, const LabelBijection &sigma);

// ---------------------------------------------------------------------------
// Natural unit interval orders

/// A natural unit interval order of [n].  Stores only the sorted strict
/// pairs, which is also the canonical ordering key (degree first).
class Nuio {
public:
  Nuio() = default;

  /// Closes `strict` transitively and validates the NUIO conditions.
  static Nuio from_strict(int n, const std::vector<LabelPair> &strict);
  static Nuio from_order(const PartialOrder &order);

  static Nuio antichain(int n);
  static Nuio chain(int n);

  int size() const { return n_; }
  const std::vector<LabelPair> &strict_pairs() const { return strict_; }
  PartialOrder order() const;
  bool related(Label i, Label j) const;

  friend bool operator==(const Nuio &, const Nuio &) = default;
  friend auto operator<=>(const Nuio &a, const Nuio &b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    return a.strict_ <=> b.strict_;
  }

private:
  int n_ = 0;
  std::vector<LabelPair> strict_;
};

/// True iff `order` extends 1 < ... < n and is closed under moving the
/// smaller index down and the larger index up.  Throws when the ground set
/// is not of the form [n].
bool is_nuio(const PartialOrder &order);

/// All of NO_n, in lexicographic order of the sorted strict-pair lists.
std::vector<Nuio> enumerate_nuios(int n);

/// Word over {E, S}: every prefix has #E ≥ #S and both counts equal n.
class DyckWord {
public:
  DyckWord() = default;
  explicit DyckWord(std::string word);

  const std::string &str() const { return word_; }
  int semilength() const { return static_cast<int>(word_.size() / 2); }

  friend bool operator==(const DyckWord &, const DyckWord &) = default;

private:
  std::string word_;
};

/// Staircase path read from the north-west corner of the n × n matrix: the
/// cells right of the path in each row are the free (related) cells.
DyckWord nuio_to_dyck(const Nuio &pi);
Nuio dyck_to_nuio(const DyckWord &word);

struct IncGraph {
  LabelSet vertices;
  std::set<LabelPair> edges; // (i, j) with i < j

  friend bool operator==(const IncGraph &, const IncGraph &) = default;
};

/// Edge {i, j} for every incomparable pair.
IncGraph inc_graph(const PartialOrder &order);

/// cano_I(π|_I), a NUIO on [|I|].
Nuio shifted_restrict(const Nuio &pi, const LabelSet &subset);

/// π ⊕ (ρ shifted up by |π|), a NUIO on [n + m].
Nuio shifted_ordinal_sum(const Nuio &pi, const Nuio &rho);

/// |{(i, j) ∈ I × Iᶜ : i < j, (i, j) ∉ π}|.
int asc_count(const Nuio &pi, const LabelSet &subset);

/// {(w(j), w(i)) : (i, j) ∈ π} with w(i) = n + 1 - i.
Nuio dagger_nuio(const Nuio &pi);

/// Catalan number C_n.
long long catalan(int n);

} // namespace uthopf
