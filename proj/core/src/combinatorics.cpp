#include "uthopf/combinatorics.hpp"

#include "uthopf/error.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace uthopf {

namespace {

std::string show(const LabelSet &set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(set[i]);
  }
  return out + "}";
}

// Warshall closure over the ground labels.
std::set<LabelPair> transitive_closure(const LabelSet &ground, std::set<LabelPair> rel) {
  for (Label k : ground)
    for (Label i : ground) {
      if (!rel.count({i, k}))
        continue;
      for (Label j : ground)
        if (rel.count({k, j}))
          rel.insert({i, j});
    }
  return rel;
}

} // namespace

LabelSet make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InvalidArgument("duplicate label in " + show(labels));
  if (!labels.empty() && labels.front() < 0)
    throw InvalidArgument("labels must be nonnegative");
  return labels;
}

LabelSet interval(int n) {
  LabelSet out(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

bool is_subset(const LabelSet &sub, const LabelSet &super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

LabelSet set_union(const LabelSet &a, const LabelSet &b) {
  LabelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_intersection(const LabelSet &a, const LabelSet &b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_difference(const LabelSet &a, const LabelSet &b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const LabelSet &set, Label x) { return std::binary_search(set.begin(), set.end(), x); }

std::vector<LabelSet> all_subsets(const LabelSet &ground) {
  std::vector<LabelSet> out;
  const std::size_t k = ground.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    LabelSet s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i))
        s.push_back(ground[i]);
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

SetComposition::SetComposition(std::vector<std::vector<Label>> parts) {
  std::vector<Label> all;
  for (auto &part : parts) {
    if (part.empty())
      throw InvalidArgument("set composition has an empty part");
    LabelSet p = make_label_set(std::move(part));
    all.insert(all.end(), p.begin(), p.end());
    parts_.push_back(std::move(p));
  }
  ground_ = make_label_set(std::move(all)); // rejects overlapping parts
}

std::size_t SetComposition::part_of(Label x) const {
  for (std::size_t r = 0; r < parts_.size(); ++r)
    if (contains(parts_[r], x))
      return r;
  throw InvalidArgument("label " + std::to_string(x) + " not in composition ground");
}

SetComposition concat(const SetComposition &a, const SetComposition &b) {
  if (!set_intersection(a.ground(), b.ground()).empty())
    throw InvalidArgument("concatenation of compositions with overlapping ground sets");
  std::vector<std::vector<Label>> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return SetComposition(std::move(parts));
}

SetComposition restrict_composition(const SetComposition &c, const LabelSet &subset) {
  if (!is_subset(subset, c.ground()))
    throw InvalidArgument("restriction set " + show(subset) + " is not a subset of " + show(c.ground()));
  std::vector<std::vector<Label>> parts;
  for (const auto &part : c.parts()) {
    auto cut = set_intersection(part, subset);
    if (!cut.empty())
      parts.push_back(std::move(cut));
  }
  return SetComposition(std::move(parts));
}

namespace {

void require_same_ground(const SetComposition &a, const SetComposition &b) {
  if (a.ground() != b.ground())
    throw InvalidArgument("set compositions have different ground sets " + show(a.ground()) + " and " +
                          show(b.ground()));
}

} // namespace

SetComposition tits_product(const SetComposition &a, const SetComposition &b) {
  require_same_ground(a, b);
  SetComposition out;
  for (const auto &part : a.parts())
    out = concat(out, restrict_composition(b, part));
  return out;
}

bool refines(const SetComposition &b, const SetComposition &a) {
  require_same_ground(a, b);
  return tits_product(a, b) == b;
}

std::vector<SetComposition> all_compositions(const LabelSet &ground) {
  std::vector<SetComposition> out;
  if (ground.empty()) {
    out.emplace_back();
    return out;
  }
  // First part is any nonempty subset; recurse on the rest.
  for (const auto &first : all_subsets(ground)) {
    if (first.empty())
      continue;
    for (const auto &rest : all_compositions(set_difference(ground, first)))
      out.push_back(concat(SetComposition({first}), rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PairPartition asc_eq_inv(const SetComposition &a) {
  PairPartition out;
  for (Label i : a.ground())
    for (Label j : a.ground()) {
      const auto r = a.part_of(i);
      const auto s = a.part_of(j);
      if (r < s)
        out.ascents.insert({i, j});
      else if (r == s)
        out.equalities.insert({i, j});
      else
        out.inversions.insert({i, j});
    }
  return out;
}

// ---------------------------------------------------------------------------

LabelBijection::LabelBijection(std::map<Label, Label> map) : map_(std::move(map)) {
  std::vector<Label> keys, values;
  for (const auto &[k, v] : map_) {
    keys.push_back(k);
    values.push_back(v);
  }
  domain_ = make_label_set(std::move(keys));
  codomain_ = make_label_set(std::move(values)); // duplicate values: not injective
}

LabelBijection LabelBijection::identity(const LabelSet &ground) {
  std::map<Label, Label> m;
  for (Label x : ground)
    m[x] = x;
  return LabelBijection(std::move(m));
}

Label LabelBijection::operator()(Label x) const {
  auto it = map_.find(x);
  if (it == map_.end())
    throw InvalidArgument("label " + std::to_string(x) + " outside bijection domain " + show(domain_));
  return it->second;
}

LabelSet LabelBijection::apply(const LabelSet &set) const {
  std::vector<Label> out;
  for (Label x : set)
    out.push_back((*this)(x));
  return make_label_set(std::move(out));
}

LabelBijection LabelBijection::inverse() const {
  std::map<Label, Label> m;
  for (const auto &[k, v] : map_)
    m[v] = k;
  return LabelBijection(std::move(m));
}

LabelBijection cano(const LabelSet &subset) {
  const LabelSet sorted = make_label_set(subset);
  std::map<Label, Label> m;
  for (std::size_t r = 0; r < sorted.size(); ++r)
    m[sorted[r]] = static_cast<Label>(r + 1);
  return LabelBijection(std::move(m));
}

// ---------------------------------------------------------------------------

PartialOrder PartialOrder::from_strict(LabelSet ground, const std::vector<LabelPair> &strict) {
  ground = make_label_set(std::move(ground));
  std::set<LabelPair> rel;
  for (Label x : ground)
    rel.insert({x, x});
  for (const auto &[i, j] : strict) {
    if (!contains(ground, i) || !contains(ground, j))
      throw InvalidArgument("relation pair outside ground set " + show(ground));
    rel.insert({i, j});
  }
  rel = transitive_closure(ground, std::move(rel));
  for (const auto &[i, j] : rel)
    if (i != j && rel.count({j, i}))
      throw InvalidArgument("relation is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) +
                            ")");
  return PartialOrder(std::move(ground), std::move(rel));
}

PartialOrder PartialOrder::from_relation(LabelSet ground, std::set<LabelPair> relation) {
  ground = make_label_set(std::move(ground));
  for (Label x : ground)
    if (!relation.count({x, x}))
      throw InvalidArgument("relation is not reflexive at " + std::to_string(x));
  for (const auto &[i, j] : relation) {
    if (!contains(ground, i) || !contains(ground, j))
      throw InvalidArgument("relation pair outside ground set " + show(ground));
    if (i != j && relation.count({j, i}))
      throw InvalidArgument("relation is not antisymmetric");
  }
  if (transitive_closure(ground, relation) != relation)
    throw InvalidArgument("relation is not transitively closed");
  return PartialOrder(std::move(ground), std::move(relation));
}

PartialOrder PartialOrder::antichain(LabelSet ground) { return from_strict(std::move(ground), {}); }

PartialOrder PartialOrder::chain(const std::vector<Label> &order) {
  std::vector<LabelPair> strict;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      strict.emplace_back(order[i], order[j]);
  return from_strict(LabelSet(order.begin(), order.end()), strict);
}

std::vector<LabelPair> PartialOrder::strict_pairs() const {
  std::vector<LabelPair> out;
  for (const auto &p : relation_)
    if (p.first != p.second)
      out.push_back(p);
  return out;
}

bool PartialOrder::is_total() const {
  const std::size_t k = ground_.size();
  return relation_.size() == k * (k + 1) / 2;
}

PartialOrder ordinal_sum(const PartialOrder &first, const PartialOrder &second) {
  if (!set_intersection(first.ground(), second.ground()).empty())
    throw InvalidArgument("ordinal sum of posets with overlapping ground sets");
  std::set<LabelPair> rel = first.relation();
  rel.insert(second.relation().begin(), second.relation().end());
  for (Label i : first.ground())
    for (Label j : second.ground())
      rel.insert({i, j});
  return PartialOrder::from_relation(set_union(first.ground(), second.ground()), std::move(rel));
}

PartialOrder restrict_order(const PartialOrder &order, const LabelSet &subset) {
  if (!is_subset(subset, order.ground()))
    throw InvalidArgument("restriction set " + show(subset) + " is not a subset of " + show(order.ground()));
  std::set<LabelPair> rel;
  for (const auto &[i, j] : order.relation())
    if (contains(subset, i) && contains(subset, j))
      rel.insert({i, j});
  return PartialOrder::from_relation(subset, std::move(rel));
}

PartialOrder relabel_order(const PartialOrder &order, const LabelBijection &sigma) {
  if (sigma.domain() != order.ground())
    throw InvalidArgument("bijection domain " + show(sigma.domain()) + " differs from poset ground " +
                          show(order.ground()));
  std::set<LabelPair> rel;
  for (const auto &[i, j] : order.relation())
    rel.insert({sigma(i), sigma(j)});
  return PartialOrder::from_relation(sigma.codomain(), std::move(rel));
}

TotalOrder::TotalOrder(std::vector<Label> chain)
    : chain_(std::move(chain)), order_(PartialOrder::chain(chain_)) {}

TotalOrder TotalOrder::from_partial(const PartialOrder &order) {
  if (!order.is_total())
    throw InvalidArgument("partial order is not total");
  std::vector<Label> chain = order.ground();
  // In a total order, rank = number of elements below.
  std::sort(chain.begin(), chain.end(), [&](Label a, Label b) { return a != b && order.related(a, b); });
  return TotalOrder(std::move(chain));
}

std::size_t TotalOrder::rank(Label x) const {
  auto it = std::find(chain_.begin(), chain_.end(), x);
  if (it == chain_.end())
    throw InvalidArgument("label " + std::to_string(x) + " not in total order");
  return static_cast<std::size_t>(it - chain_.begin());
}

std::vector<TotalOrder> all_total_orders(const LabelSet &ground) {
  std::vector<TotalOrder> out;
  std::vector<Label> perm = ground;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TotalOrder restrict_total(const TotalOrder &tau, const LabelSet &subset) {
  if (!is_subset(subset, tau.ground()))
    throw InvalidArgument("restriction set " + show(subset) + " is not a subset of the total order's ground");
  std::vector<Label> chain;
  for (Label x : tau.chain())
    if (contains(subset, x))
      chain.push_back(x);
  return TotalOrder(std::move(chain));
}

TotalOrder relabel_total(const TotalOrder &tau, const LabelBijection &sigma) {
  if (sigma.domain() != tau.ground())
    throw InvalidArgument("bijection domain differs from total order ground");
  std::vector<Label> chain;
  for (Label x : tau.chain())
    chain.push_back(sigma(x));
  return TotalOrder(std::move(chain));
}

// ---------------------------------------------------------------------------

bool is_nuio(const PartialOrder &order) {
  const int n = static_cast<int>(order.ground().size());
  if (order.ground() != interval(n))
    throw InvalidArgument("NUIO test needs ground set [n], got " + show(order.ground()));
  for (const auto &[j, k] : order.relation()) {
    if (j > k)
      return false; // does not extend 1 < ... < n
    if (j == k)
      continue;
    for (int i = 1; i <= j; ++i)
      for (int l = k; l <= n; ++l)
        if (!order.related(i, l))
          return false;
  }
  return true;
}

Nuio Nuio::from_order(const PartialOrder &order) {
  if (!is_nuio(order))
    throw InvalidArgument("partial order is not a natural unit interval order");
  Nuio out;
  out.n_ = static_cast<int>(order.ground().size());
  out.strict_ = order.strict_pairs();
  return out;
}

Nuio Nuio::from_strict(int n, const std::vector<LabelPair> &strict) {
  if (n < 0)
    throw InvalidArgument("negative NUIO size");
  return from_order(PartialOrder::from_strict(interval(n), strict));
}

Nuio Nuio::antichain(int n) { return from_strict(n, {}); }

Nuio Nuio::chain(int n) {
  std::vector<LabelPair> strict;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      strict.emplace_back(i, j);
  return from_strict(n, strict);
}

PartialOrder Nuio::order() const { return PartialOrder::from_strict(interval(n_), strict_); }

bool Nuio::related(Label i, Label j) const {
  if (i == j)
    return i >= 1 && i <= n_;
  return std::binary_search(strict_.begin(), strict_.end(), LabelPair{i, j});
}

namespace {

// Row r (1-based) of the staircase: cells (r, c) with c > bound[r-1] are free.
Nuio nuio_from_bounds(int n, const std::vector<int> &bound) {
  std::vector<LabelPair> strict;
  for (int r = 1; r <= n; ++r)
    for (int c = bound[static_cast<std::size_t>(r - 1)] + 1; c <= n; ++c)
      strict.emplace_back(r, c);
  return Nuio::from_strict(n, strict);
}

void bounds_rec(int n, int r, int lo, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (r > n) {
    out.push_back(cur);
    return;
  }
  for (int b = std::max(lo, r); b <= n; ++b) {
    cur.push_back(b);
    bounds_rec(n, r + 1, b, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Nuio> enumerate_nuios(int n) {
  if (n < 0)
    throw InvalidArgument("negative NUIO size");
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  bounds_rec(n, 1, 1, cur, all);
  std::vector<Nuio> out;
  for (const auto &b : all)
    out.push_back(nuio_from_bounds(n, b));
  std::sort(out.begin(), out.end());
  return out;
}

DyckWord::DyckWord(std::string word) : word_(std::move(word)) {
  int height = 0;
  int es = 0;
  for (char ch : word_) {
    if (ch == 'E') {
      ++height;
      ++es;
    } else if (ch == 'S') {
      if (--height < 0)
        throw InvalidArgument("Dyck word prefix has more S than E: " + word_);
    } else {
      throw InvalidArgument("Dyck word letters must be E or S: " + word_);
    }
  }
  if (height != 0)
    throw InvalidArgument("Dyck word is unbalanced: " + word_);
}

DyckWord nuio_to_dyck(const Nuio &pi) {
  const int n = pi.size();
  std::string word;
  int column = 0;
  for (int r = 1; r <= n; ++r) {
    // Last non-free column in row r.
    int bound = n;
    for (int c = r + 1; c <= n; ++c)
      if (pi.related(r, c)) {
        bound = c - 1;
        break;
      }
    word.append(static_cast<std::size_t>(bound - column), 'E');
    column = bound;
    word.push_back('S');
  }
  return DyckWord(std::move(word));
}

Nuio dyck_to_nuio(const DyckWord &word) {
  const int n = word.semilength();
  std::vector<int> bound;
  int column = 0;
  for (char ch : word.str()) {
    if (ch == 'E')
      ++column;
    else
      bound.push_back(column);
  }
  return nuio_from_bounds(n, bound);
}

IncGraph inc_graph(const PartialOrder &order) {
  IncGraph g{order.ground(), {}};
  const auto &v = order.ground();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (!order.related(v[a], v[b]) && !order.related(v[b], v[a]))
        g.edges.insert({v[a], v[b]});
  return g;
}

Nuio shifted_restrict(const Nuio &pi, const LabelSet &subset) {
  const auto ground = interval(pi.size());
  if (!is_subset(subset, ground))
    throw InvalidArgument("shifted restriction set " + show(subset) + " is not a subset of [" +
                          std::to_string(pi.size()) + "]");
  const auto restricted = restrict_order(pi.order(), subset);
  return Nuio::from_order(relabel_order(restricted, cano(subset)));
}

Nuio shifted_ordinal_sum(const Nuio &pi, const Nuio &rho) {
  const int n = pi.size();
  const int m = rho.size();
  const auto upper = set_difference(interval(n + m), interval(n));
  const auto shifted = relabel_order(rho.order(), cano(upper).inverse());
  return Nuio::from_order(ordinal_sum(pi.order(), shifted));
}

int asc_count(const Nuio &pi, const LabelSet &subset) {
  const auto ground = interval(pi.size());
  if (!is_subset(subset, ground))
    throw InvalidArgument("ascent set " + show(subset) + " is not a subset of [" + std::to_string(pi.size()) + "]");
  int count = 0;
  for (Label i : subset)
    for (Label j = i + 1; j <= pi.size(); ++j)
      if (!contains(subset, j) && !pi.related(i, j))
        ++count;
  return count;
}

Nuio dagger_nuio(const Nuio &pi) {
  const int n = pi.size();
  std::vector<LabelPair> strict;
  for (const auto &[i, j] : pi.strict_pairs())
    strict.emplace_back(n + 1 - j, n + 1 - i);
  return Nuio::from_strict(n, strict);
}

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k)
    c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

} // namespace uthopf
