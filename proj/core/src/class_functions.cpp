#include "uthopf/class_functions.hpp"

#include "uthopf/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace uthopf {

namespace {

constexpr GroupTable::Index kAbsent = static_cast<GroupTable::Index>(-1);

// For each element of `sub`, its index in `group`; throws if not contained.
std::vector<GroupTable::Index> embedding(const GroupTable &sub, const GroupTable &group) {
  if (sub.ground() != group.ground() || !(sub.field() == group.field()))
    throw InvalidArgument(sub.name() + " and " + group.name() + " act on different spaces");
  std::vector<GroupTable::Index> out(sub.order());
  for (GroupTable::Index k = 0; k < sub.order(); ++k) {
    const auto g = group.find(sub.element(k));
    if (g == group.order())
      throw InvalidArgument(sub.name() + " is not contained in " + group.name());
    out[k] = g;
  }
  return out;
}

// Group index → subgroup index, or kAbsent.
std::vector<GroupTable::Index> membership(const GroupTable &sub, const GroupTable &group) {
  std::vector<GroupTable::Index> out(group.order(), kAbsent);
  const auto emb = embedding(sub, group);
  for (GroupTable::Index k = 0; k < emb.size(); ++k)
    out[emb[k]] = k;
  return out;
}

// Normality results keyed by group names; groups are immutable so the
// answer never changes.
bool cached_normal(const GroupTable &normal, const GroupTable &group) {
  static std::mutex m;
  static std::map<std::pair<std::string, std::string>, bool> cache;
  const auto key = std::make_pair(normal.name(), group.name());
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  const bool ok = is_normal_subgroup(normal, group);
  std::lock_guard lock(m);
  cache.emplace(key, ok);
  return ok;
}

void require_class_constant(const GroupTable &g, const std::vector<Rational> &values) {
  std::vector<const Rational *> seen(g.class_count(), nullptr);
  for (GroupTable::Index i = 0; i < g.order(); ++i) {
    const auto c = g.class_of(i);
    if (!seen[c])
      seen[c] = &values[i];
    else if (*seen[c] != values[i])
      throw InvalidArgument("values on " + g.name() + " are not constant on conjugacy classes");
  }
}

} // namespace

bool same_group(const GroupTable &a, const GroupTable &b) { return &a == &b || a.name() == b.name(); }

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(GroupPtr group, std::vector<Rational> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_)
    throw InvalidArgument("class function needs a group");
  if (values_.size() != group_->order())
    throw InvalidArgument("expected " + std::to_string(group_->order()) + " values on " + group_->name());
  require_class_constant(*group_, values_);
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  const auto n = group->order();
  return ClassFunction(std::move(group), std::vector<Rational>(n));
}

ClassFunction ClassFunction::one(GroupPtr group) {
  const auto n = group->order();
  return ClassFunction(std::move(group), std::vector<Rational>(n, Rational(1)));
}

ClassFunction ClassFunction::from_class_values(GroupPtr group, const std::vector<Rational> &values) {
  if (values.size() != group->class_count())
    throw InvalidArgument("expected one value per class of " + group->name());
  std::vector<Rational> out(group->order());
  for (Index i = 0; i < group->order(); ++i)
    out[i] = values[group->class_of(i)];
  return ClassFunction(std::move(group), std::move(out));
}

ClassFunction ClassFunction::class_indicator(GroupPtr group, std::size_t cls) {
  if (cls >= group->class_count())
    throw InvalidArgument("class index out of range");
  std::vector<Rational> out(group->order());
  for (Index i = 0; i < group->order(); ++i)
    if (group->class_of(i) == cls)
      out[i] = 1;
  return ClassFunction(std::move(group), std::move(out));
}

ClassFunction ClassFunction::indicator(GroupPtr group, const std::function<bool(const FqMatrix &)> &pred) {
  std::vector<Rational> out(group->order());
  for (Index i = 0; i < group->order(); ++i)
    if (pred(group->element(i)))
      out[i] = 1;
  return ClassFunction(std::move(group), std::move(out));
}

const Rational &ClassFunction::at(const FqMatrix &x) const { return values_[group_->index_of(x)]; }

std::vector<Rational> ClassFunction::class_values() const {
  std::vector<Rational> out;
  out.reserve(group_->class_count());
  for (auto rep : group_->class_reps())
    out.push_back(values_[rep]);
  return out;
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational &v) { return v == 0; });
}

void ClassFunction::require_same_group(const ClassFunction &other) const {
  if (!same_group(*group_, *other.group_))
    throw InvalidArgument("class functions live on different groups: " + group_->name() + " and " +
                          other.group_->name());
}

ClassFunction &ClassFunction::operator+=(const ClassFunction &other) {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += other.values_[i];
  return *this;
}

ClassFunction &ClassFunction::operator-=(const ClassFunction &other) {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= other.values_[i];
  return *this;
}

ClassFunction &ClassFunction::operator*=(const Rational &c) {
  for (auto &v : values_)
    v *= c;
  return *this;
}

bool operator==(const ClassFunction &a, const ClassFunction &b) {
  return same_group(*a.group_, *b.group_) && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------
// Transport maps

Rational inner_product(const ClassFunction &psi, const ClassFunction &phi) {
  if (!same_group(psi.group(), phi.group()))
    throw InvalidArgument("inner product of class functions on different groups");
  Rational sum = 0;
  const auto &g = psi.group();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto rep = g.class_rep(c);
    sum += Rational(static_cast<std::int64_t>(g.class_size(c))) * psi[rep] * phi[rep];
  }
  return sum / Rational(static_cast<std::int64_t>(g.order()));
}

ClassFunction restrict_to(const ClassFunction &psi, GroupPtr sub) {
  const auto emb = embedding(*sub, psi.group());
  std::vector<Rational> out(sub->order());
  for (std::size_t k = 0; k < emb.size(); ++k)
    out[k] = psi[emb[k]];
  return ClassFunction(std::move(sub), std::move(out));
}

ClassFunction induce(const ClassFunction &psi, GroupPtr group) {
  const auto member = membership(psi.group(), *group);
  std::vector<Rational> per_class(group->class_count());
  const Rational scale(1, static_cast<std::int64_t>(psi.group().order()));
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    Rational sum = 0;
    for (auto y : group->rep_conjugates(c))
      if (member[y] != kAbsent)
        sum += psi[member[y]];
    per_class[c] = sum * scale;
  }
  return ClassFunction::from_class_values(std::move(group), per_class);
}

ClassFunction inflate(const ClassFunction &psi, GroupPtr group, const GroupTable &kernel) {
  const GroupTable &l = psi.group();
  if (!cached_normal(kernel, *group))
    throw InvalidArgument(kernel.name() + " is not normal in " + group->name());
  embedding(l, *group);
  if (l.order() * kernel.order() != group->order())
    throw InvalidArgument(l.name() + " is not a complement of " + kernel.name() + " in " + group->name());
  const PrimeField &f = group->field();
  std::vector<Rational> out(group->order());
  std::vector<bool> hit(group->order(), false);
  for (GroupTable::Index a = 0; a < l.order(); ++a)
    for (const auto &h : kernel.elements()) {
      const auto k = group->index_of(multiply(l.element(a), h, f));
      if (hit[k])
        throw InvalidArgument(l.name() + " meets " + kernel.name() + " nontrivially");
      hit[k] = true;
      out[k] = psi[a];
    }
  return ClassFunction(std::move(group), std::move(out));
}

ClassFunction deflate(const ClassFunction &psi, const GroupTable &kernel, GroupPtr complement) {
  const GroupTable &k = psi.group();
  if (!cached_normal(kernel, k))
    throw InvalidArgument(kernel.name() + " is not normal in " + k.name());
  embedding(*complement, k);
  if (complement->order() * kernel.order() != k.order())
    throw InvalidArgument(complement->name() + " is not a complement of " + kernel.name());
  const PrimeField &f = k.field();
  const Rational scale(1, static_cast<std::int64_t>(kernel.order()));
  std::vector<Rational> out(complement->order());
  for (GroupTable::Index a = 0; a < complement->order(); ++a) {
    Rational sum = 0;
    for (const auto &h : kernel.elements())
      sum += psi[k.index_of(multiply(complement->element(a), h, f))];
    out[a] = sum * scale;
  }
  return ClassFunction(std::move(complement), std::move(out));
}

namespace {

void require_ut_of(const ClassFunction &psi, const TotalOrder &tau) {
  const auto &pattern = psi.group().pattern();
  if (!pattern || *pattern != PatternDescriptor::from_order(tau.order()))
    throw InvalidArgument("class function is not on UT(τ) for the given total order");
}

} // namespace

ClassFunction resflate(const ClassFunction &psi, const TotalOrder &tau, const SetComposition &a) {
  require_ut_of(psi, tau);
  const LeviTriple t = levi_radical_parabolic(tau, a);
  const PrimeField &f = psi.group().field();
  const ClassFunction on_parabolic = restrict_to(psi, pattern_group(t.parabolic, f));
  return deflate(on_parabolic, *pattern_group(t.radical, f), pattern_group(t.levi, f));
}

ClassFunction resflate_closed_form(const ClassFunction &psi, const TotalOrder &tau, const SetComposition &a) {
  require_ut_of(psi, tau);
  const LeviTriple t = levi_radical_parabolic(tau, a);
  const PrimeField &f = psi.group().field();
  const GroupPtr levi = pattern_group(t.levi, f);
  const GroupPtr radical = pattern_group(t.radical, f);
  const GroupTable &g = psi.group();
  const Rational scale(1, static_cast<std::int64_t>(radical->order()));
  std::vector<Rational> out(levi->order());
  for (GroupTable::Index l = 0; l < levi->order(); ++l) {
    Rational sum = 0;
    for (const auto &x : radical->elements())
      sum += psi[g.index_of(multiply(levi->element(l), x, f))];
    out[l] = sum * scale;
  }
  return ClassFunction(levi, std::move(out));
}

ClassFunction pullback(const ClassFunction &psi, GroupPtr source,
                       const std::function<FqMatrix(const FqMatrix &)> &f, MapKind kind) {
  const GroupTable &target = psi.group();
  std::vector<GroupTable::Index> image(source->order());
  for (GroupTable::Index k = 0; k < source->order(); ++k) {
    const auto t = target.find(f(source->element(k)));
    if (t == target.order())
      throw InvalidArgument("map does not land in " + target.name());
    image[k] = t;
  }

  auto check = [&](GroupTable::Index a, GroupTable::Index b) {
    const auto ab = source->multiply(a, b);
    const auto expect = kind == MapKind::homomorphism ? target.multiply(image[a], image[b])
                                                      : target.multiply(image[b], image[a]);
    if (image[ab] != expect)
      throw InvalidArgument("map is not structure-preserving on " + source->name());
  };
  constexpr std::size_t kExhaustive = 1024;
  if (source->order() <= kExhaustive) {
    for (GroupTable::Index a = 0; a < source->order(); ++a)
      for (GroupTable::Index b = 0; b < source->order(); ++b)
        check(a, b);
  } else {
    std::mt19937 rng(20240607u);
    std::uniform_int_distribution<GroupTable::Index> pick(0, static_cast<GroupTable::Index>(source->order() - 1));
    for (std::size_t s = 0; s < kExhaustive * 16; ++s)
      check(pick(rng), pick(rng));
  }

  std::vector<Rational> out(source->order());
  for (GroupTable::Index k = 0; k < source->order(); ++k)
    out[k] = psi[image[k]];
  return ClassFunction(std::move(source), std::move(out));
}

// ---------------------------------------------------------------------------
// ProductFunction

ProductFunction::ProductFunction(GroupPtr left, GroupPtr right, std::vector<Rational> values)
    : left_(std::move(left)), right_(std::move(right)), values_(std::move(values)) {
  if (values_.size() != left_->order() * right_->order())
    throw InvalidArgument("product function grid has the wrong size");
  std::map<std::pair<std::size_t, std::size_t>, const Rational *> seen;
  for (Index a = 0; a < left_->order(); ++a)
    for (Index b = 0; b < right_->order(); ++b) {
      const auto key = std::make_pair(left_->class_of(a), right_->class_of(b));
      const Rational &v = (*this)(a, b);
      auto [it, fresh] = seen.emplace(key, &v);
      if (!fresh && *it->second != v)
        throw InvalidArgument("product function is not constant on class pairs");
    }
}

ProductFunction ProductFunction::zero(GroupPtr left, GroupPtr right) {
  const auto n = left->order() * right->order();
  return ProductFunction(std::move(left), std::move(right), std::vector<Rational>(n));
}

ProductFunction ProductFunction::tensor(const ClassFunction &a, const ClassFunction &b) {
  std::vector<Rational> out;
  out.reserve(a.values().size() * b.values().size());
  for (const auto &x : a.values())
    for (const auto &y : b.values())
      out.push_back(x * y);
  return ProductFunction(a.group_ptr(), b.group_ptr(), std::move(out));
}

bool ProductFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational &v) { return v == 0; });
}

std::vector<ProductFunction::Term> ProductFunction::class_terms() const {
  std::vector<Term> out;
  for (std::size_t c1 = 0; c1 < left_->class_count(); ++c1)
    for (std::size_t c2 = 0; c2 < right_->class_count(); ++c2) {
      const Rational &v = (*this)(left_->class_rep(c1), right_->class_rep(c2));
      if (v != 0)
        out.push_back({v, c1, c2});
    }
  return out;
}

ProductFunction ProductFunction::swapped() const {
  std::vector<Rational> out(values_.size());
  for (Index a = 0; a < left_->order(); ++a)
    for (Index b = 0; b < right_->order(); ++b)
      out[b * left_->order() + a] = (*this)(a, b);
  return ProductFunction(right_, left_, std::move(out));
}

ProductFunction &ProductFunction::operator+=(const ProductFunction &other) {
  if (!same_group(*left_, *other.left_) || !same_group(*right_, *other.right_))
    throw InvalidArgument("product functions live on different groups");
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += other.values_[i];
  return *this;
}

ProductFunction &ProductFunction::operator*=(const Rational &c) {
  for (auto &v : values_)
    v *= c;
  return *this;
}

bool operator==(const ProductFunction &a, const ProductFunction &b) {
  return same_group(*a.left_, *b.left_) && same_group(*a.right_, *b.right_) && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------
// Straightening

namespace {

// Places (x, y) ∈ UT_|I| × UT_|Iᶜ| on the blocks I and Iᶜ of [n].
FqMatrix place_blocks(const FqMatrix &x, const FqMatrix &y, int n, const LabelSet &subset) {
  const SetComposition parts = subset_composition(n, subset);
  std::vector<FqMatrix> blocks;
  if (x.dim() > 0)
    blocks.push_back(x);
  if (y.dim() > 0)
    blocks.push_back(y);
  return direct_sum_embed(blocks, parts);
}

} // namespace

ProductFunction straighten(const ClassFunction &psi, int n, const LabelSet &subset) {
  const PrimeField &f = psi.group().field();
  const GroupPtr levi = pattern_group(subset_triple(n, subset).levi, f);
  if (!same_group(psi.group(), *levi))
    throw InvalidArgument("straightening expects a class function on " + levi->name());
  const int k = static_cast<int>(subset.size());
  const GroupPtr left = ut_group(k, f);
  const GroupPtr right = ut_group(n - k, f);
  std::vector<Rational> out;
  out.reserve(left->order() * right->order());
  for (const auto &x : left->elements())
    for (const auto &y : right->elements())
      out.push_back(psi.at(place_blocks(x, y, n, subset)));
  return ProductFunction(left, right, std::move(out));
}

ClassFunction unstraighten(const ProductFunction &t, int n, const LabelSet &subset) {
  const PrimeField &f = t.left().field();
  const int k = static_cast<int>(subset.size());
  if (!same_group(t.left(), *ut_group(k, f)) || !same_group(t.right(), *ut_group(n - k, f)))
    throw InvalidArgument("unstraightening expects a function on UT_|I| × UT_|Iᶜ|");
  const GroupPtr levi = pattern_group(subset_triple(n, subset).levi, f);
  std::vector<Rational> out(levi->order());
  for (GroupTable::Index a = 0; a < t.left().order(); ++a)
    for (GroupTable::Index b = 0; b < t.right().order(); ++b)
      out[levi->index_of(place_blocks(t.left().element(a), t.right().element(b), n, subset))] = t(a, b);
  return ClassFunction(levi, std::move(out));
}

} // namespace uthopf
