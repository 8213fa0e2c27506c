#include "uthopf/group_engine.hpp"

#include "uthopf/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

namespace uthopf {

namespace {

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::size_t position(const LabelSet &ground, Label x) {
  auto it = std::lower_bound(ground.begin(), ground.end(), x);
  if (it == ground.end() || *it != x)
    throw InvalidArgument("label " + std::to_string(x) + " is not in the matrix ground set");
  return static_cast<std::size_t>(it - ground.begin());
}

void require_dim(int dim) {
  if (dim < 0 || dim > FqMatrix::kMaxDim)
    throw InvalidArgument("matrix dimension " + std::to_string(dim) + " outside 0.." +
                          std::to_string(FqMatrix::kMaxDim));
}

} // namespace

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p) || p >= 37)
    throw InvalidArgument("q = " + std::to_string(p) + " is not a supported prime (need p < 37)");
}

int PrimeField::inv(int a) const {
  a = reduce(a);
  if (a == 0)
    throw InvalidArgument("zero has no inverse");
  for (int b = 1; b < p_; ++b)
    if (a * b % p_ == 1)
      return b;
  return 0; // unreachable for prime p
}

int PrimeField::reduce(long long a) const {
  long long r = a % p_;
  return static_cast<int>(r < 0 ? r + p_ : r);
}

// ---------------------------------------------------------------------------
// FqMatrix

FqMatrix::FqMatrix(int dim) : dim_(dim) { require_dim(dim); }

FqMatrix FqMatrix::identity(int dim) {
  FqMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::from_rows(const std::vector<std::vector<int>> &rows, const PrimeField &f) {
  const int n = static_cast<int>(rows.size());
  FqMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw InvalidArgument("matrix rows must form a square");
    for (int c = 0; c < n; ++c)
      m.set(r, c, f.reduce(rows[r][c]));
  }
  return m;
}

std::string FqMatrix::digits() const {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  out.reserve(static_cast<std::size_t>(dim_ * dim_));
  for (int i = 0; i < dim_ * dim_; ++i)
    out += kDigits[a_[i]];
  return out;
}

std::size_t FqMatrix::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(dim_);
  for (int i = 0; i < dim_ * dim_; ++i) {
    h ^= a_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

FqMatrix multiply(const FqMatrix &a, const FqMatrix &b, const PrimeField &f) {
  if (a.dim() != b.dim())
    throw InvalidArgument("matrix dimensions differ");
  const int n = a.dim();
  FqMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int s = 0;
      for (int k = 0; k < n; ++k)
        s += a(r, k) * b(k, c);
      out.set(r, c, s % f.p());
    }
  return out;
}

FqMatrix transpose(const FqMatrix &a) {
  FqMatrix out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      out.set(c, r, a(r, c));
  return out;
}

namespace {

// Row-reduces `m` in place alongside `aug`; returns the rank.
int eliminate(FqMatrix &m, FqMatrix *aug, const PrimeField &f) {
  const int n = m.dim();
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int r = row; r < n; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      continue;
    for (int c = 0; c < n; ++c) {
      int t = m(row, c);
      m.set(row, c, m(pivot, c));
      m.set(pivot, c, t);
      if (aug) {
        t = (*aug)(row, c);
        aug->set(row, c, (*aug)(pivot, c));
        aug->set(pivot, c, t);
      }
    }
    const int s = f.inv(m(row, col));
    for (int c = 0; c < n; ++c) {
      m.set(row, c, f.mul(m(row, c), s));
      if (aug)
        aug->set(row, c, f.mul((*aug)(row, c), s));
    }
    for (int r = 0; r < n; ++r) {
      if (r == row || m(r, col) == 0)
        continue;
      const int factor = m(r, col);
      for (int c = 0; c < n; ++c) {
        m.set(r, c, f.sub(m(r, c), f.mul(factor, m(row, c))));
        if (aug)
          aug->set(r, c, f.sub((*aug)(r, c), f.mul(factor, (*aug)(row, c))));
      }
    }
    ++row;
  }
  return row;
}

} // namespace

int rank(const FqMatrix &a, const PrimeField &f) {
  FqMatrix m = a;
  return eliminate(m, nullptr, f);
}

FqMatrix inverse(const FqMatrix &a, const PrimeField &f) {
  FqMatrix m = a;
  FqMatrix out = FqMatrix::identity(a.dim());
  if (eliminate(m, &out, f) != a.dim())
    throw InvalidArgument("matrix is singular");
  return out;
}

// ---------------------------------------------------------------------------
// Label-addressed helpers

int entry(const FqMatrix &x, const LabelSet &ground, Label i, Label j) {
  return x(static_cast<int>(position(ground, i)), static_cast<int>(position(ground, j)));
}

FqMatrix submatrix(const FqMatrix &x, const LabelSet &ground, const LabelSet &subset) {
  if (static_cast<int>(ground.size()) != x.dim())
    throw InvalidArgument("ground size does not match the matrix");
  if (!is_subset(subset, ground))
    throw InvalidArgument("submatrix labels outside the ground set");
  const int k = static_cast<int>(subset.size());
  FqMatrix out(k);
  std::vector<int> pos(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    pos[i] = static_cast<int>(position(ground, subset[i]));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      out.set(r, c, x(pos[r], pos[c]));
  return out;
}

FqMatrix relabel_matrix(const FqMatrix &x, const LabelSet &ground, const LabelBijection &sigma) {
  if (sigma.domain() != ground || x.dim() != static_cast<int>(ground.size()))
    throw InvalidArgument("relabelling domain does not match the matrix ground set");
  const LabelSet &target = sigma.codomain();
  FqMatrix out(x.dim());
  for (std::size_t r = 0; r < ground.size(); ++r)
    for (std::size_t c = 0; c < ground.size(); ++c) {
      const auto rr = position(target, sigma(ground[r]));
      const auto cc = position(target, sigma(ground[c]));
      out.set(static_cast<int>(rr), static_cast<int>(cc), x(static_cast<int>(r), static_cast<int>(c)));
    }
  return out;
}

FqMatrix direct_sum_embed(const std::vector<FqMatrix> &blocks, const SetComposition &parts) {
  if (blocks.size() != parts.length())
    throw InvalidArgument("one block per part is required");
  const LabelSet &ground = parts.ground();
  FqMatrix out(static_cast<int>(ground.size()));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const LabelSet &part = parts.parts()[k];
    if (blocks[k].dim() != static_cast<int>(part.size()))
      throw InvalidArgument("block size does not match its part");
    for (std::size_t r = 0; r < part.size(); ++r)
      for (std::size_t c = 0; c < part.size(); ++c)
        out.set(static_cast<int>(position(ground, part[r])), static_cast<int>(position(ground, part[c])),
                blocks[k](static_cast<int>(r), static_cast<int>(c)));
  }
  return out;
}

FqMatrix permutation_matrix(const std::vector<int> &images) {
  const int n = static_cast<int>(images.size());
  FqMatrix out(n);
  std::vector<bool> seen(images.size(), false);
  for (int j = 0; j < n; ++j) {
    const int w = images[j];
    if (w < 1 || w > n || seen[w - 1])
      throw InvalidArgument("not a permutation of [n]");
    seen[w - 1] = true;
    out.set(w - 1, j, 1);
  }
  return out;
}

std::vector<int> coset_permutation(int n, const LabelSet &subset) {
  const LabelSet all = interval(n);
  if (!is_subset(subset, all))
    throw InvalidArgument("subset is not contained in [n]");
  std::vector<int> w(subset.begin(), subset.end());
  for (Label j : set_difference(all, subset))
    w.push_back(j);
  return w;
}

FqMatrix coset_rep_w(int n, const LabelSet &subset) {
  return permutation_matrix(coset_permutation(n, subset));
}

FqMatrix dagger(const FqMatrix &x) {
  const int n = x.dim();
  FqMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      out.set(r, s, x(n - 1 - s, n - 1 - r));
  return out;
}

// ---------------------------------------------------------------------------
// PatternDescriptor

PatternDescriptor::PatternDescriptor(LabelSet ground, std::set<LabelPair> allowed)
    : ground_(make_label_set(std::move(ground))), allowed_(std::move(allowed)) {
  for (auto [i, j] : allowed_) {
    if (i == j)
      throw InvalidArgument("pattern pairs must be strict");
    if (!contains(ground_, i) || !contains(ground_, j))
      throw InvalidArgument("pattern pair outside the ground set");
    if (allowed_.count({j, i}))
      throw InvalidArgument("pattern is not antisymmetric");
  }
  for (auto [i, j] : allowed_)
    for (auto it = allowed_.lower_bound({j, -1}); it != allowed_.end() && it->first == j; ++it)
      if (!allowed_.count({i, it->second}))
        throw InvalidArgument("pattern is not closed: (" + std::to_string(i) + "," + std::to_string(j) +
                              ") and (" + std::to_string(j) + "," + std::to_string(it->second) +
                              ") allowed but not their composite");
}

PatternDescriptor PatternDescriptor::from_order(const PartialOrder &order) {
  const auto strict = order.strict_pairs();
  return PatternDescriptor(order.ground(), std::set<LabelPair>(strict.begin(), strict.end()));
}

PatternDescriptor PatternDescriptor::from_nuio(const Nuio &pi) {
  const auto &strict = pi.strict_pairs();
  return PatternDescriptor(interval(pi.size()), std::set<LabelPair>(strict.begin(), strict.end()));
}

bool PatternDescriptor::admits(const FqMatrix &x) const {
  if (x.dim() != static_cast<int>(ground_.size()))
    return false;
  const int n = x.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int v = x(r, c);
      if (r == c) {
        if (v != 1)
          return false;
      } else if (v != 0 && !allowed_.count({ground_[r], ground_[c]})) {
        return false;
      }
    }
  return true;
}

std::string PatternDescriptor::describe() const {
  std::string out = "[";
  for (std::size_t i = 0; i < ground_.size(); ++i)
    out += (i ? "," : "") + std::to_string(ground_[i]);
  out += ";";
  bool first = true;
  for (auto [i, j] : allowed_) {
    out += (first ? "" : ",") + std::to_string(i) + "<" + std::to_string(j);
    first = false;
  }
  return out + "]";
}

LeviTriple levi_radical_parabolic(const TotalOrder &tau, const SetComposition &a) {
  if (tau.ground() != a.ground())
    throw InvalidArgument("total order and composition have different ground sets");
  const PairPartition parts = asc_eq_inv(a);
  std::set<LabelPair> levi, radical, parabolic;
  for (const auto &[i, j] : tau.order().strict_pairs()) {
    if (parts.equalities.count({i, j})) {
      levi.insert({i, j});
      parabolic.insert({i, j});
    } else if (parts.ascents.count({i, j})) {
      radical.insert({i, j});
      parabolic.insert({i, j});
    }
  }
  const LabelSet &g = tau.ground();
  return {PatternDescriptor(g, std::move(levi)), PatternDescriptor(g, std::move(radical)),
          PatternDescriptor(g, std::move(parabolic))};
}

SetComposition subset_composition(int n, const LabelSet &subset) {
  const LabelSet all = interval(n);
  if (!is_subset(subset, all))
    throw InvalidArgument("subset is not contained in [n]");
  std::vector<std::vector<Label>> parts;
  if (!subset.empty())
    parts.push_back(subset);
  LabelSet rest = set_difference(all, subset);
  if (!rest.empty())
    parts.push_back(rest);
  return SetComposition(std::move(parts));
}

LeviTriple subset_triple(int n, const LabelSet &subset) {
  return levi_radical_parabolic(TotalOrder(interval(n)), subset_composition(n, subset));
}

// ---------------------------------------------------------------------------
// GroupTable

std::size_t enumeration_budget() {
  if (const char *env = std::getenv("UTHOPF_BUDGET")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 25000;
}

GroupTable::GroupTable(std::string name, LabelSet ground, PrimeField field, std::vector<FqMatrix> elements,
                       std::optional<PatternDescriptor> pattern)
    : name_(std::move(name)), ground_(make_label_set(std::move(ground))), field_(field),
      pattern_(std::move(pattern)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty())
    throw InvalidArgument("a group needs at least one element");
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].dim() != dim())
      throw InvalidArgument("element dimension does not match the ground set");
    index_.emplace(elements_[i], static_cast<Index>(i));
  }
  identity_ = index_of(FqMatrix::identity(dim()));
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    inverse_[i] = index_of(uthopf::inverse(elements_[i], field_));

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  class_of_.assign(elements_.size(), kUnset);
  for (std::size_t g = 0; g < elements_.size(); ++g) {
    if (class_of_[g] != kUnset)
      continue;
    const std::size_t c = reps_.size();
    reps_.push_back(static_cast<Index>(g));
    std::vector<Index> conj(elements_.size());
    std::size_t size = 0;
    for (std::size_t x = 0; x < elements_.size(); ++x) {
      const Index y = conjugate(static_cast<Index>(g), static_cast<Index>(x));
      conj[x] = y;
      if (class_of_[y] == kUnset) {
        class_of_[y] = c;
        ++size;
      }
    }
    class_sizes_.push_back(size);
    rep_conj_.push_back(std::move(conj));
  }
}

GroupTable::Index GroupTable::find(const FqMatrix &x) const {
  auto it = index_.find(x);
  return it == index_.end() ? static_cast<Index>(elements_.size()) : it->second;
}

GroupTable::Index GroupTable::index_of(const FqMatrix &x) const {
  const Index i = find(x);
  if (i == order())
    throw InvalidArgument("matrix " + x.digits() + " is not an element of " + name_);
  return i;
}

GroupTable::Index GroupTable::multiply(Index a, Index b) const {
  return index_of(uthopf::multiply(elements_[a], elements_[b], field_));
}

GroupTable::Index GroupTable::conjugate(Index g, Index x) const {
  const FqMatrix xg = uthopf::multiply(elements_[x], elements_[g], field_);
  return index_of(uthopf::multiply(xg, elements_[inverse_[x]], field_));
}

bool GroupTable::is_closed() const {
  for (const auto &a : elements_)
    for (const auto &b : elements_)
      if (!contains(uthopf::multiply(a, b, field_)))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructors and caches

namespace {

std::mutex &cache_mutex() {
  static std::mutex m;
  return m;
}

std::string field_suffix(const PrimeField &f) { return "(F" + std::to_string(f.p()) + ")"; }

} // namespace

GroupPtr pattern_group(const PatternDescriptor &pattern, const PrimeField &f) {
  static std::map<std::pair<PatternDescriptor, int>, GroupPtr> cache;
  const std::size_t k = pattern.allowed().size();
  const std::size_t budget = enumeration_budget();
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order *= static_cast<std::size_t>(f.p());
    if (order > budget)
      throw BudgetExceeded("pattern group " + pattern.describe() + " over F" + std::to_string(f.p()) +
                           " exceeds the enumeration budget of " + std::to_string(budget));
  }
  const auto key = std::make_pair(pattern, f.p());
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }


  const LabelSet &ground = pattern.ground();
  const int n = static_cast<int>(ground.size());
  std::vector<std::pair<int, int>> cells;
  for (auto [i, j] : pattern.allowed())
    cells.emplace_back(static_cast<int>(position(ground, i)), static_cast<int>(position(ground, j)));

  std::vector<FqMatrix> elements;
  elements.reserve(order);
  std::vector<int> digit(k, 0);
  for (std::size_t count = 0; count < order; ++count) {
    FqMatrix m = FqMatrix::identity(n);
    for (std::size_t c = 0; c < k; ++c)
      m.set(cells[c].first, cells[c].second, digit[c]);
    elements.push_back(m);
    for (std::size_t c = 0; c < k; ++c) {
      if (++digit[c] < f.p())
        break;
      digit[c] = 0;
    }
  }
  auto group = std::make_shared<const GroupTable>("UT" + pattern.describe() + field_suffix(f), ground, f,
                                                  std::move(elements), pattern);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(key, group).first->second;
}

GroupPtr ut_group(int n, const PrimeField &f) {
  return pattern_group(PatternDescriptor::from_order(PartialOrder::chain(interval(n))), f);
}

std::uint64_t gl_order(int n, int q) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i)
    qn *= static_cast<std::uint64_t>(q);
  std::uint64_t out = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= static_cast<std::uint64_t>(q);
  }
  return out;
}

GroupPtr general_linear_group(int n, const PrimeField &f, std::size_t budget) {
  static std::map<std::pair<int, int>, GroupPtr> cache;
  require_dim(n);
  const auto key = std::make_pair(n, f.p());
  if (gl_order(n, f.p()) > budget)
    throw BudgetExceeded("GL_" + std::to_string(n) + field_suffix(f) + " has " +
                         std::to_string(gl_order(n, f.p())) + " elements, above the budget of " +
                         std::to_string(budget));
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }

  std::vector<FqMatrix> elements;
  elements.reserve(gl_order(n, f.p()));
  const int cells = n * n;
  std::vector<int> digit(static_cast<std::size_t>(cells), 0);
  FqMatrix m(n);
  while (true) {
    for (int c = 0; c < cells; ++c)
      m.set(c / n, c % n, digit[c]);
    if (rank(m, f) == n)
      elements.push_back(m);
    int c = cells - 1;
    while (c >= 0 && ++digit[c] == f.p())
      digit[c--] = 0;
    if (c < 0)
      break;
  }
  auto group = std::make_shared<const GroupTable>("GL_" + std::to_string(n) + field_suffix(f), interval(n), f,
                                                  std::move(elements));
  std::lock_guard lock(cache_mutex());
  return cache.emplace(key, group).first->second;
}

GroupPtr subgroup_where(const GroupTable &g, const std::function<bool(const FqMatrix &)> &pred,
                        std::string name) {
  std::vector<FqMatrix> elements;
  for (const auto &x : g.elements())
    if (pred(x))
      elements.push_back(x);
  return std::make_shared<const GroupTable>(std::move(name), g.ground(), g.field(), std::move(elements));
}

GroupPtr conjugate_subgroup(const GroupTable &h, const FqMatrix &w, std::string name) {
  const FqMatrix w_inv = inverse(w, h.field());
  std::vector<FqMatrix> elements;
  elements.reserve(h.order());
  for (const auto &x : h.elements())
    elements.push_back(multiply(multiply(w, x, h.field()), w_inv, h.field()));
  return std::make_shared<const GroupTable>(std::move(name), h.ground(), h.field(), std::move(elements));
}

bool is_subgroup(const GroupTable &sub, const GroupTable &group) {
  if (sub.ground() != group.ground() || !(sub.field() == group.field()))
    return false;
  return std::all_of(sub.elements().begin(), sub.elements().end(),
                     [&](const FqMatrix &x) { return group.contains(x); });
}

bool is_normal_subgroup(const GroupTable &normal, const GroupTable &group) {
  if (!is_subgroup(normal, group))
    return false;
  const PrimeField &f = group.field();
  for (GroupTable::Index x = 0; x < group.order(); ++x) {
    const FqMatrix &gx = group.element(x);
    const FqMatrix &gx_inv = group.element(group.inverse(x));
    for (const auto &h : normal.elements())
      if (!normal.contains(multiply(multiply(gx, h, f), gx_inv, f)))
        return false;
  }
  return true;
}

std::pair<FqMatrix, FqMatrix> semidirect_factorize(const FqMatrix &g, const GroupTable &levi,
                                                   const GroupTable &radical) {
  const PrimeField &f = levi.field();
  for (GroupTable::Index h = 0; h < radical.order(); ++h) {
    const FqMatrix l = multiply(g, radical.element(radical.inverse(h)), f);
    if (levi.contains(l))
      return {l, radical.element(h)};
  }
  throw InvalidArgument("matrix " + g.digits() + " does not factor through " + levi.name() + " ⋉ " +
                        radical.name());
}

std::pair<FqMatrix, FqMatrix> semidirect_factorize(const FqMatrix &g, const TotalOrder &tau,
                                                   const SetComposition &a, const PrimeField &f) {
  const LeviTriple t = levi_radical_parabolic(tau, a);
  if (!t.parabolic.admits(g))
    throw InvalidArgument("matrix " + g.digits() + " is not in the parabolic pattern group");
  return semidirect_factorize(g, *pattern_group(t.levi, f), *pattern_group(t.radical, f));
}

bool in_parabolic(const FqMatrix &g, int i, const PrimeField &f) {
  const int n = g.dim();
  for (int r = i; r < n; ++r)
    for (int c = 0; c < i; ++c)
      if (g(r, c) != 0)
        return false;
  return rank(g, f) == n;
}

bool in_levi(const FqMatrix &g, int i, const PrimeField &f) {
  const int n = g.dim();
  for (int r = 0; r < i; ++r)
    for (int c = i; c < n; ++c)
      if (g(r, c) != 0)
        return false;
  return in_parabolic(g, i, f);
}

bool in_radical(const FqMatrix &g, int i) {
  const int n = g.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const bool same_block = (r < i) == (c < i);
      const bool lower_left = r >= i && c < i;
      if (same_block && g(r, c) != (r == c ? 1 : 0))
        return false;
      if (lower_left && g(r, c) != 0)
        return false;
    }
  return true;
}

} // namespace uthopf
