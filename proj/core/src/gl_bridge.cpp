#include "uthopf/gl_bridge.hpp"

#include "uthopf/error.hpp"

#include <algorithm>

namespace uthopf {

// ---------------------------------------------------------------------------
// Graded containers

GlCfElement GlCfElement::unit(PrimeField f) {
  GlCfElement out(f);
  out.add(ClassFunction::one(general_linear_group(0, f)));
  return out;
}

GlCfElement GlCfElement::homogeneous(const ClassFunction &psi) {
  GlCfElement out(psi.group().field());
  out.add(psi);
  return out;
}

void GlCfElement::add(const ClassFunction &psi) {
  if (!(psi.group().field() == field_))
    throw InvalidArgument("class function over a different field");
  const int n = gl_degree(psi.group());
  auto it = components_.find(n);
  if (it == components_.end()) {
    if (!psi.is_zero())
      components_.emplace(n, psi);
    return;
  }
  it->second += psi;
  if (it->second.is_zero())
    components_.erase(it);
}

bool operator==(const GlCfElement &a, const GlCfElement &b) {
  return a.field_ == b.field_ && a.components_ == b.components_;
}

void GlTensor::add(const ProductFunction &t) {
  if (!(t.left().field() == field_))
    throw InvalidArgument("tensor over a different field");
  const auto key = std::make_pair(gl_degree(t.left()), gl_degree(t.right()));
  auto it = components_.find(key);
  if (it == components_.end()) {
    if (!t.is_zero())
      components_.emplace(key, t);
    return;
  }
  it->second += t;
  if (it->second.is_zero())
    components_.erase(it);
}

bool operator==(const GlTensor &a, const GlTensor &b) {
  return a.field_ == b.field_ && a.components_ == b.components_;
}

int gl_degree(const GroupTable &g) {
  if (g.name() != "GL_" + std::to_string(g.dim()) + "(F" + std::to_string(g.field().p()) + ")")
    throw InvalidArgument(g.name() + " is not a general linear group");
  return g.dim();
}

// ---------------------------------------------------------------------------
// Structure maps

namespace {

FqMatrix block(const FqMatrix &y, int start, int len) {
  FqMatrix out(len);
  for (int r = 0; r < len; ++r)
    for (int c = 0; c < len; ++c)
      out.set(r, c, y(start + r, start + c));
  return out;
}

bool lower_left_zero(const FqMatrix &y, int i) {
  for (int r = i; r < y.dim(); ++r)
    for (int c = 0; c < i; ++c)
      if (y(r, c) != 0)
        return false;
  return true;
}

// Every element of R_i: identity diagonal blocks, arbitrary upper-right block.
std::vector<FqMatrix> radical_elements(int n, int i, const PrimeField &f) {
  const int cells = i * (n - i);
  std::vector<FqMatrix> out;
  std::vector<int> digit(static_cast<std::size_t>(cells), 0);
  while (true) {
    FqMatrix m = FqMatrix::identity(n);
    for (int k = 0; k < cells; ++k)
      m.set(k / (n - i), i + k % (n - i), digit[k]);
    out.push_back(m);
    int k = 0;
    while (k < cells && ++digit[k] == f.p())
      digit[k++] = 0;
    if (k == cells)
      break;
  }
  return out;
}

FqMatrix block_sum(const FqMatrix &a, const FqMatrix &b) {
  const int i = a.dim(), n = a.dim() + b.dim();
  FqMatrix out(n);
  for (int r = 0; r < i; ++r)
    for (int c = 0; c < i; ++c)
      out.set(r, c, a(r, c));
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < b.dim(); ++c)
      out.set(i + r, i + c, b(r, c));
  return out;
}

std::string field_tag(const PrimeField &f) { return "(F" + std::to_string(f.p()) + ")"; }

GroupPtr parabolic(int n, int i, const PrimeField &f) {
  const GroupPtr g = general_linear_group(n, f);
  return subgroup_where(*g, [&](const FqMatrix &x) { return lower_left_zero(x, i); },
                        "P_" + std::to_string(i) + "<GL_" + std::to_string(n) + field_tag(f));
}

} // namespace

ClassFunction gl_mu_homogeneous(const ProductFunction &t) {
  const int i = gl_degree(t.left());
  const int j = gl_degree(t.right());
  const int n = i + j;
  const PrimeField &f = t.left().field();
  const GroupPtr g = general_linear_group(n, f);
  std::uint64_t order_p = t.left().order() * t.right().order();
  for (int k = 0; k < i * j; ++k)
    order_p *= static_cast<std::uint64_t>(f.p());
  std::vector<Rational> per_class(g->class_count());
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    Rational sum = 0;
    for (auto y : g->rep_conjugates(c)) {
      const FqMatrix &m = g->element(y);
      if (!lower_left_zero(m, i))
        continue;
      sum += t(t.left().index_of(block(m, 0, i)), t.right().index_of(block(m, i, j)));
    }
    per_class[c] = sum / Rational(static_cast<std::int64_t>(order_p));
  }
  return ClassFunction::from_class_values(g, per_class);
}

GlCfElement gl_product(const GlCfElement &x, const GlCfElement &y) {
  if (!(x.field() == y.field()))
    throw InvalidArgument("product of elements over different fields");
  GlCfElement out(x.field());
  for (const auto &[i, a] : x.components())
    for (const auto &[j, b] : y.components())
      out.add(gl_mu_homogeneous(ProductFunction::tensor(a, b)));
  return out;
}

ProductFunction gl_delta_component(const ClassFunction &psi, int i) {
  const int n = gl_degree(psi.group());
  if (i < 0 || i > n)
    throw InvalidArgument("block size outside 0..n");
  const PrimeField &f = psi.group().field();
  const GroupPtr left = general_linear_group(i, f);
  const GroupPtr right = general_linear_group(n - i, f);
  const auto radical = radical_elements(n, i, f);
  const Rational scale(1, static_cast<std::int64_t>(radical.size()));

  std::vector<Rational> per_pair(left->class_count() * right->class_count());
  for (std::size_t c1 = 0; c1 < left->class_count(); ++c1)
    for (std::size_t c2 = 0; c2 < right->class_count(); ++c2) {
      const FqMatrix g = block_sum(left->element(left->class_rep(c1)), right->element(right->class_rep(c2)));
      Rational sum = 0;
      for (const auto &r : radical)
        sum += psi.at(multiply(g, r, f));
      per_pair[c1 * right->class_count() + c2] = sum * scale;
    }
  std::vector<Rational> values;
  values.reserve(left->order() * right->order());
  for (GroupTable::Index a = 0; a < left->order(); ++a)
    for (GroupTable::Index b = 0; b < right->order(); ++b)
      values.push_back(per_pair[left->class_of(a) * right->class_count() + right->class_of(b)]);
  return ProductFunction(left, right, std::move(values));
}

GlTensor gl_coproduct(const GlCfElement &x) {
  GlTensor out(x.field());
  for (const auto &[n, psi] : x.components())
    for (int i = 0; i <= n; ++i)
      out.add(gl_delta_component(psi, i));
  return out;
}

ClassFunction induce_ut_to_gl(const ClassFunction &psi) {
  const int n = ut_degree(psi.group());
  return induce(psi, general_linear_group(n, psi.group().field()));
}

GlCfElement induce_ut_to_gl(const UtCfElement &x) {
  GlCfElement out(x.field());
  for (const auto &[n, psi] : x.components())
    out.add(induce_ut_to_gl(psi));
  return out;
}

ProductFunction induce_ut_to_gl(const ProductFunction &t) {
  const PrimeField &f = t.left().field();
  const GroupPtr left = general_linear_group(ut_degree(t.left()), f);
  const GroupPtr right = general_linear_group(ut_degree(t.right()), f);
  ProductFunction out = ProductFunction::zero(left, right);
  for (const auto &term : t.class_terms()) {
    const ClassFunction a = induce(ClassFunction::class_indicator(t.left_ptr(), term.left_class), left);
    const ClassFunction b = induce(ClassFunction::class_indicator(t.right_ptr(), term.right_class), right);
    out += term.coeff * ProductFunction::tensor(a, b);
  }
  return out;
}

GlTensor induce_ut_to_gl(const UtTensor &x) {
  GlTensor out(x.field());
  for (const auto &[k, t] : x.components())
    out.add(induce_ut_to_gl(t));
  return out;
}

std::string canonical(const GlCfElement &x) {
  std::string out = "F" + std::to_string(x.field().p()) + ";";
  for (const auto &[n, psi] : x.components())
    out += std::to_string(n) + "=>" + canonical(psi) + ";";
  return out;
}

std::string canonical(const GlTensor &x) {
  std::string out = "F" + std::to_string(x.field().p()) + ";";
  for (const auto &[k, t] : x.components())
    out += std::to_string(k.first) + "," + std::to_string(k.second) + "=>" + canonical(t) + ";";
  return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

std::string tag(const PrimeField &f) { return "q=" + std::to_string(f.p()); }

std::string show_set(const LabelSet &s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k)
    out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

std::vector<LabelSet> subsets_of_size(int n, int i) {
  std::vector<LabelSet> out;
  for (auto &s : all_subsets(interval(n)))
    if (static_cast<int>(s.size()) == i)
      out.push_back(std::move(s));
  return out;
}

} // namespace

VerificationReport verify_induction_hom(int n_max, const PrimeField &f) {
  VerificationReport report;
  for (int total = 0; total <= n_max; ++total) {
    for (int i = 0; i <= total; ++i) {
      const GroupPtr ui = ut_group(i, f), uj = ut_group(total - i, f);
      for (std::size_t c1 = 0; c1 < ui->class_count(); ++c1)
        for (std::size_t c2 = 0; c2 < uj->class_count(); ++c2) {
          const ClassFunction a = ClassFunction::class_indicator(ui, c1);
          const ClassFunction b = ClassFunction::class_indicator(uj, c2);
          const ClassFunction lhs = gl_mu_homogeneous(ProductFunction::tensor(induce_ut_to_gl(a), induce_ut_to_gl(b)));
          const ClassFunction rhs = induce_ut_to_gl(ut_mu_homogeneous(ProductFunction::tensor(a, b)));
          report.record("induction-algebra",
                        tag(f) + " UT_" + std::to_string(i) + "[" + std::to_string(c1) + "] * UT_" +
                            std::to_string(total - i) + "[" + std::to_string(c2) + "]",
                        lhs, rhs);
        }
    }
    const GroupPtr u = ut_group(total, f);
    for (std::size_t c = 0; c < u->class_count(); ++c) {
      const UtCfElement x = UtCfElement::homogeneous(ClassFunction::class_indicator(u, c));
      report.record("induction-coalgebra", tag(f) + " UT_" + std::to_string(total) + "[" + std::to_string(c) + "]",
                    gl_coproduct(induce_ut_to_gl(x)), induce_ut_to_gl(ut_delta(x)));
    }
  }
  return report;
}

VerificationReport mackey_witness(int n, int i, const PrimeField &f) {
  VerificationReport report;
  const GroupPtr g = general_linear_group(n, f);
  const GroupPtr p = parabolic(n, i, f);
  const GroupPtr u = ut_group(n, f);

  struct Piece {
    GroupPtr up;
    GroupPtr conjugated;
    FqMatrix w;
  };
  std::vector<Piece> pieces;
  for (const LabelSet &subset : subsets_of_size(n, i)) {
    const FqMatrix w = coset_rep_w(n, subset);
    const GroupPtr up = pattern_group(subset_triple(n, subset).parabolic, f);
    pieces.push_back({up, conjugate_subgroup(*up, inverse(w, f), "w^-1 UP_" + show_set(subset) + " w<GL_" +
                                                                       std::to_string(n) + field_tag(f)),
                      w});
  }

  for (std::size_t c = 0; c < u->class_count(); ++c) {
    const ClassFunction psi = ClassFunction::class_indicator(u, c);
    const ClassFunction lhs = restrict_to(induce(psi, g), p);
    ClassFunction rhs = ClassFunction::zero(p);
    for (const auto &piece : pieces) {
      const ClassFunction on_up = restrict_to(psi, piece.up);
      const FqMatrix w = piece.w, w_inv = inverse(piece.w, f);
      const ClassFunction moved = pullback(
          on_up, piece.conjugated, [&](const FqMatrix &h) { return multiply(multiply(w, h, f), w_inv, f); },
          MapKind::homomorphism);
      rhs += induce(moved, p);
    }
    report.record("mackey", tag(f) + " n=" + std::to_string(n) + " i=" + std::to_string(i) + " UT class " +
                                std::to_string(c),
                  lhs, rhs);
  }
  return report;
}

VerificationReport verify_double_cosets(int n, int i, const PrimeField &f) {
  VerificationReport report;
  const GroupPtr g = general_linear_group(n, f);
  const GroupPtr p = parabolic(n, i, f);
  const GroupPtr u = ut_group(n, f);
  std::vector<int> owner(g->order(), -1);
  bool disjoint = true;
  int label = 0;
  for (const LabelSet &subset : subsets_of_size(n, i)) {
    const FqMatrix w = coset_rep_w(n, subset);
    for (const auto &x : u->elements()) {
      const FqMatrix xw = multiply(x, w, f);
      for (const auto &y : p->elements()) {
        const auto k = g->index_of(multiply(xw, y, f));
        if (owner[k] == -1)
          owner[k] = label;
        else if (owner[k] != label)
          disjoint = false;
      }
    }
    ++label;
  }
  const std::string instance = tag(f) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
  report.record_fact("double-cosets-disjoint", instance, disjoint);
  report.record_fact("double-cosets-cover", instance,
                     std::none_of(owner.begin(), owner.end(), [](int o) { return o == -1; }));
  return report;
}

VerificationReport verify_bruhat_intersections(int n, const PrimeField &f) {
  VerificationReport report;
  const GroupPtr g = general_linear_group(n, f);
  const GroupPtr u = ut_group(n, f);
  for (int i = 0; i <= n; ++i) {
    const std::string suffix = std::to_string(i) + "<GL_" + std::to_string(n) + field_tag(f);
    const GroupPtr levi = subgroup_where(*g, [&](const FqMatrix &x) { return in_levi(x, i, f); }, "L_" + suffix);
    const GroupPtr radical = subgroup_where(*g, [&](const FqMatrix &x) { return in_radical(x, i); }, "R_" + suffix);
    const GroupPtr par = parabolic(n, i, f);
    for (const LabelSet &subset : subsets_of_size(n, i)) {
      const FqMatrix w = coset_rep_w(n, subset), w_inv = inverse(w, f);
      const LeviTriple t = subset_triple(n, subset);
      auto check = [&](const std::string &name, const GroupTable &big, const PatternDescriptor &pattern) {
        std::vector<FqMatrix> got;
        for (const auto &x : big.elements()) {
          FqMatrix y = multiply(multiply(w, x, f), w_inv, f);
          if (u->contains(y))
            got.push_back(y);
        }
        std::sort(got.begin(), got.end());
        report.record_fact("bruhat-intersection-" + name, tag(f) + " n=" + std::to_string(n) + " I=" + show_set(subset),
                           got == pattern_group(pattern, f)->elements());
      };
      check("levi", *levi, t.levi);
      check("radical", *radical, t.radical);
      check("parabolic", *par, t.parabolic);
    }
  }
  return report;
}

VerificationReport verify_dagger_conjugacy(int n, const PrimeField &f) {
  VerificationReport report;
  const GroupPtr g = general_linear_group(n, f);
  const GroupPtr u = ut_group(n, f);
  std::size_t bad = 0;
  for (const auto &x : u->elements())
    if (g->class_of(g->index_of(x)) != g->class_of(g->index_of(dagger(x))))
      ++bad;
  report.record_fact("dagger-conjugacy", tag(f) + " n=" + std::to_string(n), bad == 0);
  return report;
}

VerificationReport verify_dagger_induction(int n_max, const PrimeField &f) {
  VerificationReport report;
  for (int n = 0; n <= n_max; ++n) {
    const GroupPtr u = ut_group(n, f);
    for (std::size_t c = 0; c < u->class_count(); ++c) {
      const ClassFunction psi = ClassFunction::class_indicator(u, c);
      report.record("dagger-induction", tag(f) + " UT_" + std::to_string(n) + "[" + std::to_string(c) + "]",
                    induce_ut_to_gl(dagger_cf(psi)), induce_ut_to_gl(psi));
    }
  }
  return report;
}

} // namespace uthopf
