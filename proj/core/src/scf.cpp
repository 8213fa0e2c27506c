#include "uthopf/scf.hpp"

#include <mutex>

namespace uthopf {

// ---------------------------------------------------------------------------
// ScfElement

ScfElement ScfElement::basis(const Nuio &pi, Laurent coeff) {
  ScfElement out;
  out.add(pi, coeff);
  return out;
}

Laurent ScfElement::coeff(const Nuio &pi) const {
  auto it = terms_.find(pi);
  return it == terms_.end() ? Laurent() : it->second;
}

ScfElement ScfElement::homogeneous(int n) const {
  ScfElement out;
  for (const auto &[pi, c] : terms_)
    if (pi.size() == n)
      out.terms_.emplace(pi, c);
  return out;
}

void ScfElement::add(const Nuio &pi, const Laurent &c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = terms_.emplace(pi, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

ScfElement &ScfElement::operator+=(const ScfElement &o) {
  for (const auto &[pi, c] : o.terms_)
    add(pi, c);
  return *this;
}

ScfElement &ScfElement::operator-=(const ScfElement &o) {
  for (const auto &[pi, c] : o.terms_)
    add(pi, -c);
  return *this;
}

ScfElement &ScfElement::operator*=(const Laurent &c) {
  std::map<Nuio, Laurent> out;
  for (auto &[pi, v] : terms_) {
    Laurent w = v * c;
    if (!w.is_zero())
      out.emplace(pi, std::move(w));
  }
  terms_ = std::move(out);
  return *this;
}

// ---------------------------------------------------------------------------
// ScfTensor

ScfTensor ScfTensor::basis(const Nuio &left, const Nuio &right, Laurent coeff) {
  ScfTensor out;
  out.add(left, right, coeff);
  return out;
}

ScfTensor ScfTensor::tensor(const ScfElement &a, const ScfElement &b) {
  ScfTensor out;
  for (const auto &[p, c] : a.terms())
    for (const auto &[r, d] : b.terms())
      out.add(p, r, c * d);
  return out;
}

Laurent ScfTensor::coeff(const Nuio &left, const Nuio &right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Laurent() : it->second;
}

ScfTensor ScfTensor::component(int i, int j) const {
  ScfTensor out;
  for (const auto &[k, c] : terms_)
    if (k.first.size() == i && k.second.size() == j)
      out.terms_.emplace(k, c);
  return out;
}

ScfTensor ScfTensor::swapped() const {
  ScfTensor out;
  for (const auto &[k, c] : terms_)
    out.add(k.second, k.first, c);
  return out;
}

void ScfTensor::add(const Nuio &left, const Nuio &right, const Laurent &c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = terms_.emplace(Key{left, right}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

ScfTensor &ScfTensor::operator+=(const ScfTensor &o) {
  for (const auto &[k, c] : o.terms_)
    add(k.first, k.second, c);
  return *this;
}

ScfTensor &ScfTensor::operator-=(const ScfTensor &o) {
  for (const auto &[k, c] : o.terms_)
    add(k.first, k.second, -c);
  return *this;
}

// ---------------------------------------------------------------------------
// Structure maps

ScfElement scf_product(const ScfElement &x, const ScfElement &y) {
  ScfElement out;
  for (const auto &[p, c] : x.terms())
    for (const auto &[r, d] : y.terms())
      out.add(shifted_ordinal_sum(p, r), c * d);
  return out;
}

std::vector<CoproductTerm> coproduct_terms(const Nuio &pi) {
  std::vector<CoproductTerm> out;
  const LabelSet all = interval(pi.size());
  for (const LabelSet &subset : all_subsets(all)) {
    const LabelSet rest = set_difference(all, subset);
    out.push_back({subset, asc_count(pi, subset), shifted_restrict(pi, subset), shifted_restrict(pi, rest)});
  }
  return out;
}

ScfTensor scf_coproduct(const ScfElement &x) {
  ScfTensor out;
  for (const auto &[pi, c] : x.terms())
    for (const auto &term : coproduct_terms(pi))
      out.add(term.left, term.right, c * Laurent::monomial(term.exponent));
  return out;
}

namespace {

ScfElement antipode_basis(const Nuio &pi) {
  static std::mutex m;
  static std::map<Nuio, ScfElement> memo;
  {
    std::lock_guard lock(m);
    if (auto it = memo.find(pi); it != memo.end())
      return it->second;
  }
  ScfElement out;
  if (pi.size() == 0) {
    out = ScfElement::unit();
  } else {
    const LabelSet all = interval(pi.size());
    for (const auto &term : coproduct_terms(pi)) {
      if (term.subset == all)
        continue;
      ScfElement part = scf_product(antipode_basis(term.left), ScfElement::basis(term.right));
      out -= Laurent::monomial(term.exponent) * part;
    }
  }
  std::lock_guard lock(m);
  return memo.emplace(pi, std::move(out)).first->second;
}

} // namespace

ScfElement scf_antipode(const ScfElement &x) {
  ScfElement out;
  for (const auto &[pi, c] : x.terms())
    out += c * antipode_basis(pi);
  return out;
}

ScfElement dagger_scf(const ScfElement &x) {
  ScfElement out;
  for (const auto &[pi, c] : x.terms())
    out.add(dagger_nuio(pi), c);
  return out;
}

ScfTensor tensor_product(const ScfTensor &x, const ScfTensor &y) {
  ScfTensor out;
  for (const auto &[k1, c1] : x.terms())
    for (const auto &[k2, c2] : y.terms())
      out.add(shifted_ordinal_sum(k1.first, k2.first), shifted_ordinal_sum(k1.second, k2.second), c1 * c2);
  return out;
}

ScfElement multiply_tensor(const ScfTensor &x) {
  ScfElement out;
  for (const auto &[k, c] : x.terms())
    out.add(shifted_ordinal_sum(k.first, k.second), c);
  return out;
}

Laurent counit(const ScfElement &x) { return x.coeff(Nuio()); }

ScfTensor apply_each(const ScfTensor &x, ScfElement (*left)(const ScfElement &),
                     ScfElement (*right)(const ScfElement &)) {
  ScfTensor out;
  for (const auto &[k, c] : x.terms()) {
    ScfTensor piece = ScfTensor::tensor(left(ScfElement::basis(k.first)), right(ScfElement::basis(k.second)));
    for (const auto &[k2, c2] : piece.terms())
      out.add(k2.first, k2.second, c * c2);
  }
  return out;
}

ScfElement identity_map(const ScfElement &x) { return x; }

} // namespace uthopf
