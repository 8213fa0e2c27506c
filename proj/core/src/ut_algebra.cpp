#include "uthopf/ut_algebra.hpp"

#include "uthopf/error.hpp"

namespace uthopf {

// ---------------------------------------------------------------------------
// Graded containers

UtCfElement UtCfElement::unit(PrimeField f) {
  UtCfElement out(f);
  out.add(ClassFunction::one(ut_group(0, f)));
  return out;
}

UtCfElement UtCfElement::homogeneous(const ClassFunction &psi) {
  UtCfElement out(psi.group().field());
  out.add(psi);
  return out;
}

void UtCfElement::add(const ClassFunction &psi) {
  if (!(psi.group().field() == field_))
    throw InvalidArgument("class function over a different field");
  const int n = ut_degree(psi.group());
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

bool operator==(const UtCfElement &a, const UtCfElement &b) {
  return a.field_ == b.field_ && a.components_ == b.components_;
}

void UtTensor::add(const ProductFunction &t) {
  if (!(t.left().field() == field_))
    throw InvalidArgument("tensor over a different field");
  const auto key = std::make_pair(ut_degree(t.left()), ut_degree(t.right()));
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

bool operator==(const UtTensor &a, const UtTensor &b) {
  return a.field_ == b.field_ && a.components_ == b.components_;
}

int ut_degree(const GroupTable &g) {
  if (!same_group(g, *ut_group(g.dim(), g.field())))
    throw InvalidArgument(g.name() + " is not a full unitriangular group");
  return g.dim();
}

// ---------------------------------------------------------------------------
// Structure maps

ClassFunction ut_mu_homogeneous(const ProductFunction &t) {
  const int i = ut_degree(t.left());
  const int n = i + ut_degree(t.right());
  const PrimeField &f = t.left().field();
  const LabelSet first = interval(i);
  const LeviTriple triple = subset_triple(n, first);
  return inflate(unstraighten(t, n, first), ut_group(n, f), *pattern_group(triple.radical, f));
}

UtCfElement ut_mu(const UtCfElement &x, const UtCfElement &y) {
  if (!(x.field() == y.field()))
    throw InvalidArgument("product of elements over different fields");
  UtCfElement out(x.field());
  for (const auto &[i, a] : x.components())
    for (const auto &[j, b] : y.components())
      out.add(ut_mu_homogeneous(ProductFunction::tensor(a, b)));
  return out;
}

ProductFunction ut_delta_component(const ClassFunction &psi, const LabelSet &subset) {
  const int n = ut_degree(psi.group());
  const PrimeField &f = psi.group().field();
  const LeviTriple triple = subset_triple(n, subset);
  const ClassFunction on_parabolic = restrict_to(psi, pattern_group(triple.parabolic, f));
  const ClassFunction on_levi = deflate(on_parabolic, *pattern_group(triple.radical, f),
                                        pattern_group(triple.levi, f));
  return straighten(on_levi, n, subset);
}

UtTensor ut_delta(const UtCfElement &x) {
  UtTensor out(x.field());
  for (const auto &[n, psi] : x.components())
    for (const LabelSet &subset : all_subsets(interval(n)))
      out.add(ut_delta_component(psi, subset));
  return out;
}

ClassFunction subgroup_indicator(const Nuio &pi, const PrimeField &f) {
  const PatternDescriptor pattern = PatternDescriptor::from_nuio(pi);
  return ClassFunction::indicator(ut_group(pi.size(), f), [&](const FqMatrix &x) { return pattern.admits(x); });
}

ClassFunction permutation_character(const Nuio &pi, const PrimeField &f) {
  return induce(ClassFunction::one(pattern_group(PatternDescriptor::from_nuio(pi), f)), ut_group(pi.size(), f));
}

UtCfElement specialize(const ScfElement &x, const PrimeField &f) {
  const Rational t(1, f.p());
  UtCfElement out(f);
  for (const auto &[pi, c] : x.terms())
    out.add(c.evaluate(t) * subgroup_indicator(pi, f));
  return out;
}

UtTensor specialize(const ScfTensor &x, const PrimeField &f) {
  const Rational t(1, f.p());
  UtTensor out(f);
  for (const auto &[k, c] : x.terms())
    out.add(c.evaluate(t) *
            ProductFunction::tensor(subgroup_indicator(k.first, f), subgroup_indicator(k.second, f)));
  return out;
}

ClassFunction dagger_cf(const ClassFunction &psi) {
  const GroupPtr g = psi.group_ptr();
  return pullback(psi, g, [](const FqMatrix &x) { return dagger(x); }, MapKind::antihomomorphism);
}

UtCfElement dagger_ut(const UtCfElement &x) {
  UtCfElement out(x.field());
  for (const auto &[n, psi] : x.components())
    out.add(dagger_cf(psi));
  return out;
}

std::string canonical(const UtCfElement &x) {
  std::string out = "F" + std::to_string(x.field().p()) + ";";
  for (const auto &[n, psi] : x.components())
    out += std::to_string(n) + "=>" + canonical(psi) + ";";
  return out;
}

std::string canonical(const UtTensor &x) {
  std::string out = "F" + std::to_string(x.field().p()) + ";";
  for (const auto &[k, t] : x.components())
    out += std::to_string(k.first) + "," + std::to_string(k.second) + "=>" + canonical(t) + ";";
  return out;
}

// ---------------------------------------------------------------------------
// Oracle checks

namespace {

std::string instance_name(const PrimeField &f, const std::string &what) {
  return "q=" + std::to_string(f.p()) + " " + what;
}

} // namespace

VerificationReport verify_coproduct_oracle(int n_max, const PrimeField &f) {
  VerificationReport report;
  for (int n = 0; n <= n_max; ++n)
    for (const Nuio &pi : enumerate_nuios(n)) {
      const UtTensor brute = ut_delta(UtCfElement::homogeneous(subgroup_indicator(pi, f)));
      const UtTensor formula = specialize(scf_coproduct(ScfElement::basis(pi)), f);
      report.record("coproduct-oracle", instance_name(f, canonical(pi)), brute, formula);
    }
  return report;
}

VerificationReport verify_product_oracle(int n_max, const PrimeField &f) {
  VerificationReport report;
  for (int total = 0; total <= n_max; ++total)
    for (int i = 0; i <= total; ++i)
      for (const Nuio &pi : enumerate_nuios(i))
        for (const Nuio &rho : enumerate_nuios(total - i)) {
          const ClassFunction brute =
              ut_mu_homogeneous(ProductFunction::tensor(subgroup_indicator(pi, f), subgroup_indicator(rho, f)));
          const ClassFunction formula = subgroup_indicator(shifted_ordinal_sum(pi, rho), f);
          report.record("product-oracle", instance_name(f, canonical(pi) + " * " + canonical(rho)), brute,
                        formula);
        }
  return report;
}

VerificationReport verify_specialization_hom(int n_max, const PrimeField &f) {
  VerificationReport report;
  for (int total = 0; total <= n_max; ++total) {
    for (int i = 0; i <= total; ++i)
      for (const Nuio &pi : enumerate_nuios(i))
        for (const Nuio &rho : enumerate_nuios(total - i)) {
          const ScfElement x = ScfElement::basis(pi), y = ScfElement::basis(rho);
          report.record("specialize-product", instance_name(f, canonical(pi) + " * " + canonical(rho)),
                        specialize(scf_product(x, y), f), ut_mu(specialize(x, f), specialize(y, f)));
        }
    for (const Nuio &pi : enumerate_nuios(total)) {
      const ScfElement x = ScfElement::basis(pi);
      report.record("specialize-coproduct", instance_name(f, canonical(pi)), specialize(scf_coproduct(x), f),
                    ut_delta(specialize(x, f)));
    }
  }
  return report;
}

VerificationReport verify_permutation_characters(int n_max, const PrimeField &f) {
  VerificationReport report;
  for (int n = 0; n <= n_max; ++n)
    for (const Nuio &pi : enumerate_nuios(n)) {
      const auto index = ut_group(n, f)->order() / pattern_group(PatternDescriptor::from_nuio(pi), f)->order();
      report.record("permutation-character", instance_name(f, canonical(pi)), permutation_character(pi, f),
                    Rational(static_cast<std::int64_t>(index)) * subgroup_indicator(pi, f));
    }
  return report;
}

} // namespace uthopf
