#include "uthopf/monoid.hpp"

#include "uthopf/canonical.hpp"
#include "uthopf/error.hpp"

#include <algorithm>
#include <random>

namespace uthopf {

namespace {

const PatternDescriptor &pattern_of(const ClassFunction &psi) {
  const auto &p = psi.group().pattern();
  if (!p)
    throw InvalidArgument(psi.group().name() + " is not a pattern group");
  return *p;
}

// ψ must live on UT(τ_1) ⊕ ... ⊕ UT(τ_l) for total orders τ_i of the parts.
void require_summand(const SetComposition &a, const ClassFunction &psi) {
  const PatternDescriptor &p = pattern_of(psi);
  if (p.ground() != a.ground())
    throw InvalidArgument("class function and composition have different ground sets");
  const PairPartition parts = asc_eq_inv(a);
  for (const auto &pair : p.allowed())
    if (!parts.equalities.count(pair))
      throw InvalidArgument("pattern crosses the parts of " + canonical(a));
  std::size_t expected = 0;
  for (const auto &part : a.parts())
    expected += part.size() * (part.size() - 1) / 2;
  if (p.allowed().size() != expected)
    throw InvalidArgument("pattern is not a total order on each part of " + canonical(a));
}

std::set<LabelPair> intersect(const std::set<LabelPair> &a, const std::set<LabelPair> &b) {
  std::set<LabelPair> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

} // namespace

GroupPtr direct_sum_group(const std::vector<TotalOrder> &taus, const PrimeField &f) {
  LabelSet ground;
  std::set<LabelPair> allowed;
  for (const auto &tau : taus) {
    if (!set_intersection(ground, tau.ground()).empty())
      throw InvalidArgument("direct sum of orders on overlapping label sets");
    ground = set_union(ground, tau.ground());
    for (const auto &pair : tau.order().strict_pairs())
      allowed.insert(pair);
  }
  return pattern_group(PatternDescriptor(ground, allowed), f);
}

ClassFunction pattern_inflate(const ClassFunction &psi, const std::set<LabelPair> &extra) {
  const PatternDescriptor &p = pattern_of(psi);
  std::set<LabelPair> big = p.allowed();
  big.insert(extra.begin(), extra.end());
  const PrimeField &f = psi.group().field();
  const GroupPtr kernel = pattern_group(PatternDescriptor(p.ground(), extra), f);
  return inflate(psi, pattern_group(PatternDescriptor(p.ground(), big), f), *kernel);
}

ClassFunction pattern_resflate(const ClassFunction &psi, const SetComposition &b) {
  const PatternDescriptor &p = pattern_of(psi);
  if (p.ground() != b.ground())
    throw InvalidArgument("class function and composition have different ground sets");
  const PairPartition parts = asc_eq_inv(b);
  const std::set<LabelPair> levi = intersect(p.allowed(), parts.equalities);
  const std::set<LabelPair> radical = intersect(p.allowed(), parts.ascents);
  std::set<LabelPair> parabolic = levi;
  parabolic.insert(radical.begin(), radical.end());
  const PrimeField &f = psi.group().field();
  const LabelSet &g = p.ground();
  const ClassFunction on_parabolic = restrict_to(psi, pattern_group(PatternDescriptor(g, parabolic), f));
  return deflate(on_parabolic, *pattern_group(PatternDescriptor(g, radical), f),
                 pattern_group(PatternDescriptor(g, levi), f));
}

ClassFunction monoid_mu(const SetComposition &a, const ClassFunction &psi) {
  require_summand(a, psi);
  return pattern_inflate(psi, asc_eq_inv(a).ascents);
}

ClassFunction monoid_delta(const SetComposition &a, const ClassFunction &psi) {
  require_summand(SetComposition(a.ground().empty() ? std::vector<std::vector<Label>>{}
                                                     : std::vector<std::vector<Label>>{a.ground()}),
                  psi);
  return pattern_resflate(psi, a);
}

ClassFunction monoid_mu_blocks(const SetComposition &outer, const SetComposition &inner,
                               const ClassFunction &psi) {
  require_summand(tits_product(outer, inner), psi);
  return pattern_inflate(psi, intersect(asc_eq_inv(inner).ascents, asc_eq_inv(outer).equalities));
}

ClassFunction monoid_delta_blocks(const SetComposition &outer, const SetComposition &inner,
                                  const ClassFunction &psi) {
  require_summand(outer, psi);
  return pattern_resflate(psi, inner);
}

ClassFunction species_map(const ClassFunction &psi, const LabelBijection &sigma) {
  const PatternDescriptor &p = pattern_of(psi);
  if (sigma.domain() != p.ground())
    throw InvalidArgument("relabelling domain does not match the pattern ground set");
  std::set<LabelPair> moved;
  for (auto [i, j] : p.allowed())
    moved.insert({sigma(i), sigma(j)});
  const GroupPtr target = pattern_group(PatternDescriptor(sigma.codomain(), moved), psi.group().field());
  const LabelBijection back = sigma.inverse();
  const LabelSet &codomain = sigma.codomain();
  return pullback(psi, target, [&](const FqMatrix &y) { return relabel_matrix(y, codomain, back); },
                  MapKind::homomorphism);
}

SetComposition relabel_composition(const SetComposition &a, const LabelBijection &sigma) {
  std::vector<std::vector<Label>> parts;
  for (const auto &part : a.parts())
    parts.push_back(sigma.apply(part));
  return SetComposition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Axiom suite

namespace {

// Every tuple (τ_1, ..., τ_l) of total orders on the parts.
std::vector<std::vector<TotalOrder>> order_tuples(const SetComposition &a) {
  std::vector<std::vector<TotalOrder>> out{{}};
  for (const auto &part : a.parts()) {
    std::vector<std::vector<TotalOrder>> next;
    for (const auto &prefix : out)
      for (const auto &tau : all_total_orders(part)) {
        auto t = prefix;
        t.push_back(tau);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

std::string show_orders(const std::vector<TotalOrder> &taus) {
  std::string out = "[";
  for (std::size_t k = 0; k < taus.size(); ++k) {
    out += k ? "|" : "";
    const auto &chain = taus[k].chain();
    for (std::size_t i = 0; i < chain.size(); ++i)
      out += (i ? "<" : "") + std::to_string(chain[i]);
  }
  return out + "]";
}

std::string show_map(const LabelBijection &sigma) {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : sigma.map()) {
    out += (first ? "" : ",") + std::to_string(x) + "->" + std::to_string(y);
    first = false;
  }
  return out + "}";
}

// Runs lhs/rhs over the class-indicator basis of `source` and records one
// entry for the instance.
template <class Lhs, class Rhs>
void check_on_basis(VerificationReport &report, const std::string &check, const std::string &instance,
                    const GroupPtr &source, Lhs lhs, Rhs rhs) {
  std::string left, right;
  bool ok = true;
  for (std::size_t c = 0; c < source->class_count(); ++c) {
    const ClassFunction psi = ClassFunction::class_indicator(source, c);
    const ClassFunction l = lhs(psi);
    const ClassFunction r = rhs(psi);
    ok = ok && l == r;
    left += canonical(l) + ";";
    right += canonical(r) + ";";
  }
  report.add({check, instance, ok, fingerprint(left), fingerprint(right)});
}

void check_associativity(VerificationReport &report, const SetComposition &a, const SetComposition &b,
                         const std::vector<TotalOrder> &taus, const PrimeField &f) {
  check_on_basis(
      report, "associativity", "A=" + canonical(a) + " B=" + canonical(b) + " tau=" + show_orders(taus),
      direct_sum_group(taus, f), [&](const ClassFunction &psi) { return monoid_mu(b, psi); },
      [&](const ClassFunction &psi) { return monoid_mu(a, monoid_mu_blocks(a, b, psi)); });
}

void check_coassociativity(VerificationReport &report, const SetComposition &a, const SetComposition &b,
                           const TotalOrder &phi, const PrimeField &f) {
  check_on_basis(
      report, "coassociativity", "A=" + canonical(a) + " B=" + canonical(b) + " phi=" + show_orders({phi}),
      direct_sum_group({phi}, f), [&](const ClassFunction &psi) { return monoid_delta(b, psi); },
      [&](const ClassFunction &psi) { return monoid_delta_blocks(a, b, monoid_delta(a, psi)); });
}

void check_compatibility(VerificationReport &report, const SetComposition &a, const SetComposition &b,
                         const std::vector<TotalOrder> &taus, const PrimeField &f) {
  const std::string instance = "A=" + canonical(a) + " B=" + canonical(b) + " tau=" + show_orders(taus);
  // cf(A ∧ B) ≅ cf(B ∧ A) is the identity on the direct-sum group once the
  // two compositions have the same blocks.
  std::vector<LabelSet> ab = tits_product(a, b).parts(), ba = tits_product(b, a).parts();
  std::sort(ab.begin(), ab.end());
  std::sort(ba.begin(), ba.end());
  report.record_fact("compatibility-reorder", instance, ab == ba);
  check_on_basis(
      report, "compatibility", instance, direct_sum_group(taus, f),
      [&](const ClassFunction &psi) { return monoid_delta(b, monoid_mu(a, psi)); },
      [&](const ClassFunction &psi) { return monoid_mu_blocks(b, a, monoid_delta_blocks(a, b, psi)); });
}

void check_naturality_mu(VerificationReport &report, const SetComposition &a, const std::vector<TotalOrder> &taus,
                         const LabelBijection &sigma, const PrimeField &f) {
  const SetComposition sa = relabel_composition(a, sigma);
  check_on_basis(
      report, "naturality-mu", "A=" + canonical(a) + " tau=" + show_orders(taus) + " sigma=" + show_map(sigma),
      direct_sum_group(taus, f), [&](const ClassFunction &psi) { return monoid_mu(sa, species_map(psi, sigma)); },
      [&](const ClassFunction &psi) { return species_map(monoid_mu(a, psi), sigma); });
}

void check_naturality_delta(VerificationReport &report, const SetComposition &a, const TotalOrder &phi,
                            const LabelBijection &sigma, const PrimeField &f) {
  const SetComposition sa = relabel_composition(a, sigma);
  check_on_basis(
      report, "naturality-delta",
      "A=" + canonical(a) + " phi=" + show_orders({phi}) + " sigma=" + show_map(sigma), direct_sum_group({phi}, f),
      [&](const ClassFunction &psi) { return monoid_delta(sa, species_map(psi, sigma)); },
      [&](const ClassFunction &psi) { return species_map(monoid_delta(a, psi), sigma); });
}

std::vector<LabelBijection> all_bijections(const LabelSet &ground, int shift) {
  std::vector<LabelBijection> out;
  std::vector<Label> images = ground;
  do {
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < ground.size(); ++i)
      m[ground[i]] = images[i] + shift;
    out.emplace_back(std::move(m));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace

VerificationReport axiom_suite(int n_max, const PrimeField &f) {
  VerificationReport report;
  for (int k = 0; k <= n_max; ++k) {
    const LabelSet ground = interval(k);
    const auto comps = all_compositions(ground);
    const auto orders = all_total_orders(ground);
    // σ ranges over S_I and over the same maps shifted onto a disjoint label set.
    std::vector<LabelBijection> sigmas = all_bijections(ground, 0);
    for (auto &s : all_bijections(ground, 10))
      sigmas.push_back(std::move(s));

    for (const auto &a : comps) {
      for (const auto &b : comps) {
        if (refines(b, a)) {
          for (const auto &taus : order_tuples(b))
            check_associativity(report, a, b, taus, f);
          for (const auto &phi : orders)
            check_coassociativity(report, a, b, phi, f);
        }
        for (const auto &taus : order_tuples(a))
          check_compatibility(report, a, b, taus, f);
      }
      for (const auto &sigma : sigmas) {
        for (const auto &taus : order_tuples(a))
          check_naturality_mu(report, a, taus, sigma, f);
        for (const auto &phi : orders)
          check_naturality_delta(report, a, phi, sigma, f);
      }
    }
  }
  return report;
}

namespace {

std::vector<Label> random_permutation(const LabelSet &ground, std::mt19937 &rng) {
  std::vector<Label> out = ground;
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

// A random composition: shuffle, then cut each gap with probability 1/2.
SetComposition random_composition(const LabelSet &ground, std::mt19937 &rng) {
  if (ground.empty())
    return SetComposition();
  const auto perm = random_permutation(ground, rng);
  std::bernoulli_distribution cut(0.5);
  std::vector<std::vector<Label>> parts{{perm[0]}};
  for (std::size_t i = 1; i < perm.size(); ++i) {
    if (cut(rng))
      parts.emplace_back();
    parts.back().push_back(perm[i]);
  }
  return SetComposition(std::move(parts));
}

SetComposition random_refinement(const SetComposition &a, std::mt19937 &rng) {
  SetComposition out;
  for (const auto &part : a.parts())
    out = concat(out, random_composition(part, rng));
  return out;
}

std::vector<TotalOrder> random_orders(const SetComposition &a, std::mt19937 &rng) {
  std::vector<TotalOrder> out;
  for (const auto &part : a.parts())
    out.emplace_back(random_permutation(part, rng));
  return out;
}

} // namespace

VerificationReport axiom_random(int size, int count, std::uint32_t seed, const PrimeField &f) {
  VerificationReport report;
  std::mt19937 rng(seed);
  const LabelSet ground = interval(size);
  for (int k = 0; k < count; ++k) {
    const SetComposition a = random_composition(ground, rng);
    switch (k % 4) {
    case 0: {
      const SetComposition b = random_refinement(a, rng);
      check_associativity(report, a, b, random_orders(b, rng), f);
      break;
    }
    case 1: {
      const SetComposition b = random_refinement(a, rng);
      check_coassociativity(report, a, b, TotalOrder(random_permutation(ground, rng)), f);
      break;
    }
    case 2: {
      const SetComposition b = random_composition(ground, rng);
      check_compatibility(report, a, b, random_orders(a, rng), f);
      break;
    }
    default: {
      const auto images = random_permutation(ground, rng);
      std::map<Label, Label> m;
      for (std::size_t i = 0; i < ground.size(); ++i)
        m[ground[i]] = images[i] + 10;
      const LabelBijection sigma(std::move(m));
      check_naturality_mu(report, a, random_orders(a, rng), sigma, f);
      check_naturality_delta(report, a, TotalOrder(random_permutation(ground, rng)), sigma, f);
      break;
    }
    }
  }
  return report;
}

} // namespace uthopf
