#include "support.hpp"

#include <uthopf/class_functions.hpp>
#include <uthopf/error.hpp>
#include <uthopf/ut_algebra.hpp>

#include <doctest.h>

using namespace uthopf;
namespace ut = uthopf::testing;

namespace {

// Induction straight from the double sum over G, no class shortcuts.
std::vector<Rational> induce_oracle(const ClassFunction &psi, const GroupTable &g) {
  const GroupTable &k = psi.group();
  const PrimeField &f = g.field();
  std::vector<Rational> out;
  for (const auto &y : g.elements()) {
    Rational sum = 0;
    for (const auto &x : g.elements()) {
      const FqMatrix c = multiply(multiply(x, y, f), inverse(x, f), f);
      if (k.contains(c))
        sum += psi.at(c);
    }
    out.push_back(sum / Rational(static_cast<std::int64_t>(k.order())));
  }
  return out;
}

} // namespace

TEST_CASE("class functions must be constant on classes") {
  const auto g = ut_group(3, PrimeField(2));
  std::vector<Rational> v(g->order(), 0);
  CHECK_NOTHROW(ClassFunction(g, v));
  // Pick an element from a class of size > 1 and perturb it alone.
  for (std::size_t c = 0; c < g->class_count(); ++c)
    if (g->class_size(c) > 1) {
      v[g->class_rep(c)] = 1;
      break;
    }
  CHECK_THROWS_AS(ClassFunction(g, v), InvalidArgument);
  CHECK_THROWS_AS(ClassFunction(g, std::vector<Rational>(3)), InvalidArgument);
}

TEST_CASE("class indicators are orthogonal") {
  const auto g = ut_group(4, PrimeField(2));
  for (std::size_t a = 0; a < g->class_count(); ++a)
    for (std::size_t b = 0; b < g->class_count(); ++b) {
      const Rational expected =
          a == b ? Rational(static_cast<std::int64_t>(g->class_size(a)), static_cast<std::int64_t>(g->order()))
                 : Rational(0);
      CHECK(inner_product(ClassFunction::class_indicator(g, a), ClassFunction::class_indicator(g, b)) == expected);
    }
}

TEST_CASE("arithmetic refuses mixed groups") {
  const auto a = ClassFunction::one(ut_group(2, PrimeField(2)));
  const auto b = ClassFunction::one(ut_group(2, PrimeField(3)));
  CHECK_THROWS_AS(a + b, InvalidArgument);
  CHECK((a - a).is_zero());
  CHECK((Rational(2) * a).at(FqMatrix::identity(2)) == 2);
}

TEST_CASE("induction matches the double-sum definition") {
  const PrimeField f(2);
  const auto g = general_linear_group(3, f);
  const auto k = ut_group(3, f);
  for (std::size_t c = 0; c < k->class_count(); ++c) {
    const auto psi = ClassFunction::class_indicator(k, c);
    CHECK(induce(psi, g).values() == induce_oracle(psi, *g));
  }
  // Ind of the trivial function takes the index at the identity.
  const auto ind = induce(ClassFunction::one(k), g);
  CHECK(ind.at(FqMatrix::identity(3)) == Rational(static_cast<std::int64_t>(g->order() / k->order())));
}

TEST_CASE("induction from a pattern subgroup inside UT_4(F_3)") {
  const PrimeField f(3);
  const auto g = ut_group(4, f);
  const auto h = pattern_group(PatternDescriptor::from_nuio(Nuio::from_strict(4, {{1, 4}, {2, 4}})), f);
  for (std::size_t c = 0; c < h->class_count(); c += 2) {
    const auto psi = ClassFunction::class_indicator(h, c);
    CHECK(induce(psi, g).values() == induce_oracle(psi, *g));
  }
}

TEST_CASE("Frobenius reciprocity and inflation adjointness") {
  const PrimeField f(2);
  CHECK(ut::frobenius_check(ut_group(3, f), general_linear_group(3, f)).all_pass());
  const TotalOrder tau({1, 2, 3, 4});
  const auto t = levi_radical_parabolic(tau, SetComposition({{1, 2}, {3, 4}}));
  const auto up = pattern_group(t.parabolic, f);
  CHECK(ut::frobenius_check(up, ut_group(4, f)).all_pass());
  CHECK(ut::inflation_check(pattern_group(t.levi, f), up, pattern_group(t.radical, f)).all_pass());
}

TEST_CASE("an unnormalized induction would break reciprocity") {
  // Scaling Ind by |K| must be detected by the same check.
  const PrimeField f(2);
  const auto k = ut_group(2, f), g = general_linear_group(2, f);
  const auto psi = ClassFunction::class_indicator(k, 0);
  const auto phi = ClassFunction::one(g);
  const Rational scaled = inner_product(Rational(static_cast<std::int64_t>(k->order())) * induce(psi, g), phi);
  CHECK(scaled != inner_product(psi, restrict_to(phi, k)));
  CHECK(inner_product(induce(psi, g), phi) == inner_product(psi, restrict_to(phi, k)));
}

TEST_CASE("deflation undoes inflation") {
  const PrimeField f(3);
  const TotalOrder tau({1, 2, 3});
  for (const auto &a : all_compositions(interval(3))) {
    const auto t = levi_radical_parabolic(tau, a);
    const auto l = pattern_group(t.levi, f), h = pattern_group(t.radical, f), k = pattern_group(t.parabolic, f);
    for (std::size_t c = 0; c < l->class_count(); ++c) {
      const auto psi = ClassFunction::class_indicator(l, c);
      CHECK(deflate(inflate(psi, k, *h), *h, l) == psi);
    }
  }
}

TEST_CASE("inflation needs a normal kernel") {
  const PrimeField f(2);
  const auto g = ut_group(3, f);
  const auto not_normal = pattern_group(PatternDescriptor({1, 2, 3}, {{1, 2}}), f);
  const auto complement = pattern_group(PatternDescriptor({1, 2, 3}, {{2, 3}}), f);
  CHECK_THROWS_AS(inflate(ClassFunction::one(complement), g, *not_normal), InvalidArgument);
}

TEST_CASE("resflation through the parabolic equals the closed form") {
  const PrimeField f(2);
  for (const auto &chain : std::vector<std::vector<Label>>{{1, 2, 3}, {3, 1, 2}, {2, 4, 1, 3}}) {
    const TotalOrder tau(chain);
    const auto g = pattern_group(PatternDescriptor::from_order(tau.order()), f);
    for (const auto &a : all_compositions(tau.ground()))
      for (std::size_t c = 0; c < g->class_count(); ++c) {
        const auto psi = ClassFunction::class_indicator(g, c);
        CHECK(resflate(psi, tau, a) == resflate_closed_form(psi, tau, a));
      }
  }
}

TEST_CASE("pullback checks the map") {
  const PrimeField f(3);
  const auto g = ut_group(3, f);
  const auto psi = ClassFunction::class_indicator(g, 2);
  const auto back = pullback(psi, g, [](const FqMatrix &x) { return dagger(x); }, MapKind::antihomomorphism);
  CHECK(back == dagger_cf(psi));
  CHECK(pullback(back, g, [](const FqMatrix &x) { return dagger(x); }, MapKind::antihomomorphism) == psi);
  CHECK_THROWS_AS(pullback(psi, g, [](const FqMatrix &x) { return dagger(x); }, MapKind::homomorphism),
                  InvalidArgument);
}

TEST_CASE("straightening round-trips on every subset") {
  const PrimeField f(2);
  for (const LabelSet &s : all_subsets(interval(4))) {
    const auto ul = pattern_group(subset_triple(4, s).levi, f);
    for (std::size_t c = 0; c < ul->class_count(); ++c) {
      const auto psi = ClassFunction::class_indicator(ul, c);
      const auto t = straighten(psi, 4, s);
      CHECK(ut_degree(t.left()) == static_cast<int>(s.size()));
      CHECK(ut_degree(t.right()) == 4 - static_cast<int>(s.size()));
      CHECK(unstraighten(t, 4, s) == psi);
    }
  }
}

TEST_CASE("product functions") {
  const PrimeField f(2);
  const auto a = ut_group(2, f), b = ut_group(3, f);
  const auto x = ClassFunction::class_indicator(a, 1), y = ClassFunction::class_indicator(b, 3);
  const auto t = ProductFunction::tensor(x, y);
  CHECK(t.swapped().swapped() == t);
  const auto terms = t.class_terms();
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].coeff == 1);
  CHECK(terms[0].left_class == 1);
  CHECK(terms[0].right_class == 3);
  CHECK(ProductFunction::zero(a, b).is_zero());
  std::vector<Rational> bad(a->order() * b->order(), 0);
  for (std::size_t c = 0; c < b->class_count(); ++c)
    if (b->class_size(c) > 1) {
      bad[b->class_rep(c)] = 1;
      break;
    }
  CHECK_THROWS_AS(ProductFunction(a, b, bad), InvalidArgument);
}
