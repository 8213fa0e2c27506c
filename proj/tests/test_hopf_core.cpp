#include "support.hpp"

#include <uthopf/error.hpp>
#include <uthopf/scf.hpp>
#include <uthopf/scf_checks.hpp>

#include <doctest.h>

using namespace uthopf;
namespace ut = uthopf::testing;

namespace {

const Laurent t = Laurent::t();

ScfElement d(const Nuio &pi, Laurent c = 1) { return ScfElement::basis(pi, std::move(c)); }

// S from the right-hand recursion S(x) = −Σ' x₁ S(x₂), the mirror image of
// the one the library uses.
ScfElement antipode_oracle(const Nuio &pi) {
  if (pi.size() == 0)
    return ScfElement::unit();
  ScfElement out;
  for (const auto &term : coproduct_terms(pi)) {
    if (term.right.size() == pi.size())
      continue;
    out -= scf_product(d(term.left, Laurent::monomial(term.exponent)), antipode_oracle(term.right));
  }
  return out;
}

} // namespace

TEST_CASE("Laurent polynomials") {
  const Laurent x = t * t + t;
  CHECK(x.to_string() == "t + t^2");
  CHECK((x - x).is_zero());
  CHECK((Laurent::monomial(-2) * t * t) == Laurent(1));
  CHECK(x.evaluate(Rational(1, 2)) == Rational(3, 4));
  CHECK(Laurent::monomial(-1, Rational(3, 2)).evaluate(Rational(1, 3)) == Rational(9, 2));
  CHECK_THROWS_AS(Laurent::monomial(-1).evaluate(0), InvalidArgument);
  CHECK(((1 + t) * (1 - t)) == 1 - t * t);
  CHECK(Laurent(0).is_zero());
}

TEST_CASE("product is the shifted ordinal sum") {
  const Nuio point = Nuio::antichain(1), a2 = Nuio::antichain(2);
  CHECK(scf_product(d(point), d(a2)) == d(Nuio::from_strict(3, {{1, 2}, {1, 3}})));
  CHECK(scf_product(d(a2), d(point)) == d(Nuio::from_strict(3, {{1, 3}, {2, 3}})));
  CHECK(scf_product(ScfElement::unit(), d(a2, t)) == d(a2, t));
  CHECK(scf_product(d(a2, 1 + t), d(point, t)) == d(Nuio::from_strict(3, {{1, 3}, {2, 3}}), t + t * t));
}

TEST_CASE("coproduct of the four-element poset, term by term") {
  const Nuio pi = Nuio::from_strict(4, {{1, 4}, {2, 4}});
  const auto terms = coproduct_terms(pi);
  const auto table = ut::hand_coproduct_table();
  REQUIRE(terms.size() == 16);
  for (const auto &row : table) {
    CAPTURE(row.subset.size());
    bool found = false;
    for (const auto &term : terms)
      if (term.subset == row.subset) {
        found = true;
        CHECK(term.exponent == row.exponent);
        CHECK(term.left == row.left);
        CHECK(term.right == row.right);
      }
    CHECK(found);
  }
}

TEST_CASE("the (3,1) and (1,3) components are not swaps of each other") {
  const Nuio pi = Nuio::from_strict(4, {{1, 4}, {2, 4}});
  const ScfTensor delta = scf_coproduct(d(pi));
  const Nuio point = Nuio::antichain(1);
  const Nuio vee = Nuio::from_strict(3, {{1, 3}, {2, 3}}), one = Nuio::from_strict(3, {{1, 3}});
  const ScfTensor c31 = ScfTensor::basis(Nuio::antichain(3), point, t) + ScfTensor::basis(vee, point, t * t) +
                        ScfTensor::basis(one, point, t + 1);
  const ScfTensor c13 = ScfTensor::basis(point, one, t * t + t) + ScfTensor::basis(point, vee, t) +
                        ScfTensor::basis(point, Nuio::antichain(3), 1);
  CHECK(delta.component(3, 1) == c31);
  CHECK(delta.component(1, 3) == c13);
  CHECK(delta.component(3, 1).swapped() != delta.component(1, 3));
  CHECK(verify_noncommutativity().all_pass());
}

TEST_CASE("coproduct of a chain has no ascent factors") {
  // Every pair is related, so asc_I vanishes and each subset contributes 1.
  for (int n = 0; n <= 5; ++n) {
    const auto delta = scf_coproduct(d(Nuio::chain(n)));
    for (int i = 0; i <= n; ++i) {
      std::int64_t binom = 1;
      for (int k = 0; k < i; ++k)
        binom = binom * (n - k) / (k + 1);
      CHECK(delta.coeff(Nuio::chain(i), Nuio::chain(n - i)) == Laurent(Rational(binom)));
    }
  }
}

TEST_CASE("counit picks the empty poset") {
  CHECK(counit(ScfElement::unit() + d(Nuio::antichain(2), t)) == Laurent(1));
  CHECK(counit(d(Nuio::antichain(1))).is_zero());
}

TEST_CASE("bialgebra identities") {
  CHECK(verify_scf_associativity(5).all_pass());
  CHECK(verify_scf_coassociativity(5).all_pass());
  CHECK(verify_scf_compatibility(5).all_pass());
}

TEST_CASE("antipode") {
  const Nuio a2 = Nuio::antichain(2), c2 = Nuio::chain(2);
  CHECK(scf_antipode(d(a2)) == d(a2, -1) + d(c2, 1 + t));
  CHECK(scf_antipode(d(Nuio::antichain(1))) == d(Nuio::antichain(1), -1));
  CHECK(scf_antipode(ScfElement::unit()) == ScfElement::unit());
  CHECK(verify_antipode(5).all_pass());
  for (int n = 0; n <= 5; ++n)
    for (const Nuio &pi : enumerate_nuios(n))
      CHECK(scf_antipode(d(pi)) == antipode_oracle(pi));
}

TEST_CASE("diagram antiautomorphism") {
  CHECK(dagger_scf(d(Nuio::from_strict(4, {{1, 4}, {2, 4}}), t)) == d(Nuio::from_strict(4, {{1, 3}, {1, 4}}), t));
  CHECK(verify_dagger_symbolic(5).all_pass());
}

TEST_CASE("the verifiers notice a wrong answer") {
  // A report built from deliberately unequal sides must fail.
  VerificationReport r;
  r.record("sanity", "perturbed", d(Nuio::antichain(2)), d(Nuio::antichain(2), 1 + t));
  CHECK_FALSE(r.all_pass());
  CHECK(r.failures() == 1);
}
