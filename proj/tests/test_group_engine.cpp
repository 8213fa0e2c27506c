#include "support.hpp"

#include <uthopf/error.hpp>
#include <uthopf/group_engine.hpp>

#include <doctest.h>

#include <random>

using namespace uthopf;
namespace ut = uthopf::testing;

namespace {

FqMatrix random_invertible(int n, const PrimeField &f, std::mt19937 &rng) {
  std::uniform_int_distribution<int> digit(0, f.p() - 1);
  while (true) {
    FqMatrix m(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m.set(r, c, digit(rng));
    if (rank(m, f) == n)
      return m;
  }
}

// Conjugacy classes by repeated conjugation, independent of the table.
std::size_t class_count_oracle(const GroupTable &g) {
  const PrimeField &f = g.field();
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i])
      continue;
    ++count;
    for (const auto &x : g.elements())
      seen[g.index_of(multiply(multiply(x, g.element(static_cast<GroupTable::Index>(i)), f), inverse(x, f), f))] =
          true;
  }
  return count;
}

} // namespace

TEST_CASE("prime fields") {
  for (int bad : {-3, 0, 1, 4, 9, 37, 41})
    CHECK_THROWS_AS(PrimeField{bad}, InvalidArgument);
  for (int p : {2, 3, 5, 7, 31}) {
    const PrimeField f(p);
    for (int a = 1; a < p; ++a)
      CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(-1) == p - 1);
  }
}

TEST_CASE("matrix arithmetic") {
  std::mt19937 rng(11);
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 5; ++n) {
      const PrimeField f(p);
      const FqMatrix m = random_invertible(n, f, rng);
      CHECK(multiply(m, inverse(m, f), f) == FqMatrix::identity(n));
      CHECK(multiply(inverse(m, f), m, f) == FqMatrix::identity(n));
      CHECK(transpose(transpose(m)) == m);
    }
  const PrimeField f(3);
  const FqMatrix singular = FqMatrix::from_rows({{1, 2}, {2, 1}}, f);
  CHECK(rank(singular, f) == 1);
  CHECK_THROWS_AS(inverse(singular, f), InvalidArgument);
  CHECK(FqMatrix::from_rows({{1, 4}, {0, 1}}, PrimeField(3))(0, 1) == 1);
  CHECK(FqMatrix::from_rows({{1, 2}, {3, 4}}, PrimeField(5)).digits() == "1234");
}

TEST_CASE("dagger transposes across the antidiagonal") {
  const PrimeField f(5);
  const FqMatrix x = FqMatrix::from_rows({{1, 4, 0, 0}, {2, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 3}}, f);
  const FqMatrix expected = FqMatrix::from_rows({{3, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 4}, {0, 0, 2, 1}}, f);
  CHECK(dagger(x) == expected);
  CHECK(dagger(expected) == x);

  std::mt19937 rng(3);
  for (int n = 1; n <= 4; ++n) {
    const FqMatrix a = random_invertible(n, f, rng), b = random_invertible(n, f, rng);
    CHECK(dagger(multiply(a, b, f)) == multiply(dagger(b), dagger(a), f));
  }
}

TEST_CASE("permutation matrices and coset representatives") {
  const PrimeField f(2);
  const FqMatrix p = permutation_matrix({2, 3, 1});
  // P e_1 = e_2: column 1 has its one in row 2.
  CHECK(p(1, 0) == 1);
  CHECK(p(2, 1) == 1);
  CHECK(p(0, 2) == 1);
  CHECK(coset_permutation(4, {2, 4}) == std::vector<int>{2, 4, 1, 3});
  CHECK(coset_rep_w(4, {2, 4}) == permutation_matrix({2, 4, 1, 3}));
  CHECK_THROWS_AS(permutation_matrix({1, 1}), InvalidArgument);
}

TEST_CASE("relabelling agrees with conjugation by the permutation matrix") {
  const PrimeField f(3);
  std::mt19937 rng(5);
  const LabelSet ground = interval(4);
  const std::vector<int> images{3, 1, 4, 2};
  std::map<Label, Label> m;
  for (int i = 0; i < 4; ++i)
    m[i + 1] = images[static_cast<std::size_t>(i)];
  const LabelBijection sigma(m);
  const FqMatrix p = permutation_matrix(images);
  for (int trial = 0; trial < 20; ++trial) {
    const FqMatrix x = random_invertible(4, f, rng);
    CHECK(relabel_matrix(x, ground, sigma) == multiply(multiply(p, x, f), inverse(p, f), f));
  }
}

TEST_CASE("pattern descriptors validate their pairs") {
  CHECK_THROWS_AS(PatternDescriptor({1, 2}, {{2, 2}}), InvalidArgument);
  CHECK_THROWS_AS(PatternDescriptor({1, 2, 3}, {{1, 2}, {2, 3}}), InvalidArgument);
  CHECK_THROWS_AS(PatternDescriptor({1, 2}, {{1, 2}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(PatternDescriptor({1, 2}, {{1, 3}}), InvalidArgument);
  CHECK_NOTHROW(PatternDescriptor({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}));
}

TEST_CASE("pattern group orders match a brute-force count") {
  for (int q : {2, 3})
    for (int n = 0; n <= 4; ++n)
      for (const Nuio &pi : enumerate_nuios(n)) {
        const auto g = pattern_group(PatternDescriptor::from_nuio(pi), PrimeField(q));
        CHECK(static_cast<std::int64_t>(g->order()) == ut::pattern_count_oracle(pi, q));
        CHECK(static_cast<std::int64_t>(g->order()) == ut::ipow(q, static_cast<int>(pi.strict_pairs().size())));
      }
}

TEST_CASE("conjugacy classes of small unitriangular groups") {
  // k(UT_3(q)) = q² + q − 1 and k(UT_4(q)) = 2q³ + q² − 2q.
  for (int q : {2, 3}) {
    const PrimeField f(q);
    CHECK(ut_group(3, f)->class_count() == static_cast<std::size_t>(q * q + q - 1));
    CHECK(ut_group(4, f)->class_count() == static_cast<std::size_t>(2 * q * q * q + q * q - 2 * q));
    CHECK(ut_group(3, f)->class_count() == class_count_oracle(*ut_group(3, f)));
  }
  const auto g = ut_group(4, PrimeField(2));
  std::size_t total = 0;
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    total += g->class_size(c);
    CHECK(g->class_of(g->class_rep(c)) == c);
    CHECK(g->order() % g->class_size(c) == 0);
  }
  CHECK(total == g->order());
  CHECK(g->is_closed());
}

TEST_CASE("general linear groups") {
  for (auto [n, q] : {std::pair{0, 2}, {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {3, 3}, {1, 5}, {2, 5}}) {
    const auto g = general_linear_group(n, PrimeField(q));
    CHECK(static_cast<std::int64_t>(g->order()) == ut::gl_order_oracle(n, q));
    CHECK(gl_order(n, q) == static_cast<std::uint64_t>(ut::gl_order_oracle(n, q)));
  }
  // Class numbers: q − 1, q² − 1, and 6 for GL_3(F_2).
  CHECK(general_linear_group(1, PrimeField(5))->class_count() == 4);
  CHECK(general_linear_group(2, PrimeField(3))->class_count() == 8);
  CHECK(general_linear_group(3, PrimeField(2))->class_count() == 6);
  CHECK(general_linear_group(2, PrimeField(2))->class_count() == class_count_oracle(*general_linear_group(2, PrimeField(2))));
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(general_linear_group(3, PrimeField(5)), BudgetExceeded);
  CHECK_THROWS_AS(ut_group(6, PrimeField(3)), BudgetExceeded);
  CHECK_THROWS_AS(general_linear_group(2, PrimeField(3), 10), BudgetExceeded);
}

TEST_CASE("levi, radical and parabolic pattern subgroups") {
  const LeviTriple t = subset_triple(4, {1, 2});
  CHECK(t.levi.allowed() == std::set<LabelPair>{{1, 2}, {3, 4}});
  CHECK(t.radical.allowed() == std::set<LabelPair>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(t.parabolic.allowed().size() == 6);
  CHECK(subset_composition(4, {}) == SetComposition({{1, 2, 3, 4}}));

  const PrimeField f(2);
  const TotalOrder tau({1, 2, 3, 4});
  for (const auto &a : all_compositions(interval(4))) {
    const LeviTriple x = levi_radical_parabolic(tau, a);
    const auto up = pattern_group(x.parabolic, f), ur = pattern_group(x.radical, f), ul = pattern_group(x.levi, f);
    CHECK(up->order() == ul->order() * ur->order());
    CHECK(is_subgroup(*ur, *up));
    CHECK(is_normal_subgroup(*ur, *up));
    for (const auto &g : up->elements()) {
      const auto [gl, gr] = semidirect_factorize(g, *ul, *ur);
      CHECK(multiply(gl, gr, f) == g);
    }
  }
}

TEST_CASE("GL block predicates") {
  const PrimeField f(3);
  const FqMatrix x = FqMatrix::from_rows({{1, 2, 1}, {0, 2, 0}, {0, 1, 1}}, f);
  CHECK(in_parabolic(x, 1, f));
  CHECK_FALSE(in_parabolic(x, 2, f));
  CHECK_FALSE(in_levi(x, 1, f));
  CHECK(in_radical(FqMatrix::from_rows({{1, 0, 2}, {0, 1, 1}, {0, 0, 1}}, f), 2));
  CHECK_FALSE(in_radical(x, 1));
}

TEST_CASE("subgroups built by filtering and conjugation") {
  const PrimeField f(2);
  const auto g = general_linear_group(3, f);
  const auto p = subgroup_where(*g, [&](const FqMatrix &x) { return in_parabolic(x, 1, f); }, "test P_1 in GL_3(F2)");
  CHECK(p->order() == 1u * 6u * 4u);
  CHECK(p->is_closed());
  const FqMatrix w = coset_rep_w(3, {2});
  const auto c = conjugate_subgroup(*p, w, "test wPw^-1");
  CHECK(c->order() == p->order());
  CHECK(c->contains(multiply(multiply(w, p->element(3), f), inverse(w, f), f)));
}
