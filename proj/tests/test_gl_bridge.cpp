#include "support.hpp"

#include <uthopf/error.hpp>
#include <uthopf/gl_bridge.hpp>

#include <doctest.h>

using namespace uthopf;

namespace {

// Number of one-dimensional subspaces of F_q² fixed by g.
int fixed_lines(const FqMatrix &g, const PrimeField &f) {
  int count = 0;
  const int q = f.p();
  // Lines are spanned by (1, y) for y ∈ F_q and by (0, 1).
  std::vector<std::pair<int, int>> reps{{0, 1}};
  for (int y = 0; y < q; ++y)
    reps.emplace_back(1, y);
  for (auto [a, b] : reps) {
    const int u = f.add(f.mul(g(0, 0), a), f.mul(g(0, 1), b));
    const int v = f.add(f.mul(g(1, 0), a), f.mul(g(1, 1), b));
    count += f.sub(f.mul(u, b), f.mul(v, a)) == 0;
  }
  return count;
}

} // namespace

TEST_CASE("product of trivial functions is the permutation character on lines") {
  for (int q : {2, 3, 5}) {
    const PrimeField f(q);
    const auto one = ClassFunction::one(general_linear_group(1, f));
    const ClassFunction chi = gl_mu_homogeneous(ProductFunction::tensor(one, one));
    const auto g = general_linear_group(2, f);
    for (GroupTable::Index i = 0; i < g->order(); ++i)
      CHECK(chi[i] == fixed_lines(g->element(i), f));
  }
}

TEST_CASE("GL unit and degree bookkeeping") {
  const PrimeField f(2);
  const auto x = GlCfElement::homogeneous(ClassFunction::one(general_linear_group(2, f)));
  CHECK(gl_product(GlCfElement::unit(f), x) == x);
  CHECK(gl_product(x, GlCfElement::unit(f)) == x);
  CHECK_THROWS_AS(gl_degree(*ut_group(2, f)), InvalidArgument);
}

TEST_CASE("coproduct of the trivial function") {
  const PrimeField f(3);
  const auto g = general_linear_group(2, f);
  const GlTensor d = gl_coproduct(GlCfElement::homogeneous(ClassFunction::one(g)));
  CHECK(d.components().size() == 3);
  for (const auto &[k, t] : d.components())
    CHECK(t == ProductFunction::tensor(ClassFunction::one(t.left_ptr()), ClassFunction::one(t.right_ptr())));
}

TEST_CASE("induction is a bialgebra map") {
  CHECK(verify_induction_hom(3, PrimeField(2)).all_pass());
  CHECK(verify_induction_hom(2, PrimeField(3)).all_pass());
}

TEST_CASE("Bruhat double cosets and their intersections with UT_n") {
  for (int i = 0; i <= 3; ++i)
    CHECK(verify_double_cosets(3, i, PrimeField(2)).all_pass());
  CHECK(verify_double_cosets(2, 1, PrimeField(3)).all_pass());
  CHECK(verify_bruhat_intersections(3, PrimeField(2)).all_pass());
  CHECK(verify_bruhat_intersections(2, PrimeField(3)).all_pass());
}

TEST_CASE("Mackey decomposition of restricted induction") {
  for (int i = 0; i <= 3; ++i)
    CHECK(mackey_witness(3, i, PrimeField(2)).all_pass());
  CHECK(mackey_witness(2, 1, PrimeField(3)).all_pass());
}

TEST_CASE("dagger is a GL conjugacy and commutes with induction") {
  CHECK(verify_dagger_conjugacy(3, PrimeField(2)).all_pass());
  CHECK(verify_dagger_conjugacy(3, PrimeField(3)).all_pass());
  CHECK(verify_dagger_induction(3, PrimeField(2)).all_pass());
  CHECK(verify_dagger_induction(2, PrimeField(3)).all_pass());
}
