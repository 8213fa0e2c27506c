#include <uthopf/error.hpp>
#include <uthopf/serialize.hpp>
#include <uthopf/ut_algebra.hpp>

#include <doctest.h>

using namespace uthopf;

TEST_CASE("poset JSON") {
  const Nuio pi = Nuio::from_strict(4, {{1, 4}, {2, 4}});
  CHECK(to_json(pi).dump() == R"({"n":4,"strict":[[1,4],[2,4]]})");
  CHECK(nuio_from_json(to_json(pi)) == pi);
  CHECK(nuio_from_json(parse_json(R"({"n":0,"strict":[]})")) == Nuio());
  CHECK_THROWS_AS(nuio_from_json(parse_json(R"({"n":4,"strict":[[1,3],[2,3]]})")), InvalidArgument);
  CHECK_THROWS_AS(nuio_from_json(parse_json(R"({"n":2,"strict":[[1]]})")), InvalidArgument);
  CHECK_THROWS_AS(nuio_from_json(parse_json(R"({"strict":[]})")), InvalidArgument);
  CHECK_THROWS_AS(parse_json("{"), InvalidArgument);
}

TEST_CASE("Laurent and element JSON round-trip") {
  const Laurent c = Laurent::monomial(-2) + Laurent::monomial(0, Rational(3, 2));
  CHECK(to_json(c).dump() == R"({"-2":"1/1","0":"3/2"})");
  CHECK(laurent_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(laurent_from_json(parse_json(R"({"x":"1/1"})")), InvalidArgument);
  CHECK_THROWS_AS(laurent_from_json(parse_json(R"({"1":"1/0"})")), InvalidArgument);

  const ScfElement x = ScfElement::basis(Nuio::antichain(2), c) + ScfElement::basis(Nuio::chain(3), Laurent::t());
  CHECK(scf_from_json(to_json(x)) == x);
  CHECK(scf_from_json(parse_json(to_json(x).dump())) == x);
  CHECK(scf_from_json(to_json(Nuio::chain(2))) == ScfElement::basis(Nuio::chain(2)));

  const ScfTensor t = scf_coproduct(ScfElement::basis(Nuio::from_strict(4, {{1, 4}, {2, 4}})));
  CHECK(scf_tensor_from_json(to_json(t)) == t);
}

TEST_CASE("set compositions serialize as nested lists") {
  CHECK(to_json(SetComposition({{3}, {1, 2}})).dump() == "[[3],[1,2]]");
}

TEST_CASE("class function JSON round-trip") {
  const PrimeField f(3);
  const auto g = ut_group(3, f);
  const auto psi = permutation_character(Nuio::from_strict(3, {{1, 3}}), f);
  const Json j = to_json(psi);
  CHECK(j["group_id"] == g->name());
  CHECK(j["values"].size() == g->class_count());
  CHECK(class_function_from_json(j, g) == psi);

  Json missing = j;
  missing["values"].erase(0);
  CHECK_THROWS_AS(class_function_from_json(missing, g), InvalidArgument);
  CHECK_THROWS_AS(class_function_from_json(j, ut_group(2, f)), InvalidArgument);
}

TEST_CASE("group export and reports") {
  const auto g = ut_group(3, PrimeField(2));
  const Json j = to_json(*g);
  CHECK(j["order"] == 8);
  CHECK(j["class_sizes"].size() == 5);
  std::size_t total = 0;
  for (const auto &s : j["class_sizes"])
    total += s.get<std::size_t>();
  CHECK(total == 8);

  VerificationReport r;
  r.record_fact("demo", "one", true);
  r.record_fact("demo", "two", false);
  const Json rj = to_json(r);
  CHECK(rj.size() == 2);
  CHECK(rj[0]["status"] == "pass");
  CHECK(rj[1]["status"] == "fail");
  CHECK(rj[0]["lhs_hash"].get<std::string>().size() == 16);
}
