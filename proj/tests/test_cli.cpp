#include "commands.hpp"

#include <uthopf/serialize.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace uthopf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "uthopf");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

const std::string kPi = R"({"n":4,"strict":[[1,4],[2,4]]})";

} // namespace

TEST_CASE("nuio list") {
  const auto r = run({"nuio", "list", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 14);
  const auto j = run({"nuio", "list", "--n", "5", "--dyck", "--format", "json"});
  CHECK(parse_json(j.out).size() == 42);
  CHECK(parse_json(j.out)[0].contains("dyck"));
}

TEST_CASE("scf coproduct") {
  const auto r = run({"scf", "coproduct", "--poset", kPi, "--format", "json"});
  REQUIRE(r.code == 0);
  const ScfTensor t = scf_tensor_from_json(parse_json(r.out));
  CHECK(t == scf_coproduct(ScfElement::basis(nuio_from_json(parse_json(kPi)))));
  const auto e = run({"scf", "coproduct", "--expand", "--poset", kPi});
  CHECK(lines(e.out) == 16);
  const auto ej = run({"scf", "coproduct", "--expand", "--poset", kPi, "--format", "json"});
  CHECK(parse_json(ej.out)["terms"].size() == 16);
}

TEST_CASE("scf antipode, product and dagger") {
  const auto r = run({"scf", "antipode", "--poset", R"({"n":0,"strict":[]})", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(scf_from_json(parse_json(r.out)) == ScfElement::unit());

  const auto p = run({"scf", "product", "--poset", R"({"n":1,"strict":[]})", "--poset", R"({"n":2,"strict":[]})",
                      "--format", "json"});
  REQUIRE(p.code == 0);
  CHECK(scf_from_json(parse_json(p.out)) == ScfElement::basis(Nuio::from_strict(3, {{1, 2}, {1, 3}})));
  CHECK(run({"scf", "product", "--poset", kPi}).code == 2);

  const auto d = run({"scf", "dagger", "--poset", kPi, "--format", "json"});
  CHECK(scf_from_json(parse_json(d.out)) == ScfElement::basis(Nuio::from_strict(4, {{1, 3}, {1, 4}})));
}

TEST_CASE("input files") {
  const std::string path = (std::filesystem::temp_directory_path() / "uthopf_cli_test_input.json").string();
  {
    std::ofstream f(path);
    f << to_json(ScfElement::basis(Nuio::antichain(2), Laurent::t())).dump();
  }
  const auto r = run({"scf", "antipode", "--input", path, "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(scf_from_json(parse_json(r.out)) == scf_antipode(ScfElement::basis(Nuio::antichain(2), Laurent::t())));
  CHECK(run({"scf", "antipode", "--input", "no/such/file.json"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("specialize and induce") {
  const auto u = run({"ut", "specialize", "--q", "2", "--poset", kPi, "--format", "json"});
  REQUIRE(u.code == 0);
  const Json uj = parse_json(u.out);
  CHECK(uj["components"].size() == 1);
  const auto g = run({"gl", "induce", "--q", "2", "--poset", R"({"n":2,"strict":[]})", "--format", "json"});
  REQUIRE(g.code == 0);
  CHECK(parse_json(g.out)["components"][0]["group_id"] == "GL_2(F2)");
  CHECK(run({"ut", "specialize", "--q", "6", "--poset", kPi}).code == 2);
}

TEST_CASE("verify subcommands") {
  CHECK(run({"verify", "noncocommutativity"}).code == 0);
  CHECK(run({"verify", "oracle", "--n", "3", "--q", "2"}).code == 0);
  CHECK(run({"verify", "monoid-axioms", "--n", "2", "--q", "2", "--samples", "4"}).code == 0);
  CHECK(run({"verify", "induction-hom", "--n", "2", "--q", "3"}).code == 0);
  CHECK(run({"verify", "induction-hom", "--n", "4"}).code == 2);
  const auto j = run({"verify", "noncocommutativity", "--format", "json"});
  for (const auto &entry : parse_json(j.out)) {
    CHECK(entry.contains("check"));
    CHECK(entry["status"] == "pass");
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nuio", "list"}).code == 2);
  CHECK(run({"nuio", "list", "--n", "4", "--bogus"}).code == 2);
  CHECK(run({"nuio", "list", "--n", "4", "--format", "xml"}).code == 2);
  CHECK(run({"scf", "coproduct", "--poset", "{not json"}).code == 2);
  CHECK(run({"scf", "coproduct", "--poset", R"({"n":4,"strict":[[1,3],[2,3]]})"}).code == 2);
  CHECK(run({"nuio", "--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const auto a = run({"scf", "coproduct", "--poset", kPi});
  const auto b = run({"scf", "coproduct", "--poset", kPi});
  CHECK(a.out == b.out);
}
