#include "commands.hpp"

#include <uthopf/error.hpp>
#include <uthopf/gl_bridge.hpp>
#include <uthopf/monoid.hpp>
#include <uthopf/scf_checks.hpp>
#include <uthopf/serialize.hpp>
#include <uthopf/ut_algebra.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace uthopf::cli {

namespace {

constexpr int kMaxNuioSize = 10;
constexpr int kDefaultGlDegree = 3;

struct Options {
  std::string format = "text";
  int n = 3;
  int q = 2;
  bool dyck = false;
  bool expand = false;
  bool extended = false;
  int samples = 0;
  int sample_size = 0;
  unsigned seed = 1;
  std::vector<std::string> posets;
  std::vector<std::string> inputs;
};

bool as_json(const Options &o) { return o.format == "json"; }

void add_format(CLI::App *cmd, Options &o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_operands(CLI::App *cmd, Options &o) {
  cmd->add_option("--poset", o.posets, "Poset or element as inline JSON");
  cmd->add_option("--input", o.inputs, "File holding poset or element JSON");
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<ScfElement> load_operands(const Options &o, std::size_t expected) {
  std::vector<ScfElement> out;
  for (const auto &text : o.posets)
    out.push_back(scf_from_json(parse_json(text)));
  for (const auto &path : o.inputs)
    out.push_back(scf_from_json(parse_json(read_file(path))));
  if (out.size() != expected)
    throw InvalidArgument("expected " + std::to_string(expected) + " operand(s) from --poset/--input, got " +
                          std::to_string(out.size()));
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering

std::string show(const Nuio &pi) {
  std::string out = "n=" + std::to_string(pi.size()) + " [";
  bool first = true;
  for (const auto &[i, j] : pi.strict_pairs()) {
    out += (first ? "[" : ",[") + std::to_string(i) + "," + std::to_string(j) + "]";
    first = false;
  }
  return out + "]";
}

void print(std::ostream &out, const ScfElement &x) {
  if (x.is_zero())
    out << "0\n";
  for (const auto &[pi, c] : x.terms())
    out << c.to_string() << "\t" << show(pi) << "\n";
}

void print(std::ostream &out, const ScfTensor &x) {
  if (x.is_zero())
    out << "0\n";
  for (const auto &[key, c] : x.terms())
    out << c.to_string() << "\t" << show(key.first) << " (x) " << show(key.second) << "\n";
}

void print(std::ostream &out, const ClassFunction &psi) {
  const GroupTable &g = psi.group();
  out << g.name() << "  order " << g.order() << ", " << g.class_count() << " classes\n";
  for (std::size_t c = 0; c < g.class_count(); ++c)
    out << "  " << g.element(g.class_rep(c)).digits() << "\t" << g.class_size(c) << "\t"
        << to_string(psi[g.class_rep(c)]) << "\n";
}

template <class Graded>
void emit_graded(std::ostream &out, const Options &o, const Graded &x) {
  if (as_json(o)) {
    Json arr = Json::array();
    for (const auto &[n, psi] : x.components())
      arr.push_back(to_json(psi));
    out << Json{{"field", x.field().p()}, {"components", std::move(arr)}}.dump(2) << "\n";
    return;
  }
  if (x.components().empty())
    out << "0\n";
  for (const auto &[n, psi] : x.components())
    print(out, psi);
}

template <class T>
void emit(std::ostream &out, const Options &o, const T &x) {
  if (as_json(o))
    out << to_json(x).dump(2) << "\n";
  else
    print(out, x);
}

int emit_report(std::ostream &out, const Options &o, const std::string &title, const VerificationReport &r) {
  if (as_json(o)) {
    out << to_json(r).dump(2) << "\n";
  } else {
    for (const auto &c : r.results())
      if (!c.pass)
        out << "FAIL " << c.check << " [" << c.instance << "] lhs " << c.lhs_hash << " rhs " << c.rhs_hash << "\n";
    out << title << ": " << r.size() << " checks, " << r.failures() << " failures\n";
  }
  return r.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Subcommands

int nuio_list(std::ostream &out, const Options &o) {
  const auto all = enumerate_nuios(o.n);
  if (as_json(o)) {
    Json arr = Json::array();
    for (const auto &pi : all) {
      Json j = to_json(pi);
      if (o.dyck)
        j["dyck"] = nuio_to_dyck(pi).str();
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto &pi : all)
    out << (o.dyck ? nuio_to_dyck(pi).str() + "\t" : "") << show(pi) << "\n";
  return 0;
}

int scf_command(std::ostream &out, const Options &o, const std::string &verb) {
  if (verb == "product") {
    const auto ops = load_operands(o, 2);
    emit(out, o, scf_product(ops[0], ops[1]));
    return 0;
  }
  const ScfElement x = load_operands(o, 1)[0];
  if (verb == "antipode") {
    emit(out, o, scf_antipode(x));
  } else if (verb == "dagger") {
    emit(out, o, dagger_scf(x));
  } else if (!o.expand) {
    emit(out, o, scf_coproduct(x));
  } else {
    // One line per (term, subset) before like terms are collected.
    Json arr = Json::array();
    for (const auto &[pi, c] : x.terms())
      for (const auto &t : coproduct_terms(pi)) {
        const Laurent coeff = c * Laurent::monomial(t.exponent);
        if (as_json(o)) {
          arr.push_back({{"poset", to_json(pi)},
                         {"subset", t.subset},
                         {"coeff", to_json(coeff)},
                         {"left", to_json(t.left)},
                         {"right", to_json(t.right)}});
          continue;
        }
        std::string subset = "{";
        for (std::size_t k = 0; k < t.subset.size(); ++k)
          subset += (k ? "," : "") + std::to_string(t.subset[k]);
        out << "I=" << subset << "}\t" << coeff.to_string() << "\t" << show(t.left) << " (x) " << show(t.right)
            << "\n";
      }
    if (as_json(o))
      out << Json{{"terms", std::move(arr)}}.dump(2) << "\n";
  }
  return 0;
}

int verify_command(std::ostream &out, const Options &o, const std::string &verb) {
  const PrimeField f(o.q);
  if (verb == "monoid-axioms") {
    VerificationReport r = axiom_suite(o.n, f);
    if (o.samples > 0)
      r.append(axiom_random(o.sample_size > 0 ? o.sample_size : o.n + 1, o.samples, o.seed, f));
    return emit_report(out, o, "monoid-axioms", r);
  }
  if (verb == "oracle") {
    VerificationReport r = verify_coproduct_oracle(o.n, f);
    r.append(verify_product_oracle(o.n, f));
    return emit_report(out, o, "oracle", r);
  }
  if (verb == "induction-hom")
    return emit_report(out, o, "induction-hom", verify_induction_hom(o.n, f));

  VerificationReport r;
  const ScfTensor delta = scf_coproduct(ScfElement::basis(Nuio::from_strict(4, {{1, 4}, {2, 4}})));
  r.record_fact("coproduct-asymmetry", "(3,1) against swapped (1,3) for n=4 [[1,4],[2,4]]",
                delta.component(3, 1) != delta.component(1, 3).swapped());
  r.append(verify_noncommutativity());
  return emit_report(out, o, "noncocommutativity", r);
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact class-function Hopf algebras of unitriangular groups"};
  app.name("uthopf");
  app.require_subcommand(1);
  Options o;

  auto *nuio = app.add_subcommand("nuio", "Natural unit interval orders")->require_subcommand(1);
  auto *nuio_list_cmd = nuio->add_subcommand("list", "Enumerate NO_n");
  nuio_list_cmd->add_option("--n", o.n, "Size of the ground set")->required()->check(CLI::Range(0, kMaxNuioSize));
  nuio_list_cmd->add_flag("--dyck", o.dyck, "Show Dyck words");
  add_format(nuio_list_cmd, o);

  auto *scf = app.add_subcommand("scf", "Structure maps on the subgroup-indicator basis")->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App *>> scf_verbs;
  for (const char *verb : {"product", "coproduct", "antipode", "dagger"}) {
    auto *cmd = scf->add_subcommand(verb);
    add_operands(cmd, o);
    add_format(cmd, o);
    scf_verbs.emplace_back(verb, cmd);
  }
  scf_verbs[0].second->description("Product of two operands");
  scf_verbs[1].second->description("Coproduct");
  scf_verbs[1].second->add_flag("--expand", o.expand, "List every subset term before collecting");
  scf_verbs[2].second->description("Antipode");
  scf_verbs[3].second->description("Diagram antiautomorphism");

  auto *ut = app.add_subcommand("ut", "Class functions on UT_n(F_q)")->require_subcommand(1);
  auto *ut_spec = ut->add_subcommand("specialize", "Evaluate at t = 1/q as class functions");
  auto *gl = app.add_subcommand("gl", "Class functions on GL_n(F_q)")->require_subcommand(1);
  auto *gl_ind = gl->add_subcommand("induce", "Specialize, then induce to GL_n(F_q)");
  for (auto *cmd : {ut_spec, gl_ind}) {
    cmd->add_option("--q", o.q, "Field size (a prime)")->required();
    add_operands(cmd, o);
    add_format(cmd, o);
  }

  auto *verify = app.add_subcommand("verify", "Verification suites")->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App *>> verify_verbs;
  for (const char *verb : {"monoid-axioms", "oracle", "induction-hom", "noncocommutativity"}) {
    auto *cmd = verify->add_subcommand(verb);
    add_format(cmd, o);
    verify_verbs.emplace_back(verb, cmd);
    if (std::string(verb) == "noncocommutativity")
      continue;
    cmd->add_option("--n", o.n, "Largest degree")->check(CLI::Range(0, 6));
    cmd->add_option("--q", o.q, "Field size (a prime)");
  }
  verify_verbs[0].second->add_option("--samples", o.samples, "Random instances on top of the exhaustive run")
      ->check(CLI::NonNegativeNumber);
  verify_verbs[0].second->add_option("--sample-size", o.sample_size, "Ground-set size of the random instances")
      ->check(CLI::Range(1, 5));
  verify_verbs[0].second->add_option("--seed", o.seed, "Seed for the random instances");
  verify_verbs[2].second->add_flag("--extended", o.extended, "Allow degree 4 and above");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_verbs[2].second->parsed() && o.n > kDefaultGlDegree && !o.extended)
      throw InvalidArgument("induction-hom beyond degree " + std::to_string(kDefaultGlDegree) +
                            " needs --extended");
    if (nuio_list_cmd->parsed())
      return nuio_list(out, o);
    for (const auto &[verb, cmd] : scf_verbs)
      if (cmd->parsed())
        return scf_command(out, o, verb);
    if (ut_spec->parsed() || gl_ind->parsed()) {
      const PrimeField f(o.q);
      const ScfElement x = load_operands(o, 1)[0];
      if (ut_spec->parsed())
        emit_graded(out, o, specialize(x, f));
      else
        emit_graded(out, o, induce_ut_to_gl(specialize(x, f)));
      return 0;
    }
    for (const auto &[verb, cmd] : verify_verbs)
      if (cmd->parsed()) {
        if (verb != "noncocommutativity")
          PrimeField check(o.q);
        return verify_command(out, o, verb);
      }
  } catch (const BudgetExceeded &e) {
    err << "budget exceeded: " << e.what() << " (raise UTHOPF_BUDGET to allow larger groups)\n";
    return 2;
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace uthopf::cli
