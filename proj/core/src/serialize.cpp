#include "uthopf/serialize.hpp"

#include "uthopf/error.hpp"

namespace uthopf {

namespace {

Json pairs_json(const std::vector<LabelPair> &pairs) {
  Json out = Json::array();
  for (const auto &[i, j] : pairs)
    out.push_back({i, j});
  return out;
}

template <class F>
auto guarded(const char *what, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception &e) {
    throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

FqMatrix matrix_from_digits(const std::string &digits, int dim, const PrimeField &f) {
  if (static_cast<int>(digits.size()) != dim * dim)
    throw InvalidArgument("class representative '" + digits + "' has the wrong length");
  FqMatrix m(dim);
  for (int k = 0; k < dim * dim; ++k) {
    const char c = digits[static_cast<std::size_t>(k)];
    int v = -1;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'z')
      v = c - 'a' + 10;
    if (v < 0 || v >= f.p())
      throw InvalidArgument("class representative '" + digits + "' has an entry outside the field");
    m.set(k / dim, k % dim, v);
  }
  return m;
}

} // namespace

Json to_json(const Nuio &pi) { return {{"n", pi.size()}, {"strict", pairs_json(pi.strict_pairs())}}; }

Json to_json(const SetComposition &a) {
  Json out = Json::array();
  for (const auto &part : a.parts())
    out.push_back(part);
  return out;
}

Json to_json(const Laurent &x) {
  Json out = Json::object();
  for (const auto &[e, c] : x.terms())
    out[std::to_string(e)] = to_string(c);
  return out;
}

Json to_json(const ScfElement &x) {
  Json terms = Json::array();
  for (const auto &[pi, c] : x.terms()) {
    Json t = to_json(pi);
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return {{"terms", std::move(terms)}};
}

Json to_json(const ScfTensor &x) {
  Json terms = Json::array();
  for (const auto &[key, c] : x.terms())
    terms.push_back({{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", to_json(c)}});
  return {{"terms", std::move(terms)}};
}

Json to_json(const ClassFunction &psi) {
  const GroupTable &g = psi.group();
  Json values = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c)
    values.push_back(
        {{"class_rep", g.element(g.class_rep(c)).digits()}, {"value", to_string(psi[g.class_rep(c)])}});
  return {{"group_id", g.name()}, {"values", std::move(values)}};
}

Json to_json(const GroupTable &g) {
  Json sizes = Json::array(), reps = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    sizes.push_back(g.class_size(c));
    reps.push_back(g.element(g.class_rep(c)).digits());
  }
  return {{"group_id", g.name()}, {"order", g.order()}, {"class_sizes", std::move(sizes)},
          {"class_reps", std::move(reps)}};
}

Json to_json(const CheckResult &r) {
  return {{"check", r.check},
          {"instance", r.instance},
          {"status", r.pass ? "pass" : "fail"},
          {"lhs_hash", r.lhs_hash},
          {"rhs_hash", r.rhs_hash}};
}

Json to_json(const VerificationReport &report) {
  Json out = Json::array();
  for (const auto &r : report.results())
    out.push_back(to_json(r));
  return out;
}

Nuio nuio_from_json(const Json &j) {
  return guarded("poset", [&] {
    const int n = j.at("n").get<int>();
    std::vector<LabelPair> strict;
    for (const auto &p : j.at("strict")) {
      if (!p.is_array() || p.size() != 2)
        throw InvalidArgument("strict pairs must be [i, j]");
      strict.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    const Nuio pi = Nuio::from_strict(n, strict);
    if (!is_nuio(pi.order()))
      throw InvalidArgument("poset is not a natural unit interval order");
    return pi;
  });
}

Laurent laurent_from_json(const Json &j) {
  return guarded("coefficient", [&] {
    if (j.is_number_integer())
      return Laurent(Rational(j.get<std::int64_t>()));
    if (j.is_string())
      return Laurent(parse_rational(j.get<std::string>()));
    if (!j.is_object())
      throw InvalidArgument("coefficient must be an object of exponent keys");
    Laurent out;
    for (const auto &[key, value] : j.items()) {
      std::size_t used = 0;
      int e = 0;
      try {
        e = std::stoi(key, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != key.size() || key.empty())
        throw InvalidArgument("bad exponent key '" + key + "'");
      out += Laurent::monomial(e, parse_rational(value.get<std::string>()));
    }
    return out;
  });
}

ScfElement scf_from_json(const Json &j) {
  return guarded("scf element", [&] {
    if (j.contains("n"))
      return ScfElement::basis(nuio_from_json(j));
    ScfElement out;
    for (const auto &t : j.at("terms"))
      out.add(nuio_from_json(t), t.contains("coeff") ? laurent_from_json(t.at("coeff")) : Laurent(1));
    return out;
  });
}

ScfTensor scf_tensor_from_json(const Json &j) {
  return guarded("scf tensor", [&] {
    ScfTensor out;
    for (const auto &t : j.at("terms"))
      out.add(nuio_from_json(t.at("left")), nuio_from_json(t.at("right")), laurent_from_json(t.at("coeff")));
    return out;
  });
}

ClassFunction class_function_from_json(const Json &j, GroupPtr group) {
  return guarded("class function", [&] {
    if (j.at("group_id").get<std::string>() != group->name())
      throw InvalidArgument("class function belongs to " + j.at("group_id").get<std::string>());
    std::vector<Rational> per_class(group->class_count());
    std::vector<bool> seen(group->class_count(), false);
    for (const auto &v : j.at("values")) {
      const FqMatrix m = matrix_from_digits(v.at("class_rep").get<std::string>(), group->dim(), group->field());
      const auto c = group->class_of(group->index_of(m));
      per_class[c] = parse_rational(v.at("value").get<std::string>());
      seen[c] = true;
    }
    for (bool s : seen)
      if (!s)
        throw InvalidArgument("class function JSON misses a conjugacy class");
    return ClassFunction::from_class_values(group, per_class);
  });
}

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

} // namespace uthopf
