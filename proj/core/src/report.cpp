#include "uthopf/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace uthopf {

void VerificationReport::append(const VerificationReport &other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

bool VerificationReport::record_fact(std::string check, std::string instance, bool holds) {
  const std::string h = fingerprint(canonical(holds));
  add({std::move(check), std::move(instance), holds, h, fingerprint(canonical(true))});
  return holds;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results_.begin(), results_.end(), [](const CheckResult &r) { return !r.pass; }));
}

std::string fingerprint(const std::string &text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Canonical forms

std::string canonical(const Nuio &pi) {
  std::string out = std::to_string(pi.size()) + ":[";
  bool first = true;
  for (auto [i, j] : pi.strict_pairs()) {
    out += (first ? "" : ",") + std::to_string(i) + "<" + std::to_string(j);
    first = false;
  }
  return out + "]";
}

std::string canonical(const SetComposition &a) {
  std::string out = "(";
  for (std::size_t k = 0; k < a.length(); ++k) {
    out += k ? ",{" : "{";
    const auto &part = a.parts()[k];
    for (std::size_t i = 0; i < part.size(); ++i)
      out += (i ? "," : "") + std::to_string(part[i]);
    out += "}";
  }
  return out + ")";
}

std::string canonical(const Laurent &c) {
  std::string out = "{";
  bool first = true;
  for (const auto &[e, v] : c.terms()) {
    out += (first ? "" : ",") + std::to_string(e) + ":" + to_string(v);
    first = false;
  }
  return out + "}";
}

std::string canonical(const ScfElement &x) {
  std::string out;
  for (const auto &[pi, c] : x.terms())
    out += canonical(pi) + "=" + canonical(c) + ";";
  return out;
}

std::string canonical(const ScfTensor &x) {
  std::string out;
  for (const auto &[k, c] : x.terms())
    out += canonical(k.first) + "|" + canonical(k.second) + "=" + canonical(c) + ";";
  return out;
}

std::string canonical(const ClassFunction &psi) {
  std::string out = psi.group().name() + ":";
  for (const auto &v : psi.class_values())
    out += to_string(v) + ",";
  return out;
}

std::string canonical(const ProductFunction &t) {
  std::string out = t.left().name() + "x" + t.right().name() + ":";
  for (const auto &term : t.class_terms())
    out += std::to_string(term.left_class) + "," + std::to_string(term.right_class) + "=" +
           to_string(term.coeff) + ";";
  return out;
}

std::string canonical(bool b) { return b ? "true" : "false"; }

} // namespace uthopf
