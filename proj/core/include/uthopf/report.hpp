#pragma once

// Verification reports: one entry per checked identity, with fingerprints of
// both sides so that failures can be compared across runs.

#include <cstddef>
#include <string>
#include <vector>

namespace uthopf {

struct CheckResult {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string lhs_hash;
  std::string rhs_hash;
};

class VerificationReport {
public:
  void add(CheckResult r) { results_.push_back(std::move(r)); }
  void append(const VerificationReport &other);

  /// Records lhs == rhs using canonical(lhs) and canonical(rhs) for the
  /// fingerprints.
  template <class T>
  bool record(std::string check, std::string instance, const T &lhs, const T &rhs);

  /// Records a boolean fact; both fingerprints describe the outcome.
  bool record_fact(std::string check, std::string instance, bool holds);

  const std::vector<CheckResult> &results() const { return results_; }
  std::size_t size() const { return results_.size(); }
  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }

private:
  std::vector<CheckResult> results_;
};

/// 64-bit FNV-1a of `text` as 16 lowercase hex digits.
std::string fingerprint(const std::string &text);

} // namespace uthopf

#include "uthopf/canonical.hpp"

namespace uthopf {

template <class T>
bool VerificationReport::record(std::string check, std::string instance, const T &lhs, const T &rhs) {
  const bool ok = lhs == rhs;
  add({std::move(check), std::move(instance), ok, fingerprint(canonical(lhs)), fingerprint(canonical(rhs))});
  return ok;
}

} // namespace uthopf
