#pragma once

// Independent oracles and small checks shared by the unit tests and the
// acceptance runner.  Nothing here calls the code paths it is used to test.

#include <uthopf/class_functions.hpp>
#include <uthopf/report.hpp>
#include <uthopf/scf.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace uthopf::testing {

/// Catalan numbers from the ballot recursion C_{n+1} = Σ C_i C_{n-i}.
inline std::vector<long long> catalan_oracle(int n_max) {
  std::vector<long long> c(static_cast<std::size_t>(n_max) + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < n; ++i)
      c[n] += c[i] * c[n - 1 - i];
  return c;
}

/// NUIOs counted straight from the definition: every subset of {(i,j): i<j}
/// that is transitive and closed under shrinking i and growing j.
inline std::size_t nuio_count_oracle(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      slots.emplace_back(i, j);
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    auto has = [&](int i, int j) {
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (slots[k] == std::make_pair(i, j))
          return ((mask >> k) & 1u) != 0;
      return false;
    };
    bool ok = true;
    for (const auto &[i, j] : slots) {
      if (!has(i, j))
        continue;
      if (i > 1 && !has(i - 1, j))
        ok = false;
      if (j < n && !has(i, j + 1))
        ok = false;
      for (int k = j + 1; k <= n; ++k)
        if (has(j, k) && !has(i, k))
          ok = false;
    }
    count += ok;
  }
  return count;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

/// ∏_{i<n} (qⁿ − qⁱ).
inline std::int64_t gl_order_oracle(int n, int q) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i)
    r *= ipow(q, n) - ipow(q, i);
  return r;
}

/// Unitriangular matrices over F_q supported on the strict pairs of π,
/// counted by running through every upper unitriangular matrix.
inline std::int64_t pattern_count_oracle(const Nuio &pi, int q) {
  const int n = pi.size();
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      cells.emplace_back(i, j);
  std::vector<int> digit(cells.size(), 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (digit[k] != 0 && !pi.related(cells[k].first, cells[k].second))
        ok = false;
    count += ok;
    std::size_t k = 0;
    while (k < cells.size() && ++digit[k] == q)
      digit[k++] = 0;
    if (k == cells.size())
      break;
  }
  return count;
}

/// <Ind ψ, φ>_G = <ψ, Res φ>_K over class indicators of both groups.
inline VerificationReport frobenius_check(const GroupPtr &sub, const GroupPtr &group) {
  VerificationReport report;
  for (std::size_t a = 0; a < sub->class_count(); ++a) {
    const ClassFunction psi = ClassFunction::class_indicator(sub, a);
    const ClassFunction induced = induce(psi, group);
    for (std::size_t b = 0; b < group->class_count(); ++b) {
      const ClassFunction phi = ClassFunction::class_indicator(group, b);
      const Rational lhs = inner_product(induced, phi);
      const Rational rhs = inner_product(psi, restrict_to(phi, sub));
      report.add({"frobenius", sub->name() + " " + std::to_string(a) + "/" + std::to_string(b), lhs == rhs,
                  to_string(lhs), to_string(rhs)});
    }
  }
  return report;
}

/// <Inf ψ, φ>_K = <ψ, Def φ>_L for K = L ⋉ H.
inline VerificationReport inflation_check(const GroupPtr &complement, const GroupPtr &group,
                                          const GroupPtr &kernel) {
  VerificationReport report;
  for (std::size_t a = 0; a < complement->class_count(); ++a) {
    const ClassFunction psi = ClassFunction::class_indicator(complement, a);
    const ClassFunction inflated = inflate(psi, group, *kernel);
    for (std::size_t b = 0; b < group->class_count(); ++b) {
      const ClassFunction phi = ClassFunction::class_indicator(group, b);
      const Rational lhs = inner_product(inflated, phi);
      const Rational rhs = inner_product(psi, deflate(phi, *kernel, complement));
      report.add({"inflation", group->name() + " " + std::to_string(a) + "/" + std::to_string(b), lhs == rhs,
                  to_string(lhs), to_string(rhs)});
    }
  }
  return report;
}

struct ExpectedTerm {
  LabelSet subset;
  int exponent;
  Nuio left;
  Nuio right;
};

/// Δ(δ_{1<4, 2<4}) written out by hand, one row per subset I.
inline std::vector<ExpectedTerm> hand_coproduct_table() {
  const Nuio pi = Nuio::from_strict(4, {{1, 4}, {2, 4}});
  const Nuio empty = Nuio::antichain(0), point = Nuio::antichain(1);
  const Nuio a2 = Nuio::antichain(2), c2 = Nuio::chain(2), a3 = Nuio::antichain(3);
  const Nuio vee = Nuio::from_strict(3, {{1, 3}, {2, 3}}), one = Nuio::from_strict(3, {{1, 3}});
  return {
      {{1, 2, 3, 4}, 0, pi, empty}, {{1, 2, 3}, 1, a3, point}, {{1, 2, 4}, 2, vee, point},
      {{1, 3, 4}, 1, one, point},   {{2, 3, 4}, 0, one, point}, {{1, 2}, 2, a2, a2},
      {{1, 3}, 2, a2, c2},          {{1, 4}, 2, c2, a2},        {{2, 3}, 1, a2, c2},
      {{2, 4}, 1, c2, a2},          {{3, 4}, 0, a2, a2},        {{1}, 2, point, one},
      {{2}, 1, point, one},         {{3}, 1, point, vee},       {{4}, 0, point, a3},
      {{}, 0, empty, pi},
  };
}

} // namespace uthopf::testing
