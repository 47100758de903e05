// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_EVALSTATS_TESTS_H_
#define PHRASECAT_EVALSTATS_TESTS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace phrasecat::evalstats {

enum class TestMethod { kChi2Gof, kChi2Independence, kMannWhitneyU, kWelchT };

// How the p-value was obtained.
enum class PValuePath { kAsymptotic, kExact, kNormalApprox, kDegenerate };

std::string_view to_string(TestMethod method);
std::string_view to_string(PValuePath path);

struct TestResult {
  TestMethod method;
  double statistic = 0;
  double p = 1;
  std::vector<std::size_t> n;  // sample sizes, or the total count
  double df = 0;               // 0 where not applicable
  PValuePath path = PValuePath::kAsymptotic;
};

// Pearson goodness of fit of `correct` successes out of `n` against p0,
// one degree of freedom.
TestResult chi2_gof(std::uint64_t correct, std::uint64_t n, double p0);

// 2x2 contingency table, table[row][column].
using Table2x2 = std::array<std::array<std::uint64_t, 2>, 2>;

// Pearson independence test, one degree of freedom; Yates-corrected when
// `continuity_correction` is set. All marginals must be positive.
TestResult chi2_2x2(const Table2x2& table, bool continuity_correction = false);

enum class MwuMode { kAuto, kExact, kNormalApprox };

// Samples up to this product of sizes use the exact permutation
// distribution under kAuto.
inline constexpr std::size_t kMwuExactLimit = 400;

// Mann-Whitney U for sample `a` (midranks for ties). Two-sided p from the
// exact permutation distribution, or from the normal approximation with
// tie-corrected variance and continuity correction.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                          MwuMode mode = MwuMode::kAuto);

// Welch two-sample t test with Welch-Satterthwaite df; two-sided p.
TestResult t_test(std::span<const double> a, std::span<const double> b);

}  // namespace phrasecat::evalstats

#endif  // PHRASECAT_EVALSTATS_TESTS_H_
