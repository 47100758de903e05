// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/evalstats/tests.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "phrasecat/error.h"
#include "phrasecat/evalstats/distributions.h"

namespace phrasecat::evalstats {

std::string_view to_string(TestMethod method) {
  switch (method) {
    case TestMethod::kChi2Gof: return "chi2_gof";
    case TestMethod::kChi2Independence: return "chi2_2x2";
    case TestMethod::kMannWhitneyU: return "mann_whitney_u";
    case TestMethod::kWelchT: return "welch_t";
  }
  return "?";
}

std::string_view to_string(PValuePath path) {
  switch (path) {
    case PValuePath::kAsymptotic: return "asymptotic";
    case PValuePath::kExact: return "exact";
    case PValuePath::kNormalApprox: return "normal_approx";
    case PValuePath::kDegenerate: return "degenerate";
  }
  return "?";
}

TestResult chi2_gof(std::uint64_t correct, std::uint64_t n, double p0) {
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "no observations");
  if (correct > n) {
    throw Error(ErrorCode::kInvalidArgument, "more successes than observations");
  }
  if (!(p0 > 0 && p0 < 1)) {
    throw Error(ErrorCode::kInvalidArgument, "p0 must lie strictly in (0, 1)");
  }
  double expected_hit = n * p0;
  double expected_miss = n * (1 - p0);
  double hit = static_cast<double>(correct);
  double miss = static_cast<double>(n - correct);
  double stat = (hit - expected_hit) * (hit - expected_hit) / expected_hit +
                (miss - expected_miss) * (miss - expected_miss) / expected_miss;
  return {TestMethod::kChi2Gof, stat, chi2_sf(stat, 1),
          {static_cast<std::size_t>(n)}, 1, PValuePath::kAsymptotic};
}

TestResult chi2_2x2(const Table2x2& table, bool continuity_correction) {
  double rows[2] = {0, 0};
  double cols[2] = {0, 0};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      rows[r] += table[r][c];
      cols[c] += table[r][c];
    }
  }
  double total = rows[0] + rows[1];
  if (total == 0) throw Error(ErrorCode::kEmptyInput, "empty table");
  if (rows[0] == 0 || rows[1] == 0 || cols[0] == 0 || cols[1] == 0) {
    throw Error(ErrorCode::kInvalidArgument, "table has a zero marginal");
  }
  double stat = 0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      double expected = rows[r] * cols[c] / total;
      double deviation = std::fabs(table[r][c] - expected);
      if (continuity_correction) deviation = std::max(0.0, deviation - 0.5);
      stat += deviation * deviation / expected;
    }
  }
  return {TestMethod::kChi2Independence, stat, chi2_sf(stat, 1),
          {static_cast<std::size_t>(total)}, 1, PValuePath::kAsymptotic};
}

namespace {

struct RankSummary {
  double rank_sum_a = 0;
  // Sizes of tie groups in ascending value order, with how many members of
  // each group come from sample a.
  std::vector<std::size_t> group_size;
  std::vector<std::size_t> group_from_a;
};

RankSummary rank(std::span<const double> a, std::span<const double> b) {
  std::vector<std::pair<double, bool>> pooled;
  pooled.reserve(a.size() + b.size());
  for (double x : a) pooled.push_back({x, true});
  for (double x : b) pooled.push_back({x, false});
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  RankSummary out;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    std::size_t from_a = 0;
    while (j < pooled.size() && pooled[j].first == pooled[i].first) {
      from_a += pooled[j].second;
      ++j;
    }
    double midrank = (i + 1 + j) / 2.0;
    out.rank_sum_a += midrank * from_a;
    out.group_size.push_back(j - i);
    out.group_from_a.push_back(from_a);
    i = j;
  }
  return out;
}

// Two-sided exact p. Counts arrangements of the tie groups over the two
// samples by (items in a, 2U) and sums those at least as far from the
// centre as the observation. Doubling U keeps midrank scores integral.
double exact_mwu_p(const RankSummary& ranks, std::size_t n, std::size_t m,
                   long long observed_twice_u) {
  const long long nm = static_cast<long long>(n * m);
  const std::size_t width = 2 * n * m + 1;
  std::vector<double> ways((n + 1) * width, 0.0);
  std::vector<double> next(ways.size());
  ways[0] = 1.0;
  std::size_t seen = 0;
  for (std::size_t t : ranks.group_size) {
    std::fill(next.begin(), next.end(), 0.0);
    // C(t, c), built incrementally.
    std::vector<double> choose(t + 1, 1.0);
    for (std::size_t c = 1; c <= t; ++c) {
      choose[c] = choose[c - 1] * static_cast<double>(t - c + 1) / c;
    }
    for (std::size_t k = 0; k <= std::min(n, seen); ++k) {
      if (seen - k > m) continue;
      const double* row = &ways[k * width];
      for (std::size_t c = 0; c <= t && k + c <= n; ++c) {
        if ((t - c) + (seen - k) > m) continue;
        // Each of the c new a-items outranks the (seen - k) earlier b-items
        // and ties with the (t - c) b-items of its own group.
        std::size_t shift = 2 * c * (seen - k) + c * (t - c);
        double* out = &next[(k + c) * width];
        for (std::size_t u = 0; u + shift < width; ++u) {
          if (row[u] != 0) out[u + shift] += row[u] * choose[c];
        }
      }
    }
    ways.swap(next);
    seen += t;
  }
  const double* final_row = &ways[n * width];
  const long long observed_gap = std::llabs(observed_twice_u - nm);
  double total = 0;
  double tail = 0;
  for (std::size_t u = 0; u < width; ++u) {
    total += final_row[u];
    if (std::llabs(static_cast<long long>(u) - nm) >= observed_gap) {
      tail += final_row[u];
    }
  }
  return std::min(1.0, tail / total);
}

double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
}

double sample_variance(std::span<const double> xs, double mean) {
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return ss / (xs.size() - 1);
}

}  // namespace

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                          MwuMode mode) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptyInput, "both samples must be non-empty");
  }
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  RankSummary ranks = rank(a, b);
  const double u = ranks.rank_sum_a - n * (n + 1) / 2.0;
  TestResult result{TestMethod::kMannWhitneyU, u, 1.0, {n, m}, 0,
                    PValuePath::kExact};

  bool exact = mode == MwuMode::kExact ||
               (mode == MwuMode::kAuto && n * m <= kMwuExactLimit);
  if (exact) {
    // Table is (n + 1) x (2nm + 1) doubles.
    constexpr double kMaxCells = 2e7;
    if (static_cast<double>(n + 1) * (2.0 * n * m + 1) > kMaxCells) {
      throw Error(ErrorCode::kInvalidArgument,
                  "samples too large for the exact distribution");
    }
    result.p = exact_mwu_p(ranks, n, m, std::llround(2 * u));
    return result;
  }

  const double total = static_cast<double>(n + m);
  double tie_term = 0;
  for (std::size_t t : ranks.group_size) {
    double td = static_cast<double>(t);
    tie_term += td * td * td - td;
  }
  double variance =
      n * m / 12.0 * ((total + 1) - tie_term / (total * (total - 1)));
  result.path = PValuePath::kNormalApprox;
  if (!(variance > 0)) {
    result.path = PValuePath::kDegenerate;
    result.p = 1.0;
    return result;
  }
  double z = std::max(0.0, std::fabs(u - n * m / 2.0) - 0.5) / std::sqrt(variance);
  result.p = std::min(1.0, 2 * normal_sf(z));
  return result;
}

TestResult t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "each sample needs at least two observations");
  }
  const double mean_a = mean_of(a);
  const double mean_b = mean_of(b);
  const double va = sample_variance(a, mean_a) / a.size();
  const double vb = sample_variance(b, mean_b) / b.size();
  TestResult result{TestMethod::kWelchT, 0, 1.0, {a.size(), b.size()}, 0,
                    PValuePath::kAsymptotic};
  if (va + vb == 0) {
    // Both samples constant: no spread to test against.
    result.path = PValuePath::kDegenerate;
    if (mean_a != mean_b) {
      result.statistic = mean_a > mean_b ? INFINITY : -INFINITY;
      result.p = 0.0;
    }
    return result;
  }
  result.statistic = (mean_a - mean_b) / std::sqrt(va + vb);
  result.df = (va + vb) * (va + vb) /
              (va * va / (a.size() - 1) + vb * vb / (b.size() - 1));
  result.p = student_t_two_sided(result.statistic, result.df);
  return result;
}

}  // namespace phrasecat::evalstats
