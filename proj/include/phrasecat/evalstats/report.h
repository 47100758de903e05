// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_EVALSTATS_REPORT_H_
#define PHRASECAT_EVALSTATS_REPORT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "phrasecat/evalstats/survey.h"
#include "phrasecat/evalstats/tests.h"

namespace phrasecat::evalstats {

struct ParticipantRow {
  LanguageCode language;
  std::size_t participants = 0;
  std::size_t native_speakers = 0;
  std::array<std::size_t, kDatasetCount> per_dataset{};
  double mean_age = 0;
};

struct DetectionRow {
  LanguageCode language;
  std::size_t n = 0;
  std::size_t correct = 0;
  double rate = 0;
  TestResult goodness_of_fit;                 // against chance (0.5)
  std::optional<TestResult> independence;     // actual x guessed; absent when
                                              // a marginal is zero
};

struct QualityCell {
  std::optional<Question> question;  // empty for all questions pooled
  std::size_t n_new = 0;
  std::size_t n_old = 0;
  double mean_new = 0;
  double mean_old = 0;
  double difference = 0;  // new - old
  TestResult mann_whitney;
};

struct QualityRow {
  LanguageCode language;  // "all" for the balanced cross-language row
  std::size_t items = 0;
  // One cell per question followed by the pooled cell; empty when either
  // origin has no items.
  std::vector<std::optional<QualityCell>> cells;
};

struct SurveyReport {
  std::uint64_t seed = 0;
  std::vector<ParticipantRow> participants;
  std::vector<DetectionRow> detection;
  std::vector<QualityRow> quality;
  std::optional<QualityRow> all_languages;
  std::string all_languages_note;  // why all_languages is absent
};

struct SummaryOptions {
  std::uint64_t seed = 0;
  BalanceOptions balance;
  bool yates = false;  // continuity correction on the 2x2 test
};

// Languages appear in code order. Per-language rows use every item; the
// all-languages row uses the balanced dataset.
SurveyReport summarize(std::span<const SurveyResponse> responses,
                       const SummaryOptions& options = {});

// "<0.001" below 0.001, otherwise two significant digits (at least two
// decimals).
std::string format_p(double p);
std::string format_fixed2(double x);

std::string format_text(const SurveyReport& report);
nlohmann::json report_to_json(const SurveyReport& report);
nlohmann::json test_result_to_json(const TestResult& result);

}  // namespace phrasecat::evalstats

#endif  // PHRASECAT_EVALSTATS_REPORT_H_
