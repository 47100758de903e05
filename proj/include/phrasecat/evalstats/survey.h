// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_EVALSTATS_SURVEY_H_
#define PHRASECAT_EVALSTATS_SURVEY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phrasecat::evalstats {

using LanguageCode = std::string;

// Old items were written by hand, new items were composed from the catalogue.
enum class Origin { kOld, kNew };

enum class Question { kCorrect, kComprehensible, kReadable, kClear };
inline constexpr std::array<Question, 4> kQuestions = {
    Question::kCorrect, Question::kComprehensible, Question::kReadable,
    Question::kClear};

enum class Experience { kNone, kLow, kMedium, kHigh, kExpert };

std::string_view to_string(Origin origin);
std::string_view to_string(Question question);
std::string_view to_string(Experience experience);

// Ratings run from 5 (best category) down to 1 (worst).
inline constexpr int kMinRating = 1;
inline constexpr int kMaxRating = 5;
inline constexpr int kDatasetCount = 6;

struct ItemRating {
  std::string description_id;
  Origin actual = Origin::kOld;
  Origin guessed = Origin::kOld;
  std::array<int, 4> ratings{};  // indexed by Question

  int rating(Question q) const { return ratings[static_cast<std::size_t>(q)]; }
  bool guessed_right() const { return actual == guessed; }
  bool operator==(const ItemRating&) const = default;
};

struct SurveyResponse {
  std::string participant_id;
  LanguageCode language;
  int dataset_id = 1;
  int age = 0;
  std::string gender;
  bool native_speaker = false;
  Experience experience = Experience::kNone;
  std::vector<ItemRating> items;
  bool operator==(const SurveyResponse&) const = default;
};

struct RowError {
  std::size_t line = 0;  // 1-based record number; the header is line 1
  std::string code;      // FORMAT, RANGE, LANGUAGE or CONFLICT
  std::string message;
};

struct SurveyData {
  std::vector<SurveyResponse> responses;  // in order of first appearance
  std::vector<RowError> errors;
};

inline const std::set<LanguageCode> kSurveyLanguages = {"de", "en", "fr", "it"};

// Parses the survey CSV. A malformed header throws; bad rows are reported
// and skipped.
SurveyData ingest_survey_csv(std::string_view bytes,
                             const std::set<LanguageCode>& languages =
                                 kSurveyLanguages);

// One rated item together with who rated it.
struct RatedItem {
  LanguageCode language;
  std::string participant_id;
  ItemRating item;
  bool operator==(const RatedItem&) const = default;
};

std::vector<RatedItem> flatten(std::span<const SurveyResponse> responses);

double detection_rate(std::span<const ItemRating> items);
double detection_rate(std::span<const RatedItem> items);

struct ItemFilter {
  std::optional<Origin> origin;
  std::optional<LanguageCode> language;

  bool accepts(const RatedItem& r) const {
    return (!origin || r.item.actual == *origin) &&
           (!language || r.language == *language);
  }
};

// Ratings of the matching items; all four questions pooled when `question`
// is empty.
std::vector<double> ratings_of(std::span<const RatedItem> items,
                               std::optional<Question> question,
                               const ItemFilter& filter = {});

double mean_rating(std::span<const RatedItem> items,
                   std::optional<Question> question,
                   const ItemFilter& filter = {});

struct BalanceOptions {
  std::size_t per_origin = 180;
  LanguageCode keep_all = "en";
};

// All items of `keep_all`, plus for every other language a seeded uniform
// sample of exactly `per_origin` old and `per_origin` new items. Output keeps
// input order.
std::vector<RatedItem> balanced_dataset(std::span<const SurveyResponse> responses,
                                        std::uint64_t seed,
                                        const BalanceOptions& options = {});

}  // namespace phrasecat::evalstats

#endif  // PHRASECAT_EVALSTATS_SURVEY_H_
