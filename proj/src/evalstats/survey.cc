// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/evalstats/survey.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "phrasecat/error.h"
#include "phrasecat/text.h"

namespace phrasecat::evalstats {

std::string_view to_string(Origin origin) {
  return origin == Origin::kOld ? "old" : "new";
}

std::string_view to_string(Question question) {
  switch (question) {
    case Question::kCorrect: return "correct";
    case Question::kComprehensible: return "comprehensible";
    case Question::kReadable: return "readable";
    case Question::kClear: return "clear";
  }
  return "?";
}

std::string_view to_string(Experience experience) {
  switch (experience) {
    case Experience::kNone: return "none";
    case Experience::kLow: return "low";
    case Experience::kMedium: return "medium";
    case Experience::kHigh: return "high";
    case Experience::kExpert: return "expert";
  }
  return "?";
}

namespace {

constexpr std::array<std::string_view, 14> kColumns = {
    "participant_id", "language",      "dataset_id",       "age",
    "gender",         "native",        "experience",       "description_id",
    "actual_origin",  "guessed_origin", "q_correct",       "q_comprehensible",
    "q_readable",     "q_clear"};

enum Column {
  kParticipant, kLanguage, kDataset, kAge, kGender, kNative, kExperience,
  kDescription, kActual, kGuessed, kFirstRating
};

struct Record {
  std::size_t line;
  std::vector<std::string> fields;
};

// RFC 4180 records. Quoted fields may hold commas, doubled quotes and line
// breaks; blank lines are skipped.
std::vector<Record> parse_csv(std::string_view in) {
  std::vector<Record> records;
  std::size_t line = 1;
  std::size_t pos = 0;
  if (in.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos < in.size()) {
    Record record{line, {}};
    std::string field;
    bool quoted_field = false;
    bool done = false;
    while (!done) {
      if (pos >= in.size()) {
        record.fields.push_back(std::move(field));
        break;
      }
      char c = in[pos];
      if (c == '"' && field.empty() && !quoted_field) {
        quoted_field = true;
        ++pos;
        while (true) {
          if (pos >= in.size()) {
            throw Error(ErrorCode::kMalformed,
                        "unterminated quote starting on line " +
                            std::to_string(record.line));
          }
          if (in[pos] == '"') {
            if (pos + 1 < in.size() && in[pos + 1] == '"') {
              field += '"';
              pos += 2;
              continue;
            }
            ++pos;
            break;
          }
          if (in[pos] == '\n') ++line;
          field += in[pos++];
        }
        continue;
      }
      if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
        ++pos;
      } else if (c == '\n' || c == '\r') {
        record.fields.push_back(std::move(field));
        if (c == '\r' && pos + 1 < in.size() && in[pos + 1] == '\n') ++pos;
        ++pos;
        ++line;
        done = true;
      } else {
        field += c;
        ++pos;
      }
    }
    bool blank = record.fields.size() == 1 && record.fields[0].empty() &&
                 !quoted_field;
    if (!blank) records.push_back(std::move(record));
  }
  return records;
}

struct RowFailure {
  std::string code;
  std::string message;
};

bool parse_int(std::string_view s, int* out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

std::optional<RowFailure> parse_origin(const std::string& s, Origin* out) {
  if (s == "old") *out = Origin::kOld;
  else if (s == "new") *out = Origin::kNew;
  else return RowFailure{"FORMAT", "origin must be 'old' or 'new', got '" + s + "'"};
  return std::nullopt;
}

std::optional<RowFailure> parse_row(const std::vector<std::string>& f,
                                    const std::set<LanguageCode>& languages,
                                    SurveyResponse* who, ItemRating* item) {
  if (f.size() != kColumns.size()) {
    return RowFailure{"FORMAT", "expected " + std::to_string(kColumns.size()) +
                                    " fields, got " + std::to_string(f.size())};
  }
  who->participant_id = f[kParticipant];
  if (who->participant_id.empty()) return RowFailure{"FORMAT", "empty participant_id"};
  who->language = f[kLanguage];
  if (!languages.count(who->language)) {
    return RowFailure{"LANGUAGE", "unknown language '" + who->language + "'"};
  }
  if (!parse_int(f[kDataset], &who->dataset_id)) {
    return RowFailure{"FORMAT", "dataset_id is not an integer"};
  }
  if (who->dataset_id < 1 || who->dataset_id > kDatasetCount) {
    return RowFailure{"RANGE", "dataset_id must be 1.." + std::to_string(kDatasetCount)};
  }
  if (!parse_int(f[kAge], &who->age)) return RowFailure{"FORMAT", "age is not an integer"};
  if (who->age < 0 || who->age > 150) return RowFailure{"RANGE", "age out of range"};
  who->gender = f[kGender];
  const std::string& native = f[kNative];
  if (native == "yes" || native == "true" || native == "1") {
    who->native_speaker = true;
  } else if (native == "no" || native == "false" || native == "0") {
    who->native_speaker = false;
  } else {
    return RowFailure{"FORMAT", "native must be yes/no, got '" + native + "'"};
  }
  bool known_experience = false;
  for (Experience e : {Experience::kNone, Experience::kLow, Experience::kMedium,
                       Experience::kHigh, Experience::kExpert}) {
    if (f[kExperience] == to_string(e)) {
      who->experience = e;
      known_experience = true;
    }
  }
  if (!known_experience) {
    return RowFailure{"FORMAT", "unknown experience '" + f[kExperience] + "'"};
  }
  item->description_id = f[kDescription];
  if (item->description_id.empty()) return RowFailure{"FORMAT", "empty description_id"};
  if (auto err = parse_origin(f[kActual], &item->actual)) return err;
  if (auto err = parse_origin(f[kGuessed], &item->guessed)) return err;
  for (std::size_t q = 0; q < kQuestions.size(); ++q) {
    const std::string& cell = f[kFirstRating + q];
    int value;
    if (!parse_int(cell, &value)) {
      return RowFailure{"FORMAT", std::string(kColumns[kFirstRating + q]) +
                                      " is not an integer"};
    }
    if (value < kMinRating || value > kMaxRating) {
      return RowFailure{"RANGE", std::string(kColumns[kFirstRating + q]) + " = " +
                                     cell + " is outside 1..5"};
    }
    item->ratings[q] = value;
  }
  return std::nullopt;
}

bool same_participant(const SurveyResponse& a, const SurveyResponse& b) {
  return a.language == b.language && a.dataset_id == b.dataset_id &&
         a.age == b.age && a.gender == b.gender &&
         a.native_speaker == b.native_speaker && a.experience == b.experience;
}

// Uniform integer in [0, bound) by rejection, so the stream of draws is
// fixed by the engine alone.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

SurveyData ingest_survey_csv(std::string_view bytes,
                             const std::set<LanguageCode>& languages) {
  if (!text::is_valid_utf8(bytes)) {
    throw Error(ErrorCode::kMalformed, "survey file is not valid UTF-8");
  }
  std::vector<Record> records = parse_csv(bytes);
  if (records.empty()) throw Error(ErrorCode::kMalformed, "missing header");
  const auto& header = records.front().fields;
  if (header.size() != kColumns.size() ||
      !std::equal(header.begin(), header.end(), kColumns.begin())) {
    std::string expected;
    for (auto c : kColumns) expected += (expected.empty() ? "" : ",") + std::string(c);
    throw Error(ErrorCode::kMalformed, "malformed header, expected " + expected);
  }

  SurveyData data;
  std::map<std::string, std::size_t> index_of;
  std::set<std::pair<std::string, std::string>> seen_items;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const Record& rec = records[r];
    SurveyResponse who;
    ItemRating item;
    if (auto failure = parse_row(rec.fields, languages, &who, &item)) {
      data.errors.push_back({rec.line, failure->code, failure->message});
      continue;
    }
    auto [it, fresh] = index_of.emplace(who.participant_id, data.responses.size());
    if (!fresh && !same_participant(data.responses[it->second], who)) {
      data.errors.push_back({rec.line, "CONFLICT",
                             "participant '" + who.participant_id +
                                 "' has inconsistent attributes"});
      continue;
    }
    if (!seen_items.insert({who.participant_id, item.description_id}).second) {
      data.errors.push_back({rec.line, "CONFLICT",
                             "participant '" + who.participant_id +
                                 "' rated '" + item.description_id + "' twice"});
      continue;
    }
    if (fresh) data.responses.push_back(std::move(who));
    data.responses[it->second].items.push_back(std::move(item));
  }
  return data;
}

std::vector<RatedItem> flatten(std::span<const SurveyResponse> responses) {
  std::vector<RatedItem> out;
  for (const auto& response : responses) {
    for (const auto& item : response.items) {
      out.push_back({response.language, response.participant_id, item});
    }
  }
  return out;
}

double detection_rate(std::span<const ItemRating> items) {
  if (items.empty()) throw Error(ErrorCode::kEmptyInput, "no items");
  auto right = std::count_if(items.begin(), items.end(),
                             [](const ItemRating& i) { return i.guessed_right(); });
  return static_cast<double>(right) / items.size();
}

double detection_rate(std::span<const RatedItem> items) {
  if (items.empty()) throw Error(ErrorCode::kEmptyInput, "no items");
  auto right = std::count_if(items.begin(), items.end(), [](const RatedItem& r) {
    return r.item.guessed_right();
  });
  return static_cast<double>(right) / items.size();
}

std::vector<double> ratings_of(std::span<const RatedItem> items,
                               std::optional<Question> question,
                               const ItemFilter& filter) {
  std::vector<double> out;
  for (const RatedItem& r : items) {
    if (!filter.accepts(r)) continue;
    if (question) {
      out.push_back(r.item.rating(*question));
    } else {
      for (Question q : kQuestions) out.push_back(r.item.rating(q));
    }
  }
  return out;
}

double mean_rating(std::span<const RatedItem> items,
                   std::optional<Question> question, const ItemFilter& filter) {
  std::vector<double> values = ratings_of(items, question, filter);
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no ratings match the filter");
  }
  return std::accumulate(values.begin(), values.end(), 0.0) / values.size();
}

std::vector<RatedItem> balanced_dataset(std::span<const SurveyResponse> responses,
                                        std::uint64_t seed,
                                        const BalanceOptions& options) {
  std::vector<RatedItem> all = flatten(responses);
  std::vector<bool> keep(all.size(), false);

  // Strata in (language, origin) order so the draw sequence does not depend
  // on the input row order of unrelated strata.
  std::map<std::pair<LanguageCode, Origin>, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].language == options.keep_all) {
      keep[i] = true;
    } else {
      strata[{all[i].language, all[i].item.actual}].push_back(i);
    }
  }
  std::set<LanguageCode> sampled_languages;
  for (const auto& [key, members] : strata) sampled_languages.insert(key.first);
  for (const LanguageCode& lang : sampled_languages) {
    for (Origin origin : {Origin::kOld, Origin::kNew}) {
      auto it = strata.find({lang, origin});
      std::size_t have = it == strata.end() ? 0 : it->second.size();
      if (have < options.per_origin) {
        throw Error(ErrorCode::kInsufficientData,
                    lang + " has " + std::to_string(have) + " " +
                        std::string(to_string(origin)) + " items, needs " +
                        std::to_string(options.per_origin));
      }
    }
  }

  std::mt19937_64 engine(seed);
  for (auto& [key, members] : strata) {
    // Partial Fisher-Yates: the first per_origin slots become the sample.
    for (std::size_t i = 0; i < options.per_origin; ++i) {
      std::size_t j = i + uniform_below(engine, members.size() - i);
      std::swap(members[i], members[j]);
      keep[members[i]] = true;
    }
  }

  std::vector<RatedItem> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) out.push_back(std::move(all[i]));
  }
  return out;
}

}  // namespace phrasecat::evalstats
