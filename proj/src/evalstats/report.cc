// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/evalstats/report.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "phrasecat/error.h"

namespace phrasecat::evalstats {

using nlohmann::json;

namespace {

std::string printf_string(const char* format, double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, x);
  return buffer;
}

std::optional<QualityCell> quality_cell(std::span<const RatedItem> items,
                                        std::optional<Question> question) {
  std::vector<double> fresh = ratings_of(items, question, {Origin::kNew, {}});
  std::vector<double> old = ratings_of(items, question, {Origin::kOld, {}});
  if (fresh.empty() || old.empty()) return std::nullopt;
  QualityCell cell;
  cell.question = question;
  cell.n_new = fresh.size();
  cell.n_old = old.size();
  cell.mean_new = mean_rating(items, question, {Origin::kNew, {}});
  cell.mean_old = mean_rating(items, question, {Origin::kOld, {}});
  cell.difference = cell.mean_new - cell.mean_old;
  cell.mann_whitney = mann_whitney_u(fresh, old);
  return cell;
}

QualityRow quality_row(const LanguageCode& language,
                       std::span<const RatedItem> items) {
  QualityRow row{language, items.size(), {}};
  for (Question q : kQuestions) row.cells.push_back(quality_cell(items, q));
  row.cells.push_back(quality_cell(items, std::nullopt));
  return row;
}

DetectionRow detection_row(const LanguageCode& language,
                           std::span<const RatedItem> items, bool yates) {
  DetectionRow row;
  row.language = language;
  row.n = items.size();
  Table2x2 table{};
  for (const RatedItem& r : items) {
    ++table[r.item.actual == Origin::kNew][r.item.guessed == Origin::kNew];
  }
  row.correct = table[0][0] + table[1][1];
  row.rate = detection_rate(items);
  row.goodness_of_fit = chi2_gof(row.correct, row.n, 0.5);
  bool marginals = table[0][0] + table[0][1] > 0 && table[1][0] + table[1][1] > 0 &&
                   table[0][0] + table[1][0] > 0 && table[0][1] + table[1][1] > 0;
  if (marginals) row.independence = chi2_2x2(table, yates);
  return row;
}

std::string question_label(const std::optional<Question>& q) {
  return q ? std::string(to_string(*q)) : "all";
}

json cell_to_json(const std::optional<QualityCell>& cell,
                  const std::optional<Question>& question) {
  json out = {{"question", question_label(question)}};
  if (!cell) {
    out["available"] = false;
    return out;
  }
  out["available"] = true;
  out["nNew"] = cell->n_new;
  out["nOld"] = cell->n_old;
  out["meanNew"] = cell->mean_new;
  out["meanOld"] = cell->mean_old;
  out["difference"] = cell->difference;
  out["mannWhitney"] = test_result_to_json(cell->mann_whitney);
  return out;
}

json quality_row_to_json(const QualityRow& row) {
  json cells = json::array();
  for (std::size_t i = 0; i < row.cells.size(); ++i) {
    std::optional<Question> q;
    if (i < kQuestions.size()) q = kQuestions[i];
    cells.push_back(cell_to_json(row.cells[i], q));
  }
  return {{"language", row.language}, {"items", row.items}, {"cells", cells}};
}

void append_quality_lines(const QualityRow& row, std::string* out) {
  for (std::size_t i = 0; i < row.cells.size(); ++i) {
    std::optional<Question> q;
    if (i < kQuestions.size()) q = kQuestions[i];
    char line[160];
    const auto& cell = row.cells[i];
    if (!cell) {
      std::snprintf(line, sizeof line, "%-8s %-15s %8s %8s %8s  %s\n",
                    row.language.c_str(), question_label(q).c_str(), "-", "-",
                    "-", "n/a");
    } else {
      std::snprintf(line, sizeof line, "%-8s %-15s %8s %8s %8s  %s\n",
                    row.language.c_str(), question_label(q).c_str(),
                    format_fixed2(cell->mean_new).c_str(),
                    format_fixed2(cell->mean_old).c_str(),
                    format_fixed2(cell->difference).c_str(),
                    (format_p(cell->mann_whitney.p) + " (" +
                     std::string(to_string(cell->mann_whitney.path)) + ")")
                        .c_str());
    }
    *out += line;
  }
}

}  // namespace

std::string format_p(double p) {
  if (p < 0.001) return "<0.001";
  int decimals = std::max(2, 1 - static_cast<int>(std::floor(std::log10(p))));
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, p);
  return buffer;
}

std::string format_fixed2(double x) {
  std::string s = printf_string("%.2f", x);
  return s == "-0.00" ? "0.00" : s;
}

SurveyReport summarize(std::span<const SurveyResponse> responses,
                       const SummaryOptions& options) {
  std::vector<RatedItem> items = flatten(responses);
  if (items.empty()) throw Error(ErrorCode::kEmptyInput, "no rated items");
  SurveyReport report;
  report.seed = options.seed;

  std::map<LanguageCode, ParticipantRow> people;
  std::map<LanguageCode, double> age_sum;
  for (const SurveyResponse& r : responses) {
    ParticipantRow& row = people[r.language];
    row.language = r.language;
    ++row.participants;
    row.native_speakers += r.native_speaker;
    ++row.per_dataset[static_cast<std::size_t>(r.dataset_id - 1)];
    age_sum[r.language] += r.age;
  }
  for (auto& [lang, row] : people) {
    row.mean_age = age_sum[lang] / row.participants;
    report.participants.push_back(row);
  }

  std::map<LanguageCode, std::vector<RatedItem>> by_language;
  for (const RatedItem& r : items) by_language[r.language].push_back(r);
  for (const auto& [lang, subset] : by_language) {
    if (subset.empty()) continue;
    report.detection.push_back(detection_row(lang, subset, options.yates));
    report.quality.push_back(quality_row(lang, subset));
  }

  try {
    std::vector<RatedItem> balanced =
        balanced_dataset(responses, options.seed, options.balance);
    report.all_languages = quality_row("all", balanced);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientData) throw;
    report.all_languages_note = e.what();
  }
  return report;
}

json test_result_to_json(const TestResult& result) {
  json n = json::array();
  for (std::size_t size : result.n) n.push_back(size);
  json out = {{"method", to_string(result.method)},
              {"statistic", result.statistic},
              {"p", result.p},
              {"pFormatted", format_p(result.p)},
              {"n", n},
              {"path", to_string(result.path)}};
  if (result.df > 0) out["df"] = result.df;
  return out;
}

json report_to_json(const SurveyReport& report) {
  json participants = json::array();
  for (const auto& row : report.participants) {
    participants.push_back({{"language", row.language},
                            {"participants", row.participants},
                            {"nativeSpeakers", row.native_speakers},
                            {"perDataset", row.per_dataset},
                            {"meanAge", row.mean_age}});
  }
  json detection = json::array();
  for (const auto& row : report.detection) {
    json entry = {{"language", row.language},
                  {"n", row.n},
                  {"correct", row.correct},
                  {"rate", row.rate},
                  {"rateFormatted", format_fixed2(row.rate)},
                  {"goodnessOfFit", test_result_to_json(row.goodness_of_fit)}};
    entry["independence"] = row.independence
                                ? test_result_to_json(*row.independence)
                                : json(nullptr);
    detection.push_back(std::move(entry));
  }
  json quality = json::array();
  for (const auto& row : report.quality) quality.push_back(quality_row_to_json(row));
  json out = {{"seed", report.seed},
              {"participants", participants},
              {"detection", detection},
              {"quality", quality}};
  if (report.all_languages) {
    out["allLanguages"] = quality_row_to_json(*report.all_languages);
  } else {
    out["allLanguages"] = nullptr;
    out["allLanguagesNote"] = report.all_languages_note;
  }
  return out;
}

std::string format_text(const SurveyReport& report) {
  std::string out;
  char line[200];
  out += "Participants\n";
  std::snprintf(line, sizeof line, "%-8s %6s %6s %8s  %s\n", "lang", "people",
                "native", "mean age", "per dataset 1..6");
  out += line;
  for (const auto& row : report.participants) {
    std::string sets;
    for (std::size_t count : row.per_dataset) {
      sets += (sets.empty() ? "" : " ") + std::to_string(count);
    }
    std::snprintf(line, sizeof line, "%-8s %6zu %6zu %8.1f  %s\n",
                  row.language.c_str(), row.participants, row.native_speakers,
                  row.mean_age, sets.c_str());
    out += line;
  }

  out += "\nDetection\n";
  std::snprintf(line, sizeof line, "%-8s %6s %6s %10s %10s\n", "lang", "n",
                "rate", "p (gof)", "p (2x2)");
  out += line;
  for (const auto& row : report.detection) {
    std::snprintf(line, sizeof line, "%-8s %6zu %6s %10s %10s\n",
                  row.language.c_str(), row.n, format_fixed2(row.rate).c_str(),
                  format_p(row.goodness_of_fit.p).c_str(),
                  row.independence ? format_p(row.independence->p).c_str() : "n/a");
    out += line;
  }

  out += "\nQuality (ratings 5 best .. 1 worst)\n";
  std::snprintf(line, sizeof line, "%-8s %-15s %8s %8s %8s  %s\n", "lang",
                "question", "new", "old", "new-old", "p (mann-whitney)");
  out += line;
  for (const auto& row : report.quality) append_quality_lines(row, &out);
  if (report.all_languages) {
    append_quality_lines(*report.all_languages, &out);
    out += "(all: balanced dataset, seed " + std::to_string(report.seed) + ")\n";
  } else {
    out += "(all: not computed: " + report.all_languages_note + ")\n";
  }
  return out;
}

}  // namespace phrasecat::evalstats
