// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/bulletin.h"

#include <algorithm>
#include <charconv>

#include "phrasecat/codec.h"
#include "phrasecat/error.h"
#include "phrasecat/render.h"
#include "phrasecat/text.h"

namespace phrasecat {

using nlohmann::json;

std::string_view to_string(Edition edition) {
  return edition == Edition::kMorning ? "morning" : "evening";
}

namespace {

bool read_int(std::string_view text, std::size_t pos, std::size_t len,
              int* out) {
  if (pos + len > text.size()) return false;
  auto first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, *out);
  return ec == std::errc() && ptr == first + len;
}

// Days since 1970-01-01 of a proleptic Gregorian date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kMalformed, where + ": " + what, where);
}

void expect_fields(const json& j, const std::string& where,
                   std::initializer_list<std::string_view> required,
                   std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) malformed(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known =
        std::find(required.begin(), required.end(), it.key()) != required.end() ||
        std::find(optional.begin(), optional.end(), it.key()) != optional.end();
    if (!known) malformed(where, "unknown field '" + it.key() + "'");
  }
  for (std::string_view key : required) {
    if (!j.contains(key)) malformed(where, "missing field '" + std::string(key) + "'");
  }
}

std::string string_field(const json& j, const char* key,
                         const std::string& where) {
  if (!j[key].is_string()) malformed(where + "/" + key, "expected a string");
  return j[key].get<std::string>();
}

Entry entry_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("t") || !j["t"].is_string()) {
    malformed(where, "expected an entry with a type tag");
  }
  const std::string kind = j["t"].get<std::string>();
  if (kind == "phrase") {
    expect_fields(j, where, {"t", "selection"});
    try {
      return PhraseEntry{selection_from_json(j["selection"])};
    } catch (const Error& e) {
      malformed(where + "/selection", e.what());
    }
  }
  if (kind == "joker") {
    expect_fields(j, where, {"t", "texts"});
    if (!j["texts"].is_object()) malformed(where + "/texts", "expected an object");
    JokerEntry joker;
    for (auto it = j["texts"].begin(); it != j["texts"].end(); ++it) {
      if (!it.value().is_string()) {
        malformed(where + "/texts/" + it.key(), "expected a string");
      }
      joker.texts.emplace(it.key(), it.value().get<std::string>());
    }
    return joker;
  }
  malformed(where + "/t", "expected 'phrase' or 'joker'");
}

}  // namespace

std::optional<std::int64_t> parse_iso8601(std::string_view text) {
  int year, month, day, hour, minute, second;
  if (text.size() < 20 || text[4] != '-' || text[7] != '-' || text[10] != 'T' ||
      text[13] != ':' || text[16] != ':' || !read_int(text, 0, 4, &year) ||
      !read_int(text, 5, 2, &month) || !read_int(text, 8, 2, &day) ||
      !read_int(text, 11, 2, &hour) || !read_int(text, 14, 2, &minute) ||
      !read_int(text, 17, 2, &second)) {
    return std::nullopt;
  }
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12 || day < 1 ||
      day > kDays[month - 1] + (month == 2 && is_leap(year)) || hour > 23 ||
      minute > 59 || second > 59) {
    return std::nullopt;
  }
  std::size_t pos = 19;
  if (text[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) return std::nullopt;
  }
  std::int64_t offset = 0;
  std::string_view zone = text.substr(pos);
  if (zone == "Z") {
    offset = 0;
  } else if (zone.size() == 6 && (zone[0] == '+' || zone[0] == '-') &&
             zone[3] == ':') {
    int oh, om;
    if (!read_int(zone, 1, 2, &oh) || !read_int(zone, 4, 2, &om) || oh > 23 ||
        om > 59) {
      return std::nullopt;
    }
    offset = (oh * 3600 + om * 60) * (zone[0] == '+' ? 1 : -1);
  } else {
    return std::nullopt;
  }
  std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                      static_cast<unsigned>(day));
  return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

DangerDescription description_from_json(const json& j) {
  expect_fields(j, "/", {"label", "entries"}, {"id"});
  DangerDescription d;
  if (j.contains("id")) d.id = string_field(j, "id", "");
  d.label = string_field(j, "label", "");
  if (!j["entries"].is_array()) malformed("/entries", "expected an array");
  for (std::size_t i = 0; i < j["entries"].size(); ++i) {
    d.entries.push_back(
        entry_from_json(j["entries"][i], "/entries/" + std::to_string(i)));
  }
  return d;
}

json description_to_json(const DangerDescription& d) {
  json entries = json::array();
  for (const Entry& entry : d.entries) {
    if (const auto* phrase = std::get_if<PhraseEntry>(&entry)) {
      entries.push_back(
          {{"t", "phrase"}, {"selection", selection_to_json(phrase->selection)}});
    } else {
      json texts = json::object();
      for (const auto& [lang, t] : std::get<JokerEntry>(entry).texts) {
        texts[lang] = t;
      }
      entries.push_back({{"t", "joker"}, {"texts", std::move(texts)}});
    }
  }
  json out = {{"label", d.label}, {"entries", std::move(entries)}};
  if (!d.id.empty()) out["id"] = d.id;
  return out;
}

Bulletin bulletin_from_json(const json& j) {
  expect_fields(j, "/", {"issuedAt", "edition", "catalogueVersion", "descriptions"},
                {"id"});
  Bulletin b;
  if (j.contains("id")) b.id = string_field(j, "id", "");
  b.issued_at = string_field(j, "issuedAt", "");
  if (!parse_iso8601(b.issued_at)) malformed("/issuedAt", "expected ISO-8601");
  std::string edition = string_field(j, "edition", "");
  if (edition == "morning") b.edition = Edition::kMorning;
  else if (edition == "evening") b.edition = Edition::kEvening;
  else malformed("/edition", "expected 'morning' or 'evening'");
  if (!j["catalogueVersion"].is_number_integer()) {
    malformed("/catalogueVersion", "expected an integer");
  }
  b.catalogue_version = j["catalogueVersion"].get<std::int64_t>();
  if (!j["descriptions"].is_array()) {
    malformed("/descriptions", "expected an array");
  }
  for (std::size_t i = 0; i < j["descriptions"].size(); ++i) {
    std::string where = "/descriptions/" + std::to_string(i);
    try {
      b.descriptions.push_back(description_from_json(j["descriptions"][i]));
    } catch (const Error& e) {
      malformed(where, e.what());
    }
  }
  return b;
}

json bulletin_to_json(const Bulletin& b) {
  json descriptions = json::array();
  for (const auto& d : b.descriptions) {
    descriptions.push_back(description_to_json(d));
  }
  return {{"id", b.id},
          {"issuedAt", b.issued_at},
          {"edition", to_string(b.edition)},
          {"catalogueVersion", b.catalogue_version},
          {"descriptions", std::move(descriptions)}};
}

std::vector<BulletinIssue> validate_bulletin(const Catalogue& catalogue,
                                             const Bulletin& bulletin) {
  std::vector<BulletinIssue> issues;
  if (bulletin.descriptions.empty()) {
    issues.push_back({"/descriptions", "a bulletin needs at least one description"});
  }
  for (std::size_t d = 0; d < bulletin.descriptions.size(); ++d) {
    const auto& entries = bulletin.descriptions[d].entries;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      std::string path = "/descriptions/" + std::to_string(d) + "/entries/" +
                         std::to_string(e);
      if (const auto* phrase = std::get_if<PhraseEntry>(&entries[e])) {
        try {
          for (const auto& issue :
               validate_selection(catalogue, phrase->selection).issues) {
            issues.push_back({path, std::string(to_string(issue.code)) +
                                        " at " + issue.path});
          }
        } catch (const Error& err) {
          issues.push_back({path, err.what()});
        }
        continue;
      }
      const auto& joker = std::get<JokerEntry>(entries[e]);
      for (const LanguageCode& lang : catalogue.languages) {
        auto it = joker.texts.find(lang);
        if (it == joker.texts.end() || it->second.empty()) {
          issues.push_back({path, "joker entry has no '" + lang + "' text"});
        }
      }
      for (const auto& [lang, t] : joker.texts) {
        if (!catalogue.has_language(lang)) {
          issues.push_back({path, "joker text for unknown language '" + lang + "'"});
        }
      }
    }
  }
  return issues;
}

std::vector<std::string> render_sentences(const Catalogue& catalogue,
                                          const DangerDescription& description,
                                          const LanguageCode& lang) {
  std::vector<std::string> sentences;
  for (std::size_t i = 0; i < description.entries.size(); ++i) {
    std::string path = "/entries/" + std::to_string(i);
    const Entry& entry = description.entries[i];
    if (const auto* joker = std::get_if<JokerEntry>(&entry)) {
      auto it = joker->texts.find(lang);
      if (it == joker->texts.end() || it->second.empty()) {
        throw Error(ErrorCode::kMissingTranslation,
                    "joker entry " + std::to_string(i) + " has no '" + lang +
                        "' text",
                    path);
      }
      sentences.push_back(it->second);
      continue;
    }
    try {
      sentences.push_back(
          render(catalogue, std::get<PhraseEntry>(entry).selection, lang).text);
    } catch (const Error& e) {
      throw Error(e.code(), "entry " + std::to_string(i) + ": " + e.what(), path);
    }
  }
  return sentences;
}

std::string render_description(const Catalogue& catalogue,
                               const DangerDescription& description,
                               const LanguageCode& lang) {
  // Joker texts pass through verbatim, so no whitespace normalization here.
  std::string paragraph;
  for (const std::string& sentence :
       render_sentences(catalogue, description, lang)) {
    if (sentence.empty()) continue;
    if (!paragraph.empty()) paragraph += ' ';
    paragraph += sentence;
  }
  return paragraph;
}

std::map<LanguageCode, std::string> render_bulletin(const Catalogue& catalogue,
                                                    const Bulletin& bulletin) {
  std::map<LanguageCode, std::string> documents;
  for (const LanguageCode& lang : catalogue.languages) {
    std::string doc;
    for (std::size_t d = 0; d < bulletin.descriptions.size(); ++d) {
      if (d > 0) doc += "\n\n";
      try {
        doc += render_description(catalogue, bulletin.descriptions[d], lang);
      } catch (const Error& e) {
        throw Error(e.code(),
                    "description " + std::to_string(d) + ", " + e.what(),
                    "/descriptions/" + std::to_string(d) + e.path());
      }
    }
    documents.emplace(lang, std::move(doc));
  }
  return documents;
}

bool eligible_for_survey(const Catalogue& catalogue,
                         const DangerDescription& description) {
  std::string text =
      render_description(catalogue, description, catalogue.source_language);
  return text::code_point_count(text) > kSurveyMinCharacters;
}

}  // namespace phrasecat
