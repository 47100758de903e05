// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_BULLETIN_H_
#define PHRASECAT_BULLETIN_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "phrasecat/catalogue.h"
#include "phrasecat/selection.h"

namespace phrasecat {

enum class Edition { kMorning, kEvening };

struct PhraseEntry {
  Selection selection;
  bool operator==(const PhraseEntry&) const = default;
};

// Free text supplied in every catalogue language, published verbatim.
struct JokerEntry {
  std::map<LanguageCode, std::string> texts;
  bool operator==(const JokerEntry&) const = default;
};

using Entry = std::variant<PhraseEntry, JokerEntry>;

struct DangerDescription {
  std::string id;
  std::string label;
  std::vector<Entry> entries;
  bool operator==(const DangerDescription&) const = default;
};

struct Bulletin {
  std::string id;
  std::string issued_at;  // ISO-8601
  Edition edition = Edition::kEvening;
  std::int64_t catalogue_version = 0;
  std::vector<DangerDescription> descriptions;
  bool operator==(const Bulletin&) const = default;
};

// Seconds since the epoch for "YYYY-MM-DDTHH:MM:SS[.fff](Z|+HH:MM|-HH:MM)".
std::optional<std::int64_t> parse_iso8601(std::string_view text);

Bulletin bulletin_from_json(const nlohmann::json& doc);
nlohmann::json bulletin_to_json(const Bulletin& bulletin);
DangerDescription description_from_json(const nlohmann::json& doc);
nlohmann::json description_to_json(const DangerDescription& description);

struct BulletinIssue {
  std::string path;  // e.g. "/descriptions/0/entries/2"
  std::string message;
};

// Problems that prevent rendering the bulletin in every catalogue language.
std::vector<BulletinIssue> validate_bulletin(const Catalogue& catalogue,
                                             const Bulletin& bulletin);

// Sentences of a description in order: rendered selections and verbatim
// joker texts.
std::vector<std::string> render_sentences(const Catalogue& catalogue,
                                          const DangerDescription& description,
                                          const LanguageCode& lang);

// The sentences joined by single spaces into one paragraph.
std::string render_description(const Catalogue& catalogue,
                               const DangerDescription& description,
                               const LanguageCode& lang);

// One document per catalogue language, descriptions separated by blank
// lines. Any failure aborts the whole render.
std::map<LanguageCode, std::string> render_bulletin(const Catalogue& catalogue,
                                                    const Bulletin& bulletin);

// True iff the source-language rendering has more than 100 characters.
bool eligible_for_survey(const Catalogue& catalogue,
                         const DangerDescription& description);

inline constexpr std::size_t kSurveyMinCharacters = 100;

struct BulletinSummary {
  std::string id;
  std::string issued_at;
  Edition edition;
  std::int64_t catalogue_version;
};

// One JSON document per bulletin in a directory, written by atomic rename.
// Single writer, many readers.
class BulletinStore {
 public:
  explicit BulletinStore(std::filesystem::path directory);

  // Validates against the catalogue (Error(kValidation)) and writes the
  // document (Error(kIoError) on failure). Assigns an id when empty.
  std::string store(const Catalogue& catalogue, Bulletin bulletin);

  // Error(kNotFound) for an unknown id.
  Bulletin load(std::string_view id) const;

  // Sorted by issuedAt ascending, then id.
  std::vector<BulletinSummary> list() const;

  const std::filesystem::path& directory() const { return directory_; }

 private:
  std::filesystem::path path_for(std::string_view id) const;

  std::filesystem::path directory_;
};

std::string_view to_string(Edition edition);

}  // namespace phrasecat

#endif  // PHRASECAT_BULLETIN_H_
