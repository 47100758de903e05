// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_CATALOGUE_H_
#define PHRASECAT_CATALOGUE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace phrasecat {

using LanguageCode = std::string;

inline constexpr std::size_t kMaxSegments = 10;
inline constexpr int kMaxNestingDepth = 2;

// Literal text, stored NFC-normalized and trimmed.
struct Literal {
  std::string text;
  bool operator==(const Literal&) const = default;
};

// Placeholder for the realization of a catalogue-level sub-segment.
struct Slot {
  std::string sub_segment_id;
  bool operator==(const Slot&) const = default;
};

using Token = std::variant<Literal, Slot>;
using TokenSequence = std::vector<Token>;

enum class LayoutPart { kWhole, kA, kB };

struct SplitContent {
  TokenSequence a;
  TokenSequence b;
  bool operator==(const SplitContent&) const = default;
};

// The text of one option in one language. An empty sequence is the blank
// option. Split content exists only where the phrase layout splits the
// owning segment for that language.
struct OptionContent {
  std::variant<TokenSequence, SplitContent> parts;

  static OptionContent whole(TokenSequence tokens) {
    return OptionContent{std::move(tokens)};
  }
  static OptionContent split(TokenSequence a, TokenSequence b) {
    return OptionContent{SplitContent{std::move(a), std::move(b)}};
  }

  bool is_split() const {
    return std::holds_alternative<SplitContent>(parts);
  }

  // Tokens for the given layout part; null when the arity does not match.
  const TokenSequence* part(LayoutPart p) const;

  // All tokens, part a before part b.
  TokenSequence flattened() const;

  bool operator==(const OptionContent&) const = default;
};

enum class Gender { kMasculine, kFeminine, kNeuter };
enum class Number { kSingular, kPlural };

struct Agreement {
  Gender gender;
  Number number;
  bool operator==(const Agreement&) const = default;
};

struct Option {
  std::string id;
  std::map<LanguageCode, OptionContent> contents;
  // Source-language noun a pronoun stands for, shown beside it in editors.
  std::optional<std::string> antecedent_hint;
  // Empty when the option carries no agreement metadata.
  std::map<LanguageCode, Agreement> agreement;

  bool operator==(const Option&) const = default;
};

struct Segment {
  std::string id;
  std::string label;
  std::vector<Option> options;
  bool uniform_agreement = false;

  const Option* find_option(std::string_view option_id) const;
  bool operator==(const Segment&) const = default;
};

struct SubSegment {
  std::string id;
  std::string label;
  std::vector<Option> options;

  const Option* find_option(std::string_view option_id) const;
  bool operator==(const SubSegment&) const = default;
};

struct LayoutEntry {
  std::size_t segment_index = 0;
  LayoutPart part = LayoutPart::kWhole;
  bool operator==(const LayoutEntry&) const = default;
};

// A language's fixed segment order, with optional a/b splits.
struct Layout {
  std::vector<LayoutEntry> entries;

  static Layout identity(std::size_t segment_count);
  bool is_split(std::size_t segment_index) const;
  bool operator==(const Layout&) const = default;
};

struct Phrase {
  std::string id;
  std::string label;
  std::vector<Segment> segments;
  std::map<LanguageCode, Layout> layouts;

  const Segment* find_segment(std::string_view segment_id) const;
  bool operator==(const Phrase&) const = default;
};

struct Catalogue {
  std::int64_t version = 1;
  LanguageCode source_language;
  std::vector<LanguageCode> languages;
  std::vector<Phrase> phrases;
  std::map<std::string, SubSegment> sub_segments;

  const Phrase* find_phrase(std::string_view phrase_id) const;
  const SubSegment* find_sub_segment(std::string_view id) const;
  bool has_language(std::string_view lang) const;
  bool operator==(const Catalogue&) const = default;
};

// Identifiers are ASCII [A-Za-z0-9_.-]+ so they can appear in paths.
bool is_valid_identifier(std::string_view id);

// One occurrence of a slot inside an option, addressed language-independently
// as "<subSegmentId>#<ordinal>" where ordinal counts earlier occurrences of the
// same sub-segment id in the same content.
struct SlotOccurrence {
  std::string sub_segment_id;
  std::size_t ordinal = 0;

  std::string key() const;
  bool operator==(const SlotOccurrence&) const = default;
};

// Slot occurrences of a token sequence in order.
std::vector<SlotOccurrence> slot_occurrences(const TokenSequence& tokens);

// Slot occurrences of an option, in source-language order.
std::vector<SlotOccurrence> slot_occurrences(const Option& option,
                                             const LanguageCode& source);

std::string_view to_string(LayoutPart part);
std::string_view to_string(Gender g);
std::string_view to_string(Number n);

}  // namespace phrasecat

#endif  // PHRASECAT_CATALOGUE_H_
