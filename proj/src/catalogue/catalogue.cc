// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/catalogue.h"

#include <algorithm>
#include <map>

#include "phrasecat/error.h"

namespace phrasecat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed: return "MALFORMED";
    case ErrorCode::kDuplicateId: return "DUPLICATE_ID";
    case ErrorCode::kMissingTranslation: return "MISSING_TRANSLATION";
    case ErrorCode::kBadLayoutPermutation: return "BAD_LAYOUT_PERMUTATION";
    case ErrorCode::kBadSourceLayout: return "BAD_SOURCE_LAYOUT";
    case ErrorCode::kSplitMismatch: return "SPLIT_MISMATCH";
    case ErrorCode::kSlotMismatch: return "SLOT_MISMATCH";
    case ErrorCode::kDanglingSlot: return "DANGLING_SLOT";
    case ErrorCode::kDepthExceeded: return "DEPTH_EXCEEDED";
    case ErrorCode::kSegmentLimit: return "SEGMENT_LIMIT";
    case ErrorCode::kAgreementViolation: return "AGREEMENT_VIOLATION";
    case ErrorCode::kUnusedSubsegment: return "UNUSED_SUBSEGMENT";
    case ErrorCode::kCycle: return "CYCLE";
    case ErrorCode::kUnannotated: return "UNANNOTATED";
    case ErrorCode::kUnknownPhrase: return "UNKNOWN_PHRASE";
    case ErrorCode::kUnknownLanguage: return "UNKNOWN_LANGUAGE";
    case ErrorCode::kIncompleteSelection: return "INCOMPLETE_SELECTION";
    case ErrorCode::kInvalidCursor: return "INVALID_CURSOR";
    case ErrorCode::kStaleVersion: return "STALE_VERSION";
    case ErrorCode::kNotFound: return "NOT_FOUND";
    case ErrorCode::kValidation: return "VALIDATION";
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kEmptyInput: return "EMPTY_INPUT";
    case ErrorCode::kInsufficientData: return "INSUFFICIENT_DATA";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

std::string_view to_string(LayoutPart part) {
  switch (part) {
    case LayoutPart::kWhole: return "whole";
    case LayoutPart::kA: return "a";
    case LayoutPart::kB: return "b";
  }
  return "?";
}

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::kMasculine: return "m";
    case Gender::kFeminine: return "f";
    case Gender::kNeuter: return "n";
  }
  return "?";
}

std::string_view to_string(Number n) {
  return n == Number::kSingular ? "sg" : "pl";
}

const TokenSequence* OptionContent::part(LayoutPart p) const {
  if (const auto* whole = std::get_if<TokenSequence>(&parts)) {
    return p == LayoutPart::kWhole ? whole : nullptr;
  }
  const auto& split = std::get<SplitContent>(parts);
  switch (p) {
    case LayoutPart::kA: return &split.a;
    case LayoutPart::kB: return &split.b;
    case LayoutPart::kWhole: return nullptr;
  }
  return nullptr;
}

TokenSequence OptionContent::flattened() const {
  if (const auto* whole = std::get_if<TokenSequence>(&parts)) return *whole;
  const auto& split = std::get<SplitContent>(parts);
  TokenSequence out = split.a;
  out.insert(out.end(), split.b.begin(), split.b.end());
  return out;
}

namespace {

template <typename Options>
const Option* find_in(const Options& options, std::string_view id) {
  auto it = std::find_if(options.begin(), options.end(),
                         [&](const Option& o) { return o.id == id; });
  return it == options.end() ? nullptr : &*it;
}

}  // namespace

const Option* Segment::find_option(std::string_view option_id) const {
  return find_in(options, option_id);
}

const Option* SubSegment::find_option(std::string_view option_id) const {
  return find_in(options, option_id);
}

Layout Layout::identity(std::size_t segment_count) {
  Layout layout;
  for (std::size_t i = 0; i < segment_count; ++i) {
    layout.entries.push_back({i, LayoutPart::kWhole});
  }
  return layout;
}

bool Layout::is_split(std::size_t segment_index) const {
  return std::any_of(entries.begin(), entries.end(), [&](const LayoutEntry& e) {
    return e.segment_index == segment_index && e.part != LayoutPart::kWhole;
  });
}

const Segment* Phrase::find_segment(std::string_view segment_id) const {
  auto it = std::find_if(segments.begin(), segments.end(),
                         [&](const Segment& s) { return s.id == segment_id; });
  return it == segments.end() ? nullptr : &*it;
}

const Phrase* Catalogue::find_phrase(std::string_view phrase_id) const {
  auto it = std::find_if(phrases.begin(), phrases.end(),
                         [&](const Phrase& p) { return p.id == phrase_id; });
  return it == phrases.end() ? nullptr : &*it;
}

const SubSegment* Catalogue::find_sub_segment(std::string_view id) const {
  auto it = sub_segments.find(std::string(id));
  return it == sub_segments.end() ? nullptr : &it->second;
}

bool Catalogue::has_language(std::string_view lang) const {
  return std::find(languages.begin(), languages.end(), lang) != languages.end();
}

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
  });
}

std::string SlotOccurrence::key() const {
  return sub_segment_id + "#" + std::to_string(ordinal);
}

std::vector<SlotOccurrence> slot_occurrences(const TokenSequence& tokens) {
  std::vector<SlotOccurrence> out;
  std::map<std::string, std::size_t> seen;
  for (const Token& token : tokens) {
    if (const auto* slot = std::get_if<Slot>(&token)) {
      out.push_back({slot->sub_segment_id, seen[slot->sub_segment_id]++});
    }
  }
  return out;
}

std::vector<SlotOccurrence> slot_occurrences(const Option& option,
                                             const LanguageCode& source) {
  auto it = option.contents.find(source);
  if (it == option.contents.end()) {
    if (option.contents.empty()) return {};
    it = option.contents.begin();
  }
  return slot_occurrences(it->second.flattened());
}

}  // namespace phrasecat
