// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/edit.h"

#include <algorithm>

#include "phrasecat/error.h"
#include "phrasecat/finding.h"
#include "phrasecat/path.h"

namespace phrasecat {

namespace {

Phrase& require_phrase(Catalogue& c, const std::string& id) {
  for (Phrase& p : c.phrases) {
    if (p.id == id) return p;
  }
  throw Error(ErrorCode::kNotFound, "unknown phrase '" + id + "'",
              ElementPath::phrase(id).str());
}

void require_language(const Catalogue& c, const LanguageCode& lang) {
  if (!c.has_language(lang)) {
    throw Error(ErrorCode::kUnknownLanguage, "unknown language '" + lang + "'");
  }
}

Option& require_option(Catalogue& c, const std::string& path_text) {
  auto path = ElementPath::parse(path_text);
  Option* option = path ? find_option(c, *path) : nullptr;
  if (option == nullptr) {
    throw Error(ErrorCode::kNotFound, "no option at " + path_text, path_text);
  }
  return *option;
}

struct Applier {
  Catalogue& c;

  void operator()(const SetLayout& cmd) {
    Phrase& phrase = require_phrase(c, cmd.phrase_id);
    require_language(c, cmd.language);
    phrase.layouts[cmd.language] = cmd.layout;
  }

  void operator()(const SplitSegment& cmd) {
    Phrase& phrase = require_phrase(c, cmd.phrase_id);
    require_language(c, cmd.language);
    std::string layout_path =
        ElementPath::layout(cmd.phrase_id, cmd.language).str();
    if (cmd.language == c.source_language) {
      throw Error(ErrorCode::kBadSourceLayout,
                  "segments are never split in the source language",
                  layout_path);
    }
    if (cmd.segment_index >= phrase.segments.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "segment index " + std::to_string(cmd.segment_index) +
                      " out of range",
                  ElementPath::phrase(cmd.phrase_id).str());
    }
    Layout& layout = phrase.layouts[cmd.language];
    auto at = std::find(layout.entries.begin(), layout.entries.end(),
                        LayoutEntry{cmd.segment_index, LayoutPart::kWhole});
    if (at == layout.entries.end()) {
      throw Error(ErrorCode::kSplitMismatch,
                  "segment " + std::to_string(cmd.segment_index + 1) +
                      " is not a whole entry of the layout",
                  layout_path);
    }
    at = layout.entries.erase(at);
    layout.entries.insert(at, {{cmd.segment_index, LayoutPart::kA},
                               {cmd.segment_index, LayoutPart::kB}});

    Segment& segment = phrase.segments[cmd.segment_index];
    for (Option& option : segment.options) {
      std::string option_path =
          ElementPath::segment_option(phrase.id, segment.id, option.id).str();
      auto point = cmd.split_points.find(option.id);
      if (point == cmd.split_points.end()) {
        throw Error(ErrorCode::kSplitMismatch,
                    "no split point for option '" + option.id + "'",
                    option_path);
      }
      auto content = option.contents.find(cmd.language);
      if (content == option.contents.end()) {
        throw Error(ErrorCode::kMissingTranslation,
                    "option has no '" + cmd.language + "' content",
                    option_path);
      }
      const auto* whole = std::get_if<TokenSequence>(&content->second.parts);
      if (whole == nullptr || point->second > whole->size()) {
        throw Error(ErrorCode::kSplitMismatch,
                    "split point does not fall inside the unsplit content",
                    option_path);
      }
      auto middle = whole->begin() + static_cast<std::ptrdiff_t>(point->second);
      content->second = OptionContent::split(TokenSequence(whole->begin(), middle),
                                             TokenSequence(middle, whole->end()));
    }
    if (cmd.split_points.size() != segment.options.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "split points name options outside the segment",
                  ElementPath::segment(phrase.id, segment.id).str());
    }
  }

  void operator()(const SetOptionContent& cmd) {
    require_language(c, cmd.language);
    require_option(c, cmd.option_path).contents[cmd.language] = cmd.content;
  }

  void operator()(const AddPhrase& cmd) {
    if (c.find_phrase(cmd.phrase.id) != nullptr) {
      throw Error(ErrorCode::kDuplicateId,
                  "phrase '" + cmd.phrase.id + "' already exists",
                  ElementPath::phrase(cmd.phrase.id).str());
    }
    c.phrases.push_back(cmd.phrase);
  }

  void operator()(const AddSubSegment& cmd) {
    const std::string& id = cmd.sub_segment.id;
    if (!is_valid_identifier(id)) {
      throw Error(ErrorCode::kMalformed, "invalid identifier '" + id + "'");
    }
    if (!c.sub_segments.emplace(id, cmd.sub_segment).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "sub-segment '" + id + "' already exists",
                  ElementPath::sub_segment(id).str());
    }
  }

  void operator()(const AddSegmentOption& cmd) {
    auto path = ElementPath::parse(cmd.owner_path);
    std::vector<Option>* options = nullptr;
    if (path && path->kind == ElementPath::Kind::kSegment) {
      Phrase& phrase = require_phrase(c, path->phrase_id);
      for (Segment& s : phrase.segments) {
        if (s.id == path->segment_id) options = &s.options;
      }
    } else if (path && path->kind == ElementPath::Kind::kSubSegment) {
      auto it = c.sub_segments.find(path->sub_segment_id);
      if (it != c.sub_segments.end()) options = &it->second.options;
    }
    if (options == nullptr) {
      throw Error(ErrorCode::kNotFound,
                  "no segment or sub-segment at " + cmd.owner_path,
                  cmd.owner_path);
    }
    options->push_back(cmd.option);
  }

  void operator()(const SetAgreement& cmd) {
    require_option(c, cmd.option_path).agreement = cmd.agreement;
  }
};

}  // namespace

Catalogue apply_edit(const Catalogue& catalogue, const EditCommand& command) {
  Catalogue edited = catalogue;
  std::visit(Applier{edited}, command);
  for (const Finding& f : check_structure(edited)) {
    if (f.severity == Severity::kError) {
      throw Error(f.code, "edit rejected: " + f.message, f.path);
    }
  }
  ++edited.version;
  return edited;
}

}  // namespace phrasecat
