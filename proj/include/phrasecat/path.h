// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_PATH_H_
#define PHRASECAT_PATH_H_

#include <optional>
#include <string>
#include <string_view>

#include "phrasecat/catalogue.h"

namespace phrasecat {

// Locations of catalogue elements, used by findings and edit commands:
//
//   /
//   /phrases/<phrase>
//   /phrases/<phrase>/layouts/<lang>
//   /phrases/<phrase>/segments/<segment>
//   /phrases/<phrase>/segments/<segment>/options/<option>
//   /subSegments/<sub>
//   /subSegments/<sub>/options/<option>
struct ElementPath {
  enum class Kind {
    kRoot,
    kPhrase,
    kLayout,
    kSegment,
    kSegmentOption,
    kSubSegment,
    kSubSegmentOption,
  };

  Kind kind = Kind::kRoot;
  std::string phrase_id;
  std::string segment_id;
  std::string sub_segment_id;
  std::string option_id;
  LanguageCode language;

  static ElementPath root() { return {}; }
  static ElementPath phrase(std::string phrase_id);
  static ElementPath layout(std::string phrase_id, LanguageCode lang);
  static ElementPath segment(std::string phrase_id, std::string segment_id);
  static ElementPath segment_option(std::string phrase_id,
                                    std::string segment_id,
                                    std::string option_id);
  static ElementPath sub_segment(std::string sub_segment_id);
  static ElementPath sub_segment_option(std::string sub_segment_id,
                                        std::string option_id);

  std::string str() const;
  static std::optional<ElementPath> parse(std::string_view text);

  bool operator==(const ElementPath&) const = default;
};

// True if the path names an element that exists in the catalogue.
bool path_resolves(const Catalogue& catalogue, std::string_view path);

const Option* find_option(const Catalogue& catalogue, const ElementPath& path);
Option* find_option(Catalogue& catalogue, const ElementPath& path);

}  // namespace phrasecat

#endif  // PHRASECAT_PATH_H_
