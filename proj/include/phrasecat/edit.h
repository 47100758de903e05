// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_EDIT_H_
#define PHRASECAT_EDIT_H_

#include <cstddef>
#include <map>
#include <string>
#include <variant>

#include "phrasecat/catalogue.h"

namespace phrasecat {

// Editing commands for the translation workbench. Option and segment targets
// are ElementPath strings.

struct SetLayout {
  std::string phrase_id;
  LanguageCode language;
  Layout layout;
};

// Splits one segment of a target language into parts a and b, placed
// adjacently where the whole segment was. `split_points` maps every option
// id of the segment to the token index where part b starts.
struct SplitSegment {
  std::string phrase_id;
  LanguageCode language;
  std::size_t segment_index = 0;
  std::map<std::string, std::size_t> split_points;
};

struct SetOptionContent {
  std::string option_path;
  LanguageCode language;
  OptionContent content;
};

struct AddPhrase {
  Phrase phrase;
};

struct AddSubSegment {
  SubSegment sub_segment;
};

// Appends an option to a segment or sub-segment.
struct AddSegmentOption {
  std::string owner_path;
  Option option;
};

struct SetAgreement {
  std::string option_path;
  std::map<LanguageCode, Agreement> agreement;
};

using EditCommand = std::variant<SetLayout, SplitSegment, SetOptionContent,
                                 AddPhrase, AddSubSegment, AddSegmentOption,
                                 SetAgreement>;

// Returns the edited catalogue with version + 1. Throws Error naming the
// violated invariant if the result would be invalid; the input is untouched.
Catalogue apply_edit(const Catalogue& catalogue, const EditCommand& command);

}  // namespace phrasecat

#endif  // PHRASECAT_EDIT_H_
