// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_SELECTION_H_
#define PHRASECAT_SELECTION_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phrasecat/catalogue.h"
#include "phrasecat/error.h"

namespace phrasecat {

// A forecaster's concrete choices for one phrase.
//
// Slot choices are keyed by slot paths. A top-level slot path is
// "<segmentId>/<optionId>/<sub>#<k>"; a nested one extends its parent path
// with "/<chosenSubOptionId>/<sub>#<k>". Paths depend only on ids and slot
// ordinals, never on token positions or languages.
struct Selection {
  std::string phrase_id;
  std::map<std::string, std::string> choices;       // segment id -> option id
  std::map<std::string, std::string> slot_choices;  // slot path -> option id

  bool operator==(const Selection&) const = default;
};

std::string slot_path(std::string_view segment_id, std::string_view option_id,
                      const SlotOccurrence& occurrence);
std::string nested_slot_path(std::string_view parent_path,
                             std::string_view chosen_option_id,
                             const SlotOccurrence& occurrence);

enum class SelectionIssueCode {
  kMissingChoice,
  kMissingSlotChoice,
  kWrongOptionForSegment,
  kWrongOptionForSlot,
  kUnknownOption,
  kUnknownSegment,
  kUnexpectedSlotChoice,
};

std::string_view to_string(SelectionIssueCode code);

struct SelectionIssue {
  SelectionIssueCode code;
  std::string path;  // segment id or slot path
  std::string message;
  bool operator==(const SelectionIssue&) const = default;
};

struct ValidationReport {
  std::vector<SelectionIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Lists every missing or invalid choice. Throws Error(kUnknownPhrase) when
// the phrase does not exist.
ValidationReport validate_selection(const Catalogue& catalogue,
                                    const Selection& selection);

// Thrown by operations that require a complete, consistent selection.
class SelectionError : public Error {
 public:
  explicit SelectionError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace phrasecat

#endif  // PHRASECAT_SELECTION_H_
