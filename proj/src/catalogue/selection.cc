// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/selection.h"

#include <set>

namespace phrasecat {

std::string_view to_string(SelectionIssueCode code) {
  switch (code) {
    case SelectionIssueCode::kMissingChoice: return "MISSING_CHOICE";
    case SelectionIssueCode::kMissingSlotChoice: return "MISSING_SLOT_CHOICE";
    case SelectionIssueCode::kWrongOptionForSegment:
      return "WRONG_OPTION_FOR_SEGMENT";
    case SelectionIssueCode::kWrongOptionForSlot: return "WRONG_OPTION_FOR_SLOT";
    case SelectionIssueCode::kUnknownOption: return "UNKNOWN_OPTION";
    case SelectionIssueCode::kUnknownSegment: return "UNKNOWN_SEGMENT";
    case SelectionIssueCode::kUnexpectedSlotChoice:
      return "UNEXPECTED_SLOT_CHOICE";
  }
  return "UNKNOWN";
}

std::string slot_path(std::string_view segment_id, std::string_view option_id,
                      const SlotOccurrence& occurrence) {
  std::string out(segment_id);
  out += '/';
  out += option_id;
  out += '/';
  out += occurrence.key();
  return out;
}

std::string nested_slot_path(std::string_view parent_path,
                             std::string_view chosen_option_id,
                             const SlotOccurrence& occurrence) {
  std::string out(parent_path);
  out += '/';
  out += chosen_option_id;
  out += '/';
  out += occurrence.key();
  return out;
}

SelectionError::SelectionError(ValidationReport report)
    : Error(ErrorCode::kIncompleteSelection,
            report.issues.empty()
                ? std::string("incomplete selection")
                : std::string(to_string(report.issues.front().code)) + " at " +
                      report.issues.front().path),
      report_(std::move(report)) {}

namespace {

class SelectionValidator {
 public:
  SelectionValidator(const Catalogue& catalogue, const Phrase& phrase,
                     const Selection& selection)
      : catalogue_(catalogue), phrase_(phrase), selection_(selection) {}

  ValidationReport run() {
    for (const Segment& segment : phrase_.segments) {
      auto it = selection_.choices.find(segment.id);
      if (it == selection_.choices.end()) {
        add(SelectionIssueCode::kMissingChoice, segment.id,
            "no option chosen for segment '" + segment.id + "'");
        continue;
      }
      const Option* option = segment.find_option(it->second);
      if (option == nullptr) {
        bool elsewhere = false;
        for (const Segment& other : phrase_.segments) {
          if (other.find_option(it->second) != nullptr) elsewhere = true;
        }
        add(elsewhere ? SelectionIssueCode::kWrongOptionForSegment
                      : SelectionIssueCode::kUnknownOption,
            segment.id,
            "option '" + it->second + "' does not belong to segment '" +
                segment.id + "'");
        continue;
      }
      for (const SlotOccurrence& occ :
           slot_occurrences(*option, catalogue_.source_language)) {
        check_slot(slot_path(segment.id, option->id, occ), occ);
      }
    }
    for (const auto& [segment_id, option_id] : selection_.choices) {
      if (phrase_.find_segment(segment_id) == nullptr) {
        add(SelectionIssueCode::kUnknownSegment, segment_id,
            "phrase has no segment '" + segment_id + "'");
      }
    }
    for (const auto& [path, option_id] : selection_.slot_choices) {
      if (!visited_.count(path)) {
        add(SelectionIssueCode::kUnexpectedSlotChoice, path,
            "no slot occurrence at this path in the chosen options");
      }
    }
    return std::move(report_);
  }

 private:
  void add(SelectionIssueCode code, std::string path, std::string message) {
    report_.issues.push_back({code, std::move(path), std::move(message)});
  }

  void check_slot(const std::string& path, const SlotOccurrence& occ,
                  int depth = 1) {
    visited_.insert(path);
    // Only reachable through a reference cycle in an invalid catalogue.
    if (depth > kMaxNestingDepth + 1) return;
    const SubSegment* sub = catalogue_.find_sub_segment(occ.sub_segment_id);
    auto it = selection_.slot_choices.find(path);
    if (it == selection_.slot_choices.end()) {
      add(SelectionIssueCode::kMissingSlotChoice, path,
          "no option chosen for slot {" + occ.sub_segment_id + "}");
      return;
    }
    const Option* option = sub ? sub->find_option(it->second) : nullptr;
    if (option == nullptr) {
      add(SelectionIssueCode::kWrongOptionForSlot, path,
          "option '" + it->second + "' does not belong to sub-segment '" +
              occ.sub_segment_id + "'");
      return;
    }
    for (const SlotOccurrence& inner :
         slot_occurrences(*option, catalogue_.source_language)) {
      check_slot(nested_slot_path(path, option->id, inner), inner, depth + 1);
    }
  }

  const Catalogue& catalogue_;
  const Phrase& phrase_;
  const Selection& selection_;
  ValidationReport report_;
  std::set<std::string> visited_;
};

}  // namespace

ValidationReport validate_selection(const Catalogue& catalogue,
                                    const Selection& selection) {
  const Phrase* phrase = catalogue.find_phrase(selection.phrase_id);
  if (phrase == nullptr) {
    throw Error(ErrorCode::kUnknownPhrase,
                "unknown phrase '" + selection.phrase_id + "'",
                selection.phrase_id);
  }
  return SelectionValidator(catalogue, *phrase, selection).run();
}

}  // namespace phrasecat
