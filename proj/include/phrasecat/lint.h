// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_LINT_H_
#define PHRASECAT_LINT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "phrasecat/catalogue.h"
#include "phrasecat/finding.h"
#include "phrasecat/selection.h"

namespace phrasecat {

struct LintOptions {
  // Adds UNANNOTATED warnings for options in uniform-agreement segments that
  // lack metadata declared by their siblings.
  bool strict = false;
  // May be lowered below kMaxNestingDepth, never raised.
  int max_depth = kMaxNestingDepth;
};

// All structural findings plus unused sub-segments (and strict-mode checks),
// sorted by severity, then path.
std::vector<Finding> lint(const Catalogue& catalogue,
                          const LintOptions& options = {});

using BigCount = boost::multiprecision::cpp_int;

// Number of complete selections of one phrase, or of the whole catalogue when
// `phrase_id` is empty. Exact.
BigCount count_selections(const Catalogue& catalogue,
                          std::optional<std::string_view> phrase_id = {});

struct SelectionPage {
  std::vector<Selection> selections;
  // Absent once the enumeration is exhausted.
  std::optional<std::string> next_cursor;
};

// Lists complete selections in lexicographic order of the depth-first
// decision sequence (segments in order, each followed by its slots), options
// in authoring order. Throws Error(kInvalidCursor) for a cursor that does not
// belong to this phrase and catalogue version.
SelectionPage enumerate_selections(const Catalogue& catalogue,
                                   std::string_view phrase_id,
                                   std::size_t limit,
                                   std::optional<std::string_view> cursor = {});

// The selection at a given rank of the enumeration order.
Selection selection_at(const Catalogue& catalogue, std::string_view phrase_id,
                       const BigCount& rank);

}  // namespace phrasecat

#endif  // PHRASECAT_LINT_H_
