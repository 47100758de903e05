// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_FINDING_H_
#define PHRASECAT_FINDING_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phrasecat/catalogue.h"
#include "phrasecat/error.h"

namespace phrasecat {

enum class Severity { kError, kWarning };

std::string_view to_string(Severity severity);

// A diagnostic about a catalogue element. `path` uses ElementPath syntax.
struct Finding {
  ErrorCode code;
  Severity severity = Severity::kError;
  std::string path;
  std::string message;

  bool operator==(const Finding&) const = default;
};

// Structural invariants of the catalogue model: segment limits, layout
// permutations, split arity, translations, slot multisets and references,
// nesting depth, cycles, duplicate ids and declared agreement. Findings are
// reported in traversal order.
std::vector<Finding> check_structure(const Catalogue& catalogue,
                                     int max_depth = kMaxNestingDepth);

bool has_errors(std::span<const Finding> findings);

// Throws Error for the first error-severity finding, if any.
void require_valid(const Catalogue& catalogue);

}  // namespace phrasecat

#endif  // PHRASECAT_FINDING_H_
