// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_ERROR_H_
#define PHRASECAT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace phrasecat {

// Machine-readable error and finding codes. The string forms are part of the
// wire format (lint output, ApiError bodies) and must not change.
enum class ErrorCode {
  kMalformed,
  kDuplicateId,
  kMissingTranslation,
  kBadLayoutPermutation,
  kBadSourceLayout,
  kSplitMismatch,
  kSlotMismatch,
  kDanglingSlot,
  kDepthExceeded,
  kSegmentLimit,
  kAgreementViolation,
  kUnusedSubsegment,
  kCycle,
  kUnannotated,
  kUnknownPhrase,
  kUnknownLanguage,
  kIncompleteSelection,
  kInvalidCursor,
  kStaleVersion,
  kNotFound,
  kValidation,
  kIoError,
  kEmptyInput,
  kInsufficientData,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string path = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        path_(std::move(path)) {}

  ErrorCode code() const { return code_; }

  // Location of the offending element, empty when not applicable.
  const std::string& path() const { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace phrasecat

#endif  // PHRASECAT_ERROR_H_
