// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_CODEC_H_
#define PHRASECAT_CODEC_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "phrasecat/catalogue.h"
#include "phrasecat/finding.h"
#include "phrasecat/selection.h"

namespace phrasecat {

inline constexpr int kCatalogueFormatVersion = 1;

// Decodes the catalogue JSON format without checking model invariants beyond
// document shape: unknown fields, wrong types, bad identifiers, language keys
// outside the language list and malformed layout entries throw
// Error(kMalformed). Literals are NFC-normalized and trimmed. Used for lint.
Catalogue decode_catalogue(std::string_view bytes);

// decode_catalogue plus every structural invariant; throws Error carrying the
// code of the first violation.
Catalogue parse_catalogue(std::string_view bytes);

// Canonical form: sorted object keys, two-space indentation, trailing newline.
std::string serialize_catalogue(const Catalogue& catalogue);

nlohmann::json catalogue_to_json(const Catalogue& catalogue);
nlohmann::json phrase_to_json(const Phrase& phrase);
nlohmann::json option_to_json(const Option& option);

// Layout entries use 1-based segment numbers with an optional a/b suffix.
std::string layout_entry_to_string(const LayoutEntry& entry);
LayoutEntry parse_layout_entry(std::string_view text);

Selection selection_from_json(const nlohmann::json& doc);
nlohmann::json selection_to_json(const Selection& selection);

nlohmann::json finding_to_json(const Finding& finding);
nlohmann::json validation_report_to_json(const ValidationReport& report);

}  // namespace phrasecat

#endif  // PHRASECAT_CODEC_H_
