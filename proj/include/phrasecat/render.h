// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_RENDER_H_
#define PHRASECAT_RENDER_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phrasecat/catalogue.h"
#include "phrasecat/selection.h"

namespace phrasecat {

struct RenderedSentence {
  LanguageCode language;
  std::string text;
  bool operator==(const RenderedSentence&) const = default;
};

// Realization of one layout entry, in layout order.
struct RenderedPart {
  std::size_t segment_index = 0;
  LayoutPart part = LayoutPart::kWhole;
  std::string text;
};

// Joins nonempty parts with exactly one space.
std::string join_parts(std::span<const std::string> parts);

// Uppercases the first character if it is a lowercase letter.
std::string capitalize_sentence(std::string_view text);

// Throws SelectionError for an incomplete or inconsistent selection and
// Error(kUnknownLanguage) for a language outside the catalogue.
std::vector<RenderedPart> render_parts(const Catalogue& catalogue,
                                       const Selection& selection,
                                       const LanguageCode& lang);

RenderedSentence render(const Catalogue& catalogue, const Selection& selection,
                        const LanguageCode& lang);

// One sentence per catalogue language; all or nothing.
std::map<LanguageCode, RenderedSentence> render_all(const Catalogue& catalogue,
                                                    const Selection& selection);

}  // namespace phrasecat

#endif  // PHRASECAT_RENDER_H_
