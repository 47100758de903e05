// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_TEXT_H_
#define PHRASECAT_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace phrasecat::text {

// Unicode canonical composition (NFC). Invalid UTF-8 throws Error(kMalformed).
std::string nfc(std::string_view utf8);

// Strips leading and trailing Unicode whitespace.
std::string trim(std::string_view utf8);

// Uppercases the first code point if it is a lowercase letter.
std::string uppercase_first(std::string_view utf8);

// Lowercased, diacritic-free NFC text (ä -> a, é -> e).
std::string strip_and_lower(std::string_view utf8);

// True if the code point at `pos` is alphanumeric; `next` receives the
// offset of the following code point.
bool is_alnum_at(std::string_view utf8, std::size_t pos, std::size_t* next);

std::size_t code_point_count(std::string_view utf8);

bool is_valid_utf8(std::string_view bytes);

}  // namespace phrasecat::text

#endif  // PHRASECAT_TEXT_H_
