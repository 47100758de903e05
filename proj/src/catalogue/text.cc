// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "phrasecat/error.h"

namespace phrasecat::text {

namespace {

const icu::Normalizer2& normalizer(bool compose) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = compose ? icu::Normalizer2::getNFCInstance(status)
                                      : icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status) || n == nullptr) {
    throw Error(ErrorCode::kIoError, "ICU normalizer unavailable");
  }
  return *n;
}

icu::UnicodeString to_unicode(std::string_view utf8) {
  if (!is_valid_utf8(utf8)) {
    throw Error(ErrorCode::kMalformed, "invalid UTF-8 text");
  }
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
}

std::string to_utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

icu::UnicodeString normalize(const icu::UnicodeString& s, bool compose) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = normalizer(compose).normalize(s, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kMalformed, "text normalization failed");
  }
  return out;
}

// Decodes the code point at `pos`; returns a negative value on bad input.
UChar32 next_code_point(std::string_view utf8, std::size_t* pos) {
  int32_t i = static_cast<int32_t>(*pos);
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t*>(utf8.data()), i,
          static_cast<int32_t>(utf8.size()), c);
  *pos = static_cast<std::size_t>(i);
  return c;
}

}  // namespace

bool is_valid_utf8(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    if (next_code_point(bytes, &pos) < 0) return false;
  }
  return true;
}

std::string nfc(std::string_view utf8) {
  return to_utf8(normalize(to_unicode(utf8), true));
}

std::string trim(std::string_view utf8) {
  std::size_t begin = utf8.size();
  std::size_t end = 0;
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    std::size_t start = pos;
    UChar32 c = next_code_point(utf8, &pos);
    if (c < 0) throw Error(ErrorCode::kMalformed, "invalid UTF-8 text");
    if (!u_isUWhiteSpace(c)) {
      if (begin == utf8.size()) begin = start;
      end = pos;
    }
  }
  if (begin >= end) return {};
  return std::string(utf8.substr(begin, end - begin));
}

std::string uppercase_first(std::string_view utf8) {
  if (utf8.empty()) return {};
  std::size_t pos = 0;
  UChar32 c = next_code_point(utf8, &pos);
  if (c < 0 || !u_islower(c)) return std::string(utf8);
  UChar32 upper = u_toupper(c);
  std::string out;
  icu::UnicodeString(upper).toUTF8String(out);
  out.append(utf8.substr(pos));
  return out;
}

std::string strip_and_lower(std::string_view utf8) {
  icu::UnicodeString decomposed = normalize(to_unicode(utf8), false);
  icu::UnicodeString stripped;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    if (u_charType(c) != U_NON_SPACING_MARK) stripped.append(c);
    i += U16_LENGTH(c);
  }
  stripped.toLower(icu::Locale::getRoot());
  return to_utf8(normalize(stripped, true));
}

bool is_alnum_at(std::string_view utf8, std::size_t pos, std::size_t* next) {
  UChar32 c = next_code_point(utf8, &pos);
  *next = pos;
  return c >= 0 && u_isalnum(c);
}

std::size_t code_point_count(std::string_view utf8) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    next_code_point(utf8, &pos);
    ++count;
  }
  return count;
}

}  // namespace phrasecat::text
