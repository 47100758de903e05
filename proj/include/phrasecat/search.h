// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_SEARCH_H_
#define PHRASECAT_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phrasecat/catalogue.h"

namespace phrasecat {

// Normalizes, lowercases and strips diacritics, then splits on runs of
// non-alphanumeric characters.
std::vector<std::string> fold(std::string_view text);

// Token index over the literals reachable from each phrase in one language.
struct Index {
  LanguageCode language;
  std::int64_t catalogue_version = 0;
  // token -> phrase id -> occurrence count
  std::map<std::string, std::map<std::string, std::size_t>> postings;
  std::size_t doc_count = 0;
  std::map<std::string, std::size_t> token_doc_freq;
};

struct PhraseHit {
  std::string phrase_id;
  double score = 0;
  std::vector<std::string> matched_tokens;
};

// Throws Error(kUnknownLanguage) if `lang` is not a catalogue language.
Index build_index(const Catalogue& catalogue, const LanguageCode& lang);

// Any-token match scored by the sum of ln(1 + docCount / docFreq) over the
// distinct matched query tokens; score descending, then phrase id ascending.
std::vector<PhraseHit> search(const Index& index, std::string_view query,
                              std::size_t k);

// As above, rejecting an index built from another catalogue version with
// Error(kStaleVersion).
std::vector<PhraseHit> search(const Index& index, const Catalogue& current,
                              std::string_view query, std::size_t k);

}  // namespace phrasecat

#endif  // PHRASECAT_SEARCH_H_
