// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/search.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "phrasecat/error.h"
#include "phrasecat/text.h"

namespace phrasecat {

std::vector<std::string> fold(std::string_view input) {
  std::string folded = text::strip_and_lower(input);
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < folded.size()) {
    std::size_t next = pos;
    if (text::is_alnum_at(folded, pos, &next)) {
      current.append(folded, pos, next - pos);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
    pos = next;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

void add_literals(const Option& option, const LanguageCode& lang,
                  std::map<std::string, std::size_t>& counts,
                  std::vector<std::string>& slots) {
  auto it = option.contents.find(lang);
  if (it == option.contents.end()) return;
  for (const Token& token : it->second.flattened()) {
    if (const auto* literal = std::get_if<Literal>(&token)) {
      for (std::string& t : fold(literal->text)) ++counts[std::move(t)];
    } else {
      slots.push_back(std::get<Slot>(token).sub_segment_id);
    }
  }
}

}  // namespace

Index build_index(const Catalogue& catalogue, const LanguageCode& lang) {
  if (!catalogue.has_language(lang)) {
    throw Error(ErrorCode::kUnknownLanguage, "unknown language '" + lang + "'");
  }
  Index index;
  index.language = lang;
  index.catalogue_version = catalogue.version;
  index.doc_count = catalogue.phrases.size();
  for (const Phrase& phrase : catalogue.phrases) {
    std::map<std::string, std::size_t> counts;
    std::vector<std::string> pending;
    for (const Segment& segment : phrase.segments) {
      for (const Option& option : segment.options) {
        add_literals(option, lang, counts, pending);
      }
    }
    // Each reachable sub-segment contributes once per phrase.
    std::set<std::string> visited;
    while (!pending.empty()) {
      std::string id = std::move(pending.back());
      pending.pop_back();
      if (!visited.insert(id).second) continue;
      if (const SubSegment* sub = catalogue.find_sub_segment(id)) {
        for (const Option& option : sub->options) {
          add_literals(option, lang, counts, pending);
        }
      }
    }
    for (auto& [token, count] : counts) {
      index.postings[token][phrase.id] += count;
    }
  }
  for (const auto& [token, phrases] : index.postings) {
    index.token_doc_freq[token] = phrases.size();
  }
  return index;
}

std::vector<PhraseHit> search(const Index& index, std::string_view query,
                              std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  std::vector<std::string> tokens = fold(query);
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());

  std::map<std::string, PhraseHit> hits;
  for (const std::string& token : tokens) {
    auto posting = index.postings.find(token);
    if (posting == index.postings.end()) continue;
    double idf = std::log(1.0 + static_cast<double>(index.doc_count) /
                                    static_cast<double>(posting->second.size()));
    for (const auto& [phrase_id, count] : posting->second) {
      PhraseHit& hit = hits[phrase_id];
      hit.phrase_id = phrase_id;
      hit.score += idf;
      hit.matched_tokens.push_back(token);
    }
  }
  std::vector<PhraseHit> ranked;
  ranked.reserve(hits.size());
  for (auto& [id, hit] : hits) ranked.push_back(std::move(hit));
  std::sort(ranked.begin(), ranked.end(),
            [](const PhraseHit& a, const PhraseHit& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.phrase_id < b.phrase_id;
            });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

std::vector<PhraseHit> search(const Index& index, const Catalogue& current,
                              std::string_view query, std::size_t k) {
  if (index.catalogue_version != current.version) {
    throw Error(ErrorCode::kStaleVersion,
                "index built from catalogue version " +
                    std::to_string(index.catalogue_version) +
                    ", current is " + std::to_string(current.version));
  }
  return search(index, query, k);
}

}  // namespace phrasecat
