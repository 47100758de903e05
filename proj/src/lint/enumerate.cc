// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "phrasecat/error.h"
#include "phrasecat/lint.h"

namespace phrasecat {

namespace {

// Completion counts for options and sub-segments of a valid catalogue.
class Counter {
 public:
  explicit Counter(const Catalogue& catalogue) : catalogue_(catalogue) {}

  const BigCount& sub_segment(const std::string& id) {
    auto it = memo_.find(id);
    if (it != memo_.end()) return it->second;
    BigCount total = 0;
    for (const Option& option : catalogue_.find_sub_segment(id)->options) {
      total += this->option(option);
    }
    return memo_.emplace(id, std::move(total)).first->second;
  }

  // Literals contribute a factor of one; each slot occurrence the count of
  // its sub-segment.
  BigCount option(const Option& option) {
    BigCount product = 1;
    for (const SlotOccurrence& occ :
         slot_occurrences(option, catalogue_.source_language)) {
      product *= sub_segment(occ.sub_segment_id);
    }
    return product;
  }

  BigCount segment(const Segment& segment) {
    BigCount total = 0;
    for (const Option& o : segment.options) total += option(o);
    return total;
  }

  BigCount phrase(const Phrase& phrase) {
    BigCount product = 1;
    for (const Segment& s : phrase.segments) product *= segment(s);
    return product;
  }

  const Catalogue& catalogue() const { return catalogue_; }

 private:
  const Catalogue& catalogue_;
  std::map<std::string, BigCount> memo_;
};

class Unranker {
 public:
  Unranker(Counter& counter, Selection& out) : counter_(counter), out_(out) {}

  void phrase(const Phrase& phrase, BigCount rank) {
    const std::size_t n = phrase.segments.size();
    std::vector<BigCount> suffix(n + 1, 1);
    for (std::size_t i = n; i-- > 0;) {
      suffix[i] = suffix[i + 1] * counter_.segment(phrase.segments[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Segment& segment = phrase.segments[i];
      const BigCount& block = suffix[i + 1];
      for (const Option& option : segment.options) {
        BigCount span = counter_.option(option) * block;
        if (rank < span) {
          out_.choices[segment.id] = option.id;
          slots(option, segment.id + "/" + option.id, rank / block);
          rank %= block;
          break;
        }
        rank -= span;
      }
    }
  }

 private:
  // Distributes `rank` over the slot occurrences of `option`, first slot most
  // significant. `prefix` is the path prefix of those slots.
  void slots(const Option& option, const std::string& prefix, BigCount rank) {
    auto occurrences =
        slot_occurrences(option, counter_.catalogue().source_language);
    std::vector<BigCount> suffix(occurrences.size() + 1, 1);
    for (std::size_t i = occurrences.size(); i-- > 0;) {
      suffix[i] = suffix[i + 1] * counter_.sub_segment(occurrences[i].sub_segment_id);
    }
    for (std::size_t i = 0; i < occurrences.size(); ++i) {
      const BigCount& block = suffix[i + 1];
      sub_segment(occurrences[i], prefix + "/" + occurrences[i].key(),
                  rank / block);
      rank %= block;
    }
  }

  void sub_segment(const SlotOccurrence& occ, const std::string& path,
                   BigCount rank) {
    const SubSegment& sub = *counter_.catalogue().find_sub_segment(occ.sub_segment_id);
    for (const Option& option : sub.options) {
      BigCount span = counter_.option(option);
      if (rank < span) {
        out_.slot_choices[path] = option.id;
        slots(option, path + "/" + option.id, rank);
        return;
      }
      rank -= span;
    }
  }

  Counter& counter_;
  Selection& out_;
};

const Phrase& require_phrase(const Catalogue& catalogue, std::string_view id) {
  const Phrase* phrase = catalogue.find_phrase(id);
  if (phrase == nullptr) {
    throw Error(ErrorCode::kUnknownPhrase,
                "unknown phrase '" + std::string(id) + "'", std::string(id));
  }
  return *phrase;
}

std::string make_cursor(const Catalogue& catalogue, std::string_view phrase_id,
                        const BigCount& rank) {
  return std::string(phrase_id) + "@" + std::to_string(catalogue.version) +
         ":" + rank.str();
}

BigCount parse_cursor(const Catalogue& catalogue, std::string_view phrase_id,
                      std::string_view cursor, const BigCount& total) {
  std::string expected = std::string(phrase_id) + "@" +
                         std::to_string(catalogue.version) + ":";
  std::string_view digits = cursor;
  bool ok = cursor.substr(0, expected.size()) == expected;
  if (ok) {
    digits.remove_prefix(expected.size());
    ok = !digits.empty() && digits.size() < 80 &&
         digits.find_first_not_of("0123456789") == std::string_view::npos;
  }
  if (ok) {
    BigCount rank{std::string(digits)};
    if (rank <= total) return rank;
  }
  throw Error(ErrorCode::kInvalidCursor,
              "cursor '" + std::string(cursor) + "' is not valid here");
}

}  // namespace

BigCount count_selections(const Catalogue& catalogue,
                          std::optional<std::string_view> phrase_id) {
  Counter counter(catalogue);
  if (phrase_id) return counter.phrase(require_phrase(catalogue, *phrase_id));
  BigCount total = 0;
  for (const Phrase& phrase : catalogue.phrases) total += counter.phrase(phrase);
  return total;
}

Selection selection_at(const Catalogue& catalogue, std::string_view phrase_id,
                       const BigCount& rank) {
  const Phrase& phrase = require_phrase(catalogue, phrase_id);
  Counter counter(catalogue);
  if (rank < 0 || rank >= counter.phrase(phrase)) {
    throw Error(ErrorCode::kInvalidArgument, "rank out of range");
  }
  Selection selection;
  selection.phrase_id = phrase.id;
  Unranker(counter, selection).phrase(phrase, rank);
  return selection;
}

SelectionPage enumerate_selections(const Catalogue& catalogue,
                                   std::string_view phrase_id,
                                   std::size_t limit,
                                   std::optional<std::string_view> cursor) {
  if (limit == 0) {
    throw Error(ErrorCode::kInvalidArgument, "limit must be at least 1");
  }
  const Phrase& phrase = require_phrase(catalogue, phrase_id);
  Counter counter(catalogue);
  const BigCount total = counter.phrase(phrase);
  BigCount rank = cursor ? parse_cursor(catalogue, phrase_id, *cursor, total)
                         : BigCount(0);

  SelectionPage page;
  for (std::size_t i = 0; i < limit && rank < total; ++i, ++rank) {
    Selection selection;
    selection.phrase_id = phrase.id;
    Unranker(counter, selection).phrase(phrase, rank);
    page.selections.push_back(std::move(selection));
  }
  if (rank < total) page.next_cursor = make_cursor(catalogue, phrase_id, rank);
  return page;
}

}  // namespace phrasecat
