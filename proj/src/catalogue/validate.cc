// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "phrasecat/finding.h"
#include "phrasecat/path.h"
#include "phrasecat/text.h"

namespace phrasecat {

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

bool has_errors(std::span<const Finding> findings) {
  return std::any_of(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity == Severity::kError;
  });
}

namespace {

std::string agreement_string(const Agreement& a) {
  return "(" + std::string(to_string(a.gender)) + ", " +
         std::string(to_string(a.number)) + ")";
}

class StructureChecker {
 public:
  StructureChecker(const Catalogue& catalogue, int max_depth)
      : catalogue_(catalogue), max_depth_(max_depth) {}

  std::vector<Finding> run() {
    check_languages();
    check_phrases();
    check_sub_segments();
    check_references();
    return std::move(findings_);
  }

 private:
  // Expected split state of an option's content per language; nullopt when
  // the layout is missing or invalid and arity cannot be judged.
  using ArityFn = std::function<std::optional<bool>(const LanguageCode&)>;

  void report(ErrorCode code, std::string path, std::string message) {
    findings_.push_back(
        {code, Severity::kError, std::move(path), std::move(message)});
  }

  void check_languages() {
    std::set<LanguageCode> seen;
    for (const LanguageCode& lang : catalogue_.languages) {
      if (lang.empty() || !seen.insert(lang).second) {
        report(ErrorCode::kMalformed, "/",
               "language codes must be nonempty and distinct");
      }
    }
    if (catalogue_.languages.empty() ||
        !catalogue_.has_language(catalogue_.source_language)) {
      report(ErrorCode::kMalformed, "/",
             "source language must be one of the catalogue languages");
    }
  }

  void check_phrases() {
    std::set<std::string> phrase_ids;
    for (const Phrase& phrase : catalogue_.phrases) {
      std::string path = ElementPath::phrase(phrase.id).str();
      if (!phrase_ids.insert(phrase.id).second) {
        report(ErrorCode::kDuplicateId, path,
               "duplicate phrase id '" + phrase.id + "'");
      }
      check_phrase(phrase, path);
    }
  }

  void check_phrase(const Phrase& phrase, const std::string& path) {
    if (phrase.segments.empty() || phrase.segments.size() > kMaxSegments) {
      report(ErrorCode::kSegmentLimit, path,
             "phrase has " + std::to_string(phrase.segments.size()) +
                 " segments; allowed 1.." + std::to_string(kMaxSegments));
    }

    std::map<LanguageCode, const Layout*> valid_layouts;
    for (const auto& [lang, layout] : phrase.layouts) {
      if (!catalogue_.has_language(lang)) {
        report(ErrorCode::kMalformed,
               ElementPath::layout(phrase.id, lang).str(),
               "layout for unknown language '" + lang + "'");
      }
    }
    for (const LanguageCode& lang : catalogue_.languages) {
      auto it = phrase.layouts.find(lang);
      if (it == phrase.layouts.end()) {
        report(ErrorCode::kBadLayoutPermutation, path,
               "no layout for language '" + lang + "'");
        continue;
      }
      if (check_layout(phrase, lang, it->second)) {
        valid_layouts[lang] = &it->second;
      }
    }

    std::set<std::string> segment_ids;
    for (std::size_t i = 0; i < phrase.segments.size(); ++i) {
      const Segment& segment = phrase.segments[i];
      std::string segment_path =
          ElementPath::segment(phrase.id, segment.id).str();
      if (!segment_ids.insert(segment.id).second) {
        report(ErrorCode::kDuplicateId, segment_path,
               "duplicate segment id '" + segment.id + "'");
      }
      if (segment.options.empty()) {
        report(ErrorCode::kMalformed, segment_path, "segment has no options");
      }
      ArityFn arity = [&, i](const LanguageCode& lang) -> std::optional<bool> {
        auto it = valid_layouts.find(lang);
        if (it == valid_layouts.end()) return std::nullopt;
        return it->second->is_split(i);
      };
      std::set<std::string> option_ids;
      for (const Option& option : segment.options) {
        std::string option_path =
            ElementPath::segment_option(phrase.id, segment.id, option.id).str();
        if (!option_ids.insert(option.id).second) {
          report(ErrorCode::kDuplicateId, option_path,
                 "duplicate option id '" + option.id + "'");
        }
        check_option(option, option_path, arity);
        for (const SlotOccurrence& occ :
             slot_occurrences(option, catalogue_.source_language)) {
          top_level_refs_.push_back({occ.sub_segment_id, option_path});
        }
      }
      if (segment.uniform_agreement) check_agreement(phrase, segment);
    }
  }

  // Returns true if the layout is a valid permutation-with-splits.
  bool check_layout(const Phrase& phrase, const LanguageCode& lang,
                    const Layout& layout) {
    std::string path = ElementPath::layout(phrase.id, lang).str();
    const std::size_t n = phrase.segments.size();
    std::vector<int> whole(n, 0), part_a(n, 0), part_b(n, 0);
    bool ok = true;
    for (const LayoutEntry& entry : layout.entries) {
      if (entry.segment_index >= n) {
        report(ErrorCode::kBadLayoutPermutation, path,
               "layout refers to segment " +
                   std::to_string(entry.segment_index + 1) + " of " +
                   std::to_string(n));
        ok = false;
        continue;
      }
      switch (entry.part) {
        case LayoutPart::kWhole: ++whole[entry.segment_index]; break;
        case LayoutPart::kA: ++part_a[entry.segment_index]; break;
        case LayoutPart::kB: ++part_b[entry.segment_index]; break;
      }
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool whole_once = whole[i] == 1 && part_a[i] == 0 && part_b[i] == 0;
      bool split_once = whole[i] == 0 && part_a[i] == 1 && part_b[i] == 1;
      if (!whole_once && !split_once) {
        report(ErrorCode::kBadLayoutPermutation, path,
               "segment " + std::to_string(i + 1) +
                   " must appear once whole or once each as a and b");
        ok = false;
      }
    }
    if (ok && lang == catalogue_.source_language &&
        layout != Layout::identity(n)) {
      report(ErrorCode::kBadSourceLayout, path,
             "source-language layout must be the identity order without "
             "splits");
      ok = false;
    }
    return ok;
  }

  void check_tokens(const TokenSequence& tokens, const std::string& path,
                    const LanguageCode& lang) {
    for (const Token& token : tokens) {
      const auto* literal = std::get_if<Literal>(&token);
      if (literal == nullptr) continue;
      if (literal->text.empty() ||
          literal->text != text::trim(text::nfc(literal->text))) {
        report(ErrorCode::kMalformed, path,
               "literal in '" + lang +
                   "' must be nonempty, trimmed and NFC-normalized");
        return;
      }
    }
  }

  void check_option(const Option& option, const std::string& path,
                    const ArityFn& expected_split) {
    if (option.antecedent_hint && text::trim(*option.antecedent_hint).empty()) {
      report(ErrorCode::kMalformed, path, "antecedent hint is empty");
    }
    for (const auto& [lang, content] : option.contents) {
      if (!catalogue_.has_language(lang)) {
        report(ErrorCode::kMalformed, path,
               "content for unknown language '" + lang + "'");
      }
    }
    for (const auto& [lang, agreement] : option.agreement) {
      if (!catalogue_.has_language(lang)) {
        report(ErrorCode::kMalformed, path,
               "agreement for unknown language '" + lang + "'");
      }
    }

    std::optional<std::vector<std::string>> reference_slots;
    LanguageCode reference_lang;
    bool slot_mismatch = false;
    std::set<std::string> referenced;
    for (const LanguageCode& lang : catalogue_.languages) {
      auto it = option.contents.find(lang);
      if (it == option.contents.end()) {
        report(ErrorCode::kMissingTranslation, path,
               "option '" + option.id + "' has no '" + lang + "' content");
        continue;
      }
      const OptionContent& content = it->second;
      if (auto expected = expected_split(lang);
          expected && *expected != content.is_split()) {
        report(ErrorCode::kSplitMismatch, path,
               "'" + lang + "' content is " +
                   (content.is_split() ? "split" : "unsplit") +
                   " but the layout " +
                   (*expected ? "splits" : "does not split") + " it");
      }
      TokenSequence tokens = content.flattened();
      check_tokens(tokens, path, lang);
      std::vector<std::string> slots;
      for (const Token& token : tokens) {
        if (const auto* slot = std::get_if<Slot>(&token)) {
          slots.push_back(slot->sub_segment_id);
          referenced.insert(slot->sub_segment_id);
        }
      }
      std::sort(slots.begin(), slots.end());
      if (!reference_slots) {
        reference_slots = std::move(slots);
        reference_lang = lang;
      } else if (*reference_slots != slots && !slot_mismatch) {
        slot_mismatch = true;
        report(ErrorCode::kSlotMismatch, path,
               "slots in '" + lang + "' differ from slots in '" +
                   reference_lang + "'");
      }
    }
    for (const std::string& id : referenced) {
      if (catalogue_.find_sub_segment(id) == nullptr) {
        report(ErrorCode::kDanglingSlot, path,
               "slot refers to unknown sub-segment '" + id + "'");
      }
    }
  }

  void check_agreement(const Phrase& phrase, const Segment& segment) {
    std::map<LanguageCode, std::pair<Agreement, std::string>> first;
    for (const Option& option : segment.options) {
      for (const auto& [lang, agreement] : option.agreement) {
        auto [it, inserted] = first.try_emplace(lang, agreement, option.id);
        if (!inserted && it->second.first != agreement) {
          report(ErrorCode::kAgreementViolation,
                 ElementPath::segment_option(phrase.id, segment.id, option.id)
                     .str(),
                 "'" + lang + "' agreement " + agreement_string(agreement) +
                     " differs from " + agreement_string(it->second.first) +
                     " of option '" + it->second.second + "'");
        }
      }
    }
  }

  void check_sub_segments() {
    ArityFn never_split = [](const LanguageCode&) -> std::optional<bool> {
      return false;
    };
    for (const auto& [key, sub] : catalogue_.sub_segments) {
      std::string path = ElementPath::sub_segment(key).str();
      if (sub.id != key) {
        report(ErrorCode::kMalformed, path,
               "sub-segment key '" + key + "' does not match id '" + sub.id +
                   "'");
      }
      if (sub.options.empty()) {
        report(ErrorCode::kMalformed, path, "sub-segment has no options");
      }
      std::set<std::string> option_ids;
      for (const Option& option : sub.options) {
        std::string option_path =
            ElementPath::sub_segment_option(key, option.id).str();
        if (!option_ids.insert(option.id).second) {
          report(ErrorCode::kDuplicateId, option_path,
                 "duplicate option id '" + option.id + "'");
        }
        check_option(option, option_path, never_split);
      }
    }
  }

  // Cycle detection and nesting depth over the sub-segment reference graph.
  void check_references() {
    std::map<std::string, std::set<std::string>> edges;
    for (const auto& [key, sub] : catalogue_.sub_segments) {
      auto& out = edges[key];
      for (const Option& option : sub.options) {
        for (const auto& [lang, content] : option.contents) {
          for (const Token& token : content.flattened()) {
            if (const auto* slot = std::get_if<Slot>(&token)) {
              if (catalogue_.sub_segments.count(slot->sub_segment_id)) {
                out.insert(slot->sub_segment_id);
              }
            }
          }
        }
      }
    }

    enum class Mark { kNone, kActive, kDone };
    std::map<std::string, Mark> marks;
    std::map<std::string, std::optional<int>> height;
    std::set<std::string> cyclic;
    std::function<std::optional<int>(const std::string&)> visit =
        [&](const std::string& id) -> std::optional<int> {
      Mark& mark = marks[id];
      if (mark == Mark::kDone) return height[id];
      if (mark == Mark::kActive) {
        cyclic.insert(id);
        return std::nullopt;
      }
      mark = Mark::kActive;
      std::optional<int> h = 1;
      for (const std::string& next : edges[id]) {
        auto child = visit(next);
        if (!child) {
          h = std::nullopt;
        } else if (h) {
          h = std::max(*h, *child + 1);
        }
      }
      marks[id] = Mark::kDone;
      height[id] = h;
      return h;
    };
    for (const auto& [key, sub] : catalogue_.sub_segments) visit(key);

    for (const std::string& id : cyclic) {
      report(ErrorCode::kCycle, ElementPath::sub_segment(id).str(),
             "sub-segment '" + id + "' is part of a reference cycle");
    }
    for (const auto& [id, h] : height) {
      if (h && *h > max_depth_) {
        report(ErrorCode::kDepthExceeded, ElementPath::sub_segment(id).str(),
               "sub-segment '" + id + "' nests " + std::to_string(*h) +
                   " levels; at most " + std::to_string(max_depth_) +
                   " allowed");
      }
    }
    std::set<std::string> reported;
    for (const auto& [id, path] : top_level_refs_) {
      auto it = height.find(id);
      if (it == height.end() || !it->second) continue;
      if (*it->second > max_depth_ && reported.insert(path + "|" + id).second) {
        report(ErrorCode::kDepthExceeded, path,
               "slot '" + id + "' reaches nesting depth " +
                   std::to_string(*it->second));
      }
    }
  }

  const Catalogue& catalogue_;
  int max_depth_;
  std::vector<Finding> findings_;
  std::vector<std::pair<std::string, std::string>> top_level_refs_;
};

}  // namespace

std::vector<Finding> check_structure(const Catalogue& catalogue,
                                     int max_depth) {
  return StructureChecker(catalogue, max_depth).run();
}

void require_valid(const Catalogue& catalogue) {
  for (const Finding& f : check_structure(catalogue)) {
    if (f.severity == Severity::kError) {
      throw Error(f.code, f.message, f.path);
    }
  }
}

}  // namespace phrasecat
