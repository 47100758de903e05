// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/lint.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "phrasecat/error.h"
#include "phrasecat/path.h"

namespace phrasecat {

namespace {

void collect_slots(const Option& option, std::vector<std::string>& out) {
  for (const auto& [lang, content] : option.contents) {
    for (const Token& token : content.flattened()) {
      if (const auto* slot = std::get_if<Slot>(&token)) {
        out.push_back(slot->sub_segment_id);
      }
    }
  }
}

void check_unused(const Catalogue& c, std::vector<Finding>& findings) {
  std::vector<std::string> pending;
  for (const Phrase& phrase : c.phrases) {
    for (const Segment& segment : phrase.segments) {
      for (const Option& option : segment.options) {
        collect_slots(option, pending);
      }
    }
  }
  std::set<std::string> reached;
  while (!pending.empty()) {
    std::string id = std::move(pending.back());
    pending.pop_back();
    if (!reached.insert(id).second) continue;
    if (const SubSegment* sub = c.find_sub_segment(id)) {
      for (const Option& option : sub->options) collect_slots(option, pending);
    }
  }
  for (const auto& [id, sub] : c.sub_segments) {
    if (!reached.count(id)) {
      findings.push_back({ErrorCode::kUnusedSubsegment, Severity::kWarning,
                          ElementPath::sub_segment(id).str(),
                          "sub-segment '" + id +
                              "' is not reachable from any phrase"});
    }
  }
}

void check_annotations(const Catalogue& c, std::vector<Finding>& findings) {
  for (const Phrase& phrase : c.phrases) {
    for (const Segment& segment : phrase.segments) {
      if (!segment.uniform_agreement) continue;
      std::set<LanguageCode> declared;
      for (const Option& option : segment.options) {
        for (const auto& [lang, a] : option.agreement) declared.insert(lang);
      }
      for (const Option& option : segment.options) {
        for (const LanguageCode& lang : declared) {
          if (option.agreement.count(lang)) continue;
          findings.push_back(
              {ErrorCode::kUnannotated, Severity::kWarning,
               ElementPath::segment_option(phrase.id, segment.id, option.id)
                   .str(),
               "no '" + lang + "' agreement metadata in a uniform-agreement "
                               "segment"});
        }
      }
    }
  }
}

}  // namespace

std::vector<Finding> lint(const Catalogue& catalogue,
                          const LintOptions& options) {
  if (options.max_depth < 0 || options.max_depth > kMaxNestingDepth) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_depth must lie in 0.." + std::to_string(kMaxNestingDepth));
  }
  std::vector<Finding> findings = check_structure(catalogue, options.max_depth);
  check_unused(catalogue, findings);
  if (options.strict) check_annotations(catalogue, findings);

  auto key = [](const Finding& f) {
    return std::tie(f.severity, f.path, f.code, f.message);
  };
  std::sort(findings.begin(), findings.end(),
            [&](const Finding& a, const Finding& b) { return key(a) < key(b); });
  findings.erase(std::unique(findings.begin(), findings.end()), findings.end());
  return findings;
}

}  // namespace phrasecat
