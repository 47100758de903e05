// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/render.h"

#include "phrasecat/error.h"
#include "phrasecat/text.h"

namespace phrasecat {

std::string join_parts(std::span<const std::string> parts) {
  std::string out;
  for (const std::string& part : parts) {
    std::string trimmed = text::trim(part);
    if (trimmed.empty()) continue;
    if (!out.empty()) out += ' ';
    for (char c : trimmed) {
      if (c == ' ' && out.back() == ' ') continue;
      out += c;
    }
  }
  return out;
}

std::string capitalize_sentence(std::string_view text) {
  return text::uppercase_first(text);
}

namespace {

class Realizer {
 public:
  Realizer(const Catalogue& catalogue, const Selection& selection,
           const LanguageCode& lang)
      : catalogue_(catalogue), selection_(selection), lang_(lang) {}

  // `slot_prefix` is the path prefix for slots inside `tokens`: for a segment
  // option "<seg>/<opt>", for a sub-option "<parent slot path>/<opt>".
  std::string realize(const TokenSequence& tokens,
                      const std::string& slot_prefix,
                      std::map<std::string, std::size_t>& ordinals) const {
    std::vector<std::string> pieces;
    for (const Token& token : tokens) {
      if (const auto* literal = std::get_if<Literal>(&token)) {
        pieces.push_back(literal->text);
        continue;
      }
      const std::string& sub_id = std::get<Slot>(token).sub_segment_id;
      SlotOccurrence occ{sub_id, ordinals[sub_id]++};
      std::string path = slot_prefix + "/" + occ.key();
      const Option& chosen = chosen_sub_option(sub_id, path);
      std::map<std::string, std::size_t> inner;
      pieces.push_back(realize(chosen.contents.at(lang_).flattened(),
                               path + "/" + chosen.id, inner));
    }
    return join_parts(pieces);
  }

 private:
  const Option& chosen_sub_option(const std::string& sub_id,
                                  const std::string& path) const {
    const SubSegment* sub = catalogue_.find_sub_segment(sub_id);
    auto choice = selection_.slot_choices.find(path);
    const Option* option = nullptr;
    if (sub != nullptr && choice != selection_.slot_choices.end()) {
      option = sub->find_option(choice->second);
    }
    if (option == nullptr) {
      throw Error(ErrorCode::kIncompleteSelection,
                  "no usable choice for slot " + path, path);
    }
    return *option;
  }

  const Catalogue& catalogue_;
  const Selection& selection_;
  const LanguageCode& lang_;
};

}  // namespace

std::vector<RenderedPart> render_parts(const Catalogue& catalogue,
                                       const Selection& selection,
                                       const LanguageCode& lang) {
  if (!catalogue.has_language(lang)) {
    throw Error(ErrorCode::kUnknownLanguage, "unknown language '" + lang + "'");
  }
  ValidationReport report = validate_selection(catalogue, selection);
  if (!report.ok()) throw SelectionError(std::move(report));

  const Phrase& phrase = *catalogue.find_phrase(selection.phrase_id);
  const Layout& layout = phrase.layouts.at(lang);
  Realizer realizer(catalogue, selection, lang);

  std::vector<RenderedPart> out;
  out.reserve(layout.entries.size());
  for (const LayoutEntry& entry : layout.entries) {
    const Segment& segment = phrase.segments[entry.segment_index];
    const Option& option = *segment.find_option(selection.choices.at(segment.id));
    const OptionContent& content = option.contents.at(lang);
    const TokenSequence* tokens = content.part(entry.part);
    if (tokens == nullptr) {
      throw Error(ErrorCode::kSplitMismatch,
                  "content arity does not match the layout", segment.id);
    }
    // Slot ordinals run through part a into part b.
    std::map<std::string, std::size_t> ordinals;
    if (entry.part == LayoutPart::kB) {
      for (const SlotOccurrence& occ :
           slot_occurrences(*content.part(LayoutPart::kA))) {
        ordinals[occ.sub_segment_id] = occ.ordinal + 1;
      }
    }
    out.push_back({entry.segment_index, entry.part,
                   realizer.realize(*tokens, segment.id + "/" + option.id,
                                    ordinals)});
  }
  return out;
}

RenderedSentence render(const Catalogue& catalogue, const Selection& selection,
                        const LanguageCode& lang) {
  std::vector<std::string> texts;
  for (RenderedPart& part : render_parts(catalogue, selection, lang)) {
    texts.push_back(std::move(part.text));
  }
  return {lang, capitalize_sentence(join_parts(texts))};
}

std::map<LanguageCode, RenderedSentence> render_all(const Catalogue& catalogue,
                                                    const Selection& selection) {
  std::map<LanguageCode, RenderedSentence> out;
  for (const LanguageCode& lang : catalogue.languages) {
    out.emplace(lang, render(catalogue, selection, lang));
  }
  return out;
}

}  // namespace phrasecat
