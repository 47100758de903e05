// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/path.h"

#include <algorithm>
#include <vector>

namespace phrasecat {

namespace {

std::vector<std::string_view> split_components(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 1;
  while (pos <= text.size()) {
    std::size_t next = text.find('/', pos);
    if (next == std::string_view::npos) next = text.size();
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

template <typename CatalogueT, typename OptionT>
OptionT* find_option_impl(CatalogueT& catalogue, const ElementPath& path) {
  using Kind = ElementPath::Kind;
  if (path.kind == Kind::kSegmentOption) {
    for (auto& phrase : catalogue.phrases) {
      if (phrase.id != path.phrase_id) continue;
      for (auto& segment : phrase.segments) {
        if (segment.id != path.segment_id) continue;
        for (auto& option : segment.options) {
          if (option.id == path.option_id) return &option;
        }
      }
    }
  } else if (path.kind == Kind::kSubSegmentOption) {
    auto it = catalogue.sub_segments.find(path.sub_segment_id);
    if (it == catalogue.sub_segments.end()) return nullptr;
    for (auto& option : it->second.options) {
      if (option.id == path.option_id) return &option;
    }
  }
  return nullptr;
}

}  // namespace

ElementPath ElementPath::phrase(std::string phrase_id) {
  ElementPath p;
  p.kind = Kind::kPhrase;
  p.phrase_id = std::move(phrase_id);
  return p;
}

ElementPath ElementPath::layout(std::string phrase_id, LanguageCode lang) {
  ElementPath p = phrase(std::move(phrase_id));
  p.kind = Kind::kLayout;
  p.language = std::move(lang);
  return p;
}

ElementPath ElementPath::segment(std::string phrase_id,
                                 std::string segment_id) {
  ElementPath p = phrase(std::move(phrase_id));
  p.kind = Kind::kSegment;
  p.segment_id = std::move(segment_id);
  return p;
}

ElementPath ElementPath::segment_option(std::string phrase_id,
                                        std::string segment_id,
                                        std::string option_id) {
  ElementPath p = segment(std::move(phrase_id), std::move(segment_id));
  p.kind = Kind::kSegmentOption;
  p.option_id = std::move(option_id);
  return p;
}

ElementPath ElementPath::sub_segment(std::string sub_segment_id) {
  ElementPath p;
  p.kind = Kind::kSubSegment;
  p.sub_segment_id = std::move(sub_segment_id);
  return p;
}

ElementPath ElementPath::sub_segment_option(std::string sub_segment_id,
                                            std::string option_id) {
  ElementPath p = sub_segment(std::move(sub_segment_id));
  p.kind = Kind::kSubSegmentOption;
  p.option_id = std::move(option_id);
  return p;
}

std::string ElementPath::str() const {
  switch (kind) {
    case Kind::kRoot: return "/";
    case Kind::kPhrase: return "/phrases/" + phrase_id;
    case Kind::kLayout: return "/phrases/" + phrase_id + "/layouts/" + language;
    case Kind::kSegment:
      return "/phrases/" + phrase_id + "/segments/" + segment_id;
    case Kind::kSegmentOption:
      return "/phrases/" + phrase_id + "/segments/" + segment_id +
             "/options/" + option_id;
    case Kind::kSubSegment: return "/subSegments/" + sub_segment_id;
    case Kind::kSubSegmentOption:
      return "/subSegments/" + sub_segment_id + "/options/" + option_id;
  }
  return "/";
}

std::optional<ElementPath> ElementPath::parse(std::string_view text) {
  if (text.empty() || text.front() != '/') return std::nullopt;
  if (text == "/") return root();
  auto parts = split_components(text);
  for (auto part : parts) {
    if (part.empty()) return std::nullopt;
  }
  if (parts[0] == "phrases" && parts.size() >= 2) {
    std::string pid(parts[1]);
    if (parts.size() == 2) return phrase(pid);
    if (parts.size() == 4 && parts[2] == "layouts") {
      return layout(pid, std::string(parts[3]));
    }
    if (parts.size() == 4 && parts[2] == "segments") {
      return segment(pid, std::string(parts[3]));
    }
    if (parts.size() == 6 && parts[2] == "segments" && parts[4] == "options") {
      return segment_option(pid, std::string(parts[3]), std::string(parts[5]));
    }
    return std::nullopt;
  }
  if (parts[0] == "subSegments" && parts.size() >= 2) {
    std::string sid(parts[1]);
    if (parts.size() == 2) return sub_segment(sid);
    if (parts.size() == 4 && parts[2] == "options") {
      return sub_segment_option(sid, std::string(parts[3]));
    }
  }
  return std::nullopt;
}

bool path_resolves(const Catalogue& catalogue, std::string_view text) {
  auto path = ElementPath::parse(text);
  if (!path) return false;
  using Kind = ElementPath::Kind;
  switch (path->kind) {
    case Kind::kRoot: return true;
    case Kind::kPhrase: return catalogue.find_phrase(path->phrase_id) != nullptr;
    case Kind::kLayout: {
      const Phrase* phrase = catalogue.find_phrase(path->phrase_id);
      return phrase && phrase->layouts.count(path->language) > 0;
    }
    case Kind::kSegment: {
      const Phrase* phrase = catalogue.find_phrase(path->phrase_id);
      return phrase && phrase->find_segment(path->segment_id) != nullptr;
    }
    case Kind::kSubSegment:
      return catalogue.find_sub_segment(path->sub_segment_id) != nullptr;
    case Kind::kSegmentOption:
    case Kind::kSubSegmentOption:
      return find_option(catalogue, *path) != nullptr;
  }
  return false;
}

const Option* find_option(const Catalogue& catalogue, const ElementPath& path) {
  return find_option_impl<const Catalogue, const Option>(catalogue, path);
}

Option* find_option(Catalogue& catalogue, const ElementPath& path) {
  return find_option_impl<Catalogue, Option>(catalogue, path);
}

}  // namespace phrasecat
