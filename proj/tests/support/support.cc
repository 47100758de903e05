// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "phrasecat/codec.h"

namespace phrasecat::testing {

namespace {

const std::vector<std::string> kWords = {
    "Lawinen", "Schnee",  "größer",  "Hänge",   "avalanches", "neige",
    "pentes",  "très",    "élevé",   "valanghe", "città",     "più",
    "snow",    "slopes",  "fresh",   "wind",    "Triebschnee", "naïve",
    "Gefahr",  "danger",  "pericolo", "zone",   "Lagen",      "déjà"};

const std::vector<LanguageCode> kTargets = {"fr", "it", "en", "rm"};

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

Literal random_literal(std::mt19937_64& rng) {
  std::string text;
  std::size_t words = 1 + pick(rng, 3);
  for (std::size_t i = 0; i < words; ++i) {
    if (i) text += ' ';
    text += kWords[pick(rng, kWords.size())];
  }
  if (chance(rng, 0.1)) text += '.';
  return {text};
}

// Tokens for one option: some literals and the given slots, shuffled per
// language so slot order may differ between languages.
TokenSequence random_tokens(std::mt19937_64& rng,
                            const std::vector<std::string>& slots) {
  TokenSequence tokens;
  std::size_t literals = pick(rng, 3) + (slots.empty() ? 1 : 0);
  for (std::size_t i = 0; i < literals; ++i) tokens.push_back(random_literal(rng));
  for (const auto& s : slots) tokens.push_back(Slot{s});
  std::shuffle(tokens.begin(), tokens.end(), rng);
  return tokens;
}

struct Builder {
  std::mt19937_64& rng;
  const GeneratorOptions& opts;
  Catalogue c;
  std::vector<std::string> leaves;   // sub-segments without slots
  std::vector<std::string> middles;  // sub-segments whose options use leaves
  std::vector<std::string> unused;   // not yet referenced by any option

  Option make_option(const std::string& id,
                     const std::vector<std::string>& slots,
                     const std::map<LanguageCode, bool>& split, bool blank) {
    Option option{id, {}, {}, {}};
    for (const auto& lang : c.languages) {
      TokenSequence tokens;
      if (!blank) {
        tokens = random_tokens(rng, slots);
      }
      auto s = split.find(lang);
      if (s != split.end() && s->second) {
        std::size_t cut = tokens.empty() ? 0 : pick(rng, tokens.size() + 1);
        TokenSequence a(tokens.begin(), tokens.begin() + cut);
        TokenSequence b(tokens.begin() + cut, tokens.end());
        option.contents.emplace(lang, OptionContent::split(a, b));
      } else {
        option.contents.emplace(lang, OptionContent::whole(tokens));
      }
    }
    return option;
  }

  // Slot references for a new option, drawing first on unreferenced
  // sub-segments from `pool`.
  std::vector<std::string> choose_slots(const std::vector<std::string>& pool) {
    std::vector<std::string> slots;
    if (pool.empty()) return slots;
    for (auto it = unused.begin(); it != unused.end();) {
      if (std::find(pool.begin(), pool.end(), *it) != pool.end()) {
        slots.push_back(*it);
        it = unused.erase(it);
        break;
      }
      ++it;
    }
    if (slots.empty() && chance(rng, 0.3)) slots.push_back(pool[pick(rng, pool.size())]);
    if (!slots.empty() && chance(rng, 0.15)) slots.push_back(slots.front());
    return slots;
  }

  void make_sub_segments() {
    std::size_t count = pick(rng, opts.max_sub_segments + 1);
    for (std::size_t i = 0; i < count; ++i) {
      std::string id = "sub" + std::to_string(i);
      bool leaf = leaves.empty() || chance(rng, 0.5);
      SubSegment sub{id, "Sub " + std::to_string(i), {}};
      std::size_t options = 1 + pick(rng, 3);
      for (std::size_t o = 0; o < options; ++o) {
        std::vector<std::string> slots;
        if (!leaf) slots = choose_slots(leaves);
        sub.options.push_back(make_option("o" + std::to_string(o), slots, {}, false));
      }
      (leaf ? leaves : middles).push_back(id);
      unused.push_back(id);
      c.sub_segments.emplace(id, std::move(sub));
    }
  }

  Layout random_layout(std::size_t n, std::map<std::size_t, bool>* split) {
    std::vector<LayoutEntry> entries;
    for (std::size_t i = 0; i < n; ++i) {
      bool s = chance(rng, opts.split_probability);
      (*split)[i] = s;
      if (s) {
        entries.push_back({i, LayoutPart::kA});
        entries.push_back({i, LayoutPart::kB});
      } else {
        entries.push_back({i, LayoutPart::kWhole});
      }
    }
    std::shuffle(entries.begin(), entries.end(), rng);
    return {entries};
  }

  Phrase make_phrase(std::size_t index) {
    Phrase p;
    p.id = "P" + std::to_string(index);
    p.label = "Phrase " + std::to_string(index);
    std::size_t n = 1 + pick(rng, opts.max_segments);
    std::map<LanguageCode, std::map<std::size_t, bool>> splits;
    for (const auto& lang : c.languages) {
      if (lang == c.source_language) {
        p.layouts[lang] = Layout::identity(n);
      } else {
        p.layouts[lang] = random_layout(n, &splits[lang]);
      }
    }
    std::vector<std::string> pool = middles;
    pool.insert(pool.end(), leaves.begin(), leaves.end());
    for (std::size_t s = 0; s < n; ++s) {
      Segment seg;
      seg.id = "s" + std::to_string(s);
      seg.label = "Segment " + std::to_string(s + 1);
      std::map<LanguageCode, bool> split;
      for (auto& [lang, m] : splits) split[lang] = m[s];
      std::size_t options = 1 + pick(rng, opts.max_options);
      seg.uniform_agreement = chance(rng, 0.2);
      Agreement shared{static_cast<Gender>(pick(rng, 3)),
                       static_cast<Number>(pick(rng, 2))};
      for (std::size_t o = 0; o < options; ++o) {
        bool blank = o > 0 && chance(rng, 0.15);
        std::vector<std::string> slots;
        if (!blank) slots = choose_slots(pool);
        Option option = make_option("o" + std::to_string(o), slots, split, blank);
        if (seg.uniform_agreement) option.agreement[c.source_language] = shared;
        if (chance(rng, 0.1)) option.antecedent_hint = "Lawinen";
        seg.options.push_back(std::move(option));
      }
      p.segments.push_back(std::move(seg));
    }
    return p;
  }

  Catalogue build() {
    c.version = 1 + static_cast<std::int64_t>(pick(rng, 50));
    c.source_language = "de";
    c.languages = {"de"};
    std::vector<LanguageCode> targets = kTargets;
    std::shuffle(targets.begin(), targets.end(), rng);
    std::size_t count = 1 + pick(rng, targets.size());
    c.languages.insert(c.languages.end(), targets.begin(), targets.begin() + count);
    make_sub_segments();
    std::size_t phrases = 1 + pick(rng, opts.max_phrases);
    for (std::size_t i = 0; i < phrases; ++i) c.phrases.push_back(make_phrase(i));
    // Anything still unreferenced gets a slot in the last option of the
    // first segment, in every language.
    while (!unused.empty()) {
      std::string id = unused.back();
      unused.pop_back();
      bool referenced_elsewhere = false;
      for (const auto& sub_id : middles) {
        for (const auto& o : c.sub_segments[sub_id].options) {
          for (const auto& occ : slot_occurrences(o, c.source_language)) {
            referenced_elsewhere |= occ.sub_segment_id == id;
          }
        }
      }
      if (referenced_elsewhere) continue;
      Option& target = c.phrases.front().segments.front().options.back();
      for (auto& [lang, content] : target.contents) {
        if (auto* split = std::get_if<SplitContent>(&content.parts)) {
          split->b.push_back(Slot{id});
        } else {
          std::get<TokenSequence>(content.parts).push_back(Slot{id});
        }
      }
    }
    return std::move(c);
  }
};

void choose_sub_options(const Catalogue& catalogue, const Option& option,
                        const std::string& parent, bool top,
                        const std::string& segment_id, std::mt19937_64& rng,
                        Selection* selection) {
  for (const SlotOccurrence& occ :
       slot_occurrences(option, catalogue.source_language)) {
    std::string path = top ? slot_path(segment_id, option.id, occ)
                           : nested_slot_path(parent, option.id, occ);
    const SubSegment* sub = catalogue.find_sub_segment(occ.sub_segment_id);
    const Option& chosen = sub->options[pick(rng, sub->options.size())];
    selection->slot_choices[path] = chosen.id;
    choose_sub_options(catalogue, chosen, path, false, segment_id, rng, selection);
  }
}

// Pending decisions for the naive enumerator.
struct Pending {
  const SubSegment* sub = nullptr;  // null for a segment
  const Segment* segment = nullptr;
  std::string path;                 // slot path for sub-segments
};

void push_slots(const Catalogue& catalogue, const Option& option,
                const std::string& parent, const std::string* segment_id,
                std::vector<Pending>* pending) {
  auto occs = slot_occurrences(option, catalogue.source_language);
  for (auto it = occs.rbegin(); it != occs.rend(); ++it) {
    std::string path = segment_id ? slot_path(*segment_id, option.id, *it)
                                  : nested_slot_path(parent, option.id, *it);
    pending->push_back({catalogue.find_sub_segment(it->sub_segment_id), nullptr, path});
  }
}

void expand(const Catalogue& catalogue, std::vector<Pending> pending,
            Selection current, std::vector<Selection>* out) {
  if (pending.empty()) {
    out->push_back(std::move(current));
    return;
  }
  Pending next = pending.back();
  pending.pop_back();
  const auto& options = next.segment ? next.segment->options : next.sub->options;
  for (const Option& option : options) {
    Selection s = current;
    std::vector<Pending> rest = pending;
    if (next.segment) {
      s.choices[next.segment->id] = option.id;
      push_slots(catalogue, option, "", &next.segment->id, &rest);
    } else {
      s.slot_choices[next.path] = option.id;
      push_slots(catalogue, option, next.path, nullptr, &rest);
    }
    expand(catalogue, std::move(rest), std::move(s), out);
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fixture_path(const std::string& name) {
  return std::string(PHRASECAT_FIXTURE_DIR) + "/" + name;
}

Catalogue load_fixture(const std::string& name) {
  return parse_catalogue(read_file(fixture_path(name)));
}

Catalogue random_catalogue(std::mt19937_64& rng, const GeneratorOptions& options) {
  return Builder{rng, options, {}, {}, {}, {}}.build();
}

Selection random_selection(const Catalogue& catalogue, const Phrase& phrase,
                           std::mt19937_64& rng) {
  Selection selection{phrase.id, {}, {}};
  for (const Segment& segment : phrase.segments) {
    const Option& option = segment.options[pick(rng, segment.options.size())];
    selection.choices[segment.id] = option.id;
    choose_sub_options(catalogue, option, "", true, segment.id, rng, &selection);
  }
  return selection;
}

std::vector<Selection> naive_selections(const Catalogue& catalogue,
                                        const Phrase& phrase) {
  std::vector<Pending> pending;
  for (auto it = phrase.segments.rbegin(); it != phrase.segments.rend(); ++it) {
    pending.push_back({nullptr, &*it, ""});
  }
  std::vector<Selection> out;
  expand(catalogue, std::move(pending), Selection{phrase.id, {}, {}}, &out);
  return out;
}

Phrase flat_phrase(const std::string& id,
                   const std::vector<std::size_t>& option_counts,
                   const std::vector<LanguageCode>& languages) {
  Phrase p;
  p.id = id;
  p.label = id;
  for (std::size_t s = 0; s < option_counts.size(); ++s) {
    Segment seg;
    seg.id = "s" + std::to_string(s);
    seg.label = seg.id;
    for (std::size_t o = 0; o < option_counts[s]; ++o) {
      Option option{"o" + std::to_string(o), {}, {}, {}};
      for (const auto& lang : languages) {
        option.contents.emplace(
            lang, OptionContent::whole({Literal{lang + "w" + std::to_string(o)}}));
      }
      seg.options.push_back(std::move(option));
    }
    p.segments.push_back(std::move(seg));
  }
  for (const auto& lang : languages) {
    p.layouts[lang] = Layout::identity(option_counts.size());
  }
  return p;
}

}  // namespace phrasecat::testing
