// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/codec.h"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "phrasecat/error.h"
#include "phrasecat/finding.h"
#include "phrasecat/text.h"

namespace phrasecat {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kMalformed, where + ": " + what, where);
}

// Rejects unknown members and checks required ones are present.
void expect_object(const json& j, const std::string& where,
                   std::initializer_list<std::string_view> required,
                   std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) malformed(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) malformed(where, "unknown field '" + key + "'");
  }
  for (std::string_view key : required) {
    if (!j.contains(key)) {
      malformed(where, "missing field '" + std::string(key) + "'");
    }
  }
}

const std::string& get_string(const json& j, const std::string& where) {
  if (!j.is_string()) malformed(where, "expected a string");
  return j.get_ref<const std::string&>();
}

std::string get_identifier(const json& j, const std::string& where) {
  const std::string& id = get_string(j, where);
  if (!is_valid_identifier(id)) {
    malformed(where, "invalid identifier '" + id + "'");
  }
  return id;
}

const json& get_array(const json& j, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array");
  return j;
}

class CatalogueDecoder {
 public:
  Catalogue decode(const json& doc) {
    expect_object(doc, "/",
                  {"formatVersion", "version", "source", "languages",
                   "subSegments", "phrases"});
    if (!doc["formatVersion"].is_number_integer() ||
        doc["formatVersion"].get<int64_t>() != kCatalogueFormatVersion) {
      malformed("/formatVersion", "unsupported format version");
    }
    if (!doc["version"].is_number_integer() ||
        doc["version"].get<int64_t>() < 0) {
      malformed("/version", "expected a nonnegative integer");
    }
    Catalogue c;
    c.version = doc["version"].get<int64_t>();
    c.source_language = get_string(doc["source"], "/source");

    const json& langs = get_array(doc["languages"], "/languages");
    std::set<LanguageCode> seen;
    for (std::size_t i = 0; i < langs.size(); ++i) {
      std::string where = "/languages/" + std::to_string(i);
      LanguageCode lang = get_identifier(langs[i], where);
      if (!seen.insert(lang).second) malformed(where, "duplicate language");
      c.languages.push_back(lang);
    }
    if (c.languages.empty()) malformed("/languages", "no languages");
    if (!c.has_language(c.source_language)) {
      malformed("/source", "source language is not in the language list");
    }
    languages_ = &c.languages;

    const json& subs = doc["subSegments"];
    if (!subs.is_object()) malformed("/subSegments", "expected an object");
    for (auto it = subs.begin(); it != subs.end(); ++it) {
      std::string where = "/subSegments/" + it.key();
      if (!is_valid_identifier(it.key())) {
        malformed(where, "invalid identifier '" + it.key() + "'");
      }
      expect_object(it.value(), where, {"label", "options"});
      SubSegment sub;
      sub.id = it.key();
      sub.label = get_string(it.value()["label"], where + "/label");
      sub.options = decode_options(it.value()["options"], where + "/options");
      c.sub_segments.emplace(sub.id, std::move(sub));
    }

    const json& phrases = get_array(doc["phrases"], "/phrases");
    for (std::size_t i = 0; i < phrases.size(); ++i) {
      c.phrases.push_back(
          decode_phrase(phrases[i], "/phrases/" + std::to_string(i)));
    }
    return c;
  }

 private:
  void check_language(const std::string& lang, const std::string& where) {
    if (std::find(languages_->begin(), languages_->end(), lang) ==
        languages_->end()) {
      malformed(where, "language '" + lang + "' is not in the language list");
    }
  }

  Phrase decode_phrase(const json& j, const std::string& where) {
    expect_object(j, where, {"id", "label", "segments", "layouts"});
    Phrase p;
    p.id = get_identifier(j["id"], where + "/id");
    p.label = get_string(j["label"], where + "/label");
    const json& segments = get_array(j["segments"], where + "/segments");
    for (std::size_t i = 0; i < segments.size(); ++i) {
      std::string sw = where + "/segments/" + std::to_string(i);
      const json& s = segments[i];
      expect_object(s, sw, {"id", "label", "options"}, {"uniformAgreement"});
      Segment segment;
      segment.id = get_identifier(s["id"], sw + "/id");
      segment.label = get_string(s["label"], sw + "/label");
      if (s.contains("uniformAgreement")) {
        if (!s["uniformAgreement"].is_boolean()) {
          malformed(sw + "/uniformAgreement", "expected a boolean");
        }
        segment.uniform_agreement = s["uniformAgreement"].get<bool>();
      }
      segment.options = decode_options(s["options"], sw + "/options");
      p.segments.push_back(std::move(segment));
    }
    const json& layouts = j["layouts"];
    if (!layouts.is_object()) malformed(where + "/layouts", "expected an object");
    for (auto it = layouts.begin(); it != layouts.end(); ++it) {
      std::string lw = where + "/layouts/" + it.key();
      check_language(it.key(), lw);
      Layout layout;
      const json& entries = get_array(it.value(), lw);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        std::string ew = lw + "/" + std::to_string(i);
        try {
          layout.entries.push_back(
              parse_layout_entry(get_string(entries[i], ew)));
        } catch (const Error& e) {
          malformed(ew, e.what());
        }
      }
      p.layouts.emplace(it.key(), std::move(layout));
    }
    return p;
  }

  std::vector<Option> decode_options(const json& j, const std::string& where) {
    get_array(j, where);
    if (j.empty()) malformed(where, "at least one option is required");
    std::vector<Option> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(decode_option(j[i], where + "/" + std::to_string(i)));
    }
    return out;
  }

  Option decode_option(const json& j, const std::string& where) {
    expect_object(j, where, {"id", "contents"},
                  {"antecedentHint", "agreement"});
    Option option;
    option.id = get_identifier(j["id"], where + "/id");
    const json& contents = j["contents"];
    if (!contents.is_object()) {
      malformed(where + "/contents", "expected an object");
    }
    for (auto it = contents.begin(); it != contents.end(); ++it) {
      std::string cw = where + "/contents/" + it.key();
      check_language(it.key(), cw);
      option.contents.emplace(it.key(), decode_content(it.value(), cw));
    }
    if (j.contains("antecedentHint")) {
      std::string hint = text::trim(
          text::nfc(get_string(j["antecedentHint"], where + "/antecedentHint")));
      if (hint.empty()) malformed(where + "/antecedentHint", "empty hint");
      option.antecedent_hint = std::move(hint);
    }
    if (j.contains("agreement")) {
      const json& agreement = j["agreement"];
      if (!agreement.is_object()) {
        malformed(where + "/agreement", "expected an object");
      }
      for (auto it = agreement.begin(); it != agreement.end(); ++it) {
        std::string aw = where + "/agreement/" + it.key();
        check_language(it.key(), aw);
        expect_object(it.value(), aw, {"gender", "number"});
        const std::string& g = get_string(it.value()["gender"], aw + "/gender");
        const std::string& n = get_string(it.value()["number"], aw + "/number");
        Agreement a{};
        if (g == "m") a.gender = Gender::kMasculine;
        else if (g == "f") a.gender = Gender::kFeminine;
        else if (g == "n") a.gender = Gender::kNeuter;
        else malformed(aw + "/gender", "expected m, f or n");
        if (n == "sg") a.number = Number::kSingular;
        else if (n == "pl") a.number = Number::kPlural;
        else malformed(aw + "/number", "expected sg or pl");
        option.agreement.emplace(it.key(), a);
      }
    }
    return option;
  }

  OptionContent decode_content(const json& j, const std::string& where) {
    if (j.is_array()) return OptionContent::whole(decode_tokens(j, where));
    expect_object(j, where, {"a", "b"});
    return OptionContent::split(decode_tokens(j["a"], where + "/a"),
                                decode_tokens(j["b"], where + "/b"));
  }

  TokenSequence decode_tokens(const json& j, const std::string& where) {
    get_array(j, where);
    TokenSequence tokens;
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string tw = where + "/" + std::to_string(i);
      expect_object(j[i], tw, {"t", "v"});
      const std::string& kind = get_string(j[i]["t"], tw + "/t");
      if (kind == "lit") {
        std::string value = text::trim(text::nfc(get_string(j[i]["v"], tw + "/v")));
        if (value.empty()) {
          // The single empty literal is an alternative spelling of blank.
          if (j.size() == 1) return {};
          malformed(tw, "empty literal inside a nonempty sequence");
        }
        tokens.push_back(Literal{std::move(value)});
      } else if (kind == "slot") {
        tokens.push_back(Slot{get_identifier(j[i]["v"], tw + "/v")});
      } else {
        malformed(tw + "/t", "expected 'lit' or 'slot'");
      }
    }
    return tokens;
  }

  const std::vector<LanguageCode>* languages_ = nullptr;
};

json tokens_to_json(const TokenSequence& tokens) {
  json out = json::array();
  for (const Token& token : tokens) {
    if (const auto* literal = std::get_if<Literal>(&token)) {
      out.push_back({{"t", "lit"}, {"v", literal->text}});
    } else {
      out.push_back({{"t", "slot"}, {"v", std::get<Slot>(token).sub_segment_id}});
    }
  }
  return out;
}

json options_to_json(const std::vector<Option>& options) {
  json out = json::array();
  for (const Option& option : options) out.push_back(option_to_json(option));
  return out;
}

json string_map(const std::map<std::string, std::string>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

}  // namespace

std::string layout_entry_to_string(const LayoutEntry& entry) {
  std::string out = std::to_string(entry.segment_index + 1);
  if (entry.part == LayoutPart::kA) out += 'a';
  if (entry.part == LayoutPart::kB) out += 'b';
  return out;
}

LayoutEntry parse_layout_entry(std::string_view text) {
  LayoutEntry entry;
  std::string_view digits = text;
  if (!text.empty() && (text.back() == 'a' || text.back() == 'b')) {
    entry.part = text.back() == 'a' ? LayoutPart::kA : LayoutPart::kB;
    digits.remove_suffix(1);
  }
  if (digits.empty() || digits.size() > 3 || digits.front() == '0' ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::kMalformed,
                "bad layout entry '" + std::string(text) + "'");
  }
  entry.segment_index = std::stoul(std::string(digits)) - 1;
  return entry;
}

json option_to_json(const Option& option) {
  json out = {{"id", option.id}};
  json contents = json::object();
  for (const auto& [lang, content] : option.contents) {
    if (const auto* whole = std::get_if<TokenSequence>(&content.parts)) {
      contents[lang] = tokens_to_json(*whole);
    } else {
      const auto& split = std::get<SplitContent>(content.parts);
      contents[lang] = {{"a", tokens_to_json(split.a)},
                        {"b", tokens_to_json(split.b)}};
    }
  }
  out["contents"] = std::move(contents);
  if (option.antecedent_hint) out["antecedentHint"] = *option.antecedent_hint;
  if (!option.agreement.empty()) {
    json agreement = json::object();
    for (const auto& [lang, a] : option.agreement) {
      agreement[lang] = {{"gender", to_string(a.gender)},
                         {"number", to_string(a.number)}};
    }
    out["agreement"] = std::move(agreement);
  }
  return out;
}

json phrase_to_json(const Phrase& phrase) {
  json segments = json::array();
  for (const Segment& segment : phrase.segments) {
    json s = {{"id", segment.id},
              {"label", segment.label},
              {"options", options_to_json(segment.options)}};
    if (segment.uniform_agreement) s["uniformAgreement"] = true;
    segments.push_back(std::move(s));
  }
  json layouts = json::object();
  for (const auto& [lang, layout] : phrase.layouts) {
    json entries = json::array();
    for (const LayoutEntry& e : layout.entries) {
      entries.push_back(layout_entry_to_string(e));
    }
    layouts[lang] = std::move(entries);
  }
  return {{"id", phrase.id},
          {"label", phrase.label},
          {"segments", std::move(segments)},
          {"layouts", std::move(layouts)}};
}

json catalogue_to_json(const Catalogue& c) {
  json subs = json::object();
  for (const auto& [id, sub] : c.sub_segments) {
    subs[id] = {{"label", sub.label}, {"options", options_to_json(sub.options)}};
  }
  json phrases = json::array();
  for (const Phrase& p : c.phrases) phrases.push_back(phrase_to_json(p));
  return {{"formatVersion", kCatalogueFormatVersion},
          {"version", c.version},
          {"source", c.source_language},
          {"languages", c.languages},
          {"subSegments", std::move(subs)},
          {"phrases", std::move(phrases)}};
}

Catalogue decode_catalogue(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("invalid JSON: ") + e.what(),
                "/");
  }
  return CatalogueDecoder().decode(doc);
}

Catalogue parse_catalogue(std::string_view bytes) {
  Catalogue c = decode_catalogue(bytes);
  require_valid(c);
  return c;
}

std::string serialize_catalogue(const Catalogue& catalogue) {
  return catalogue_to_json(catalogue).dump(2) + "\n";
}

Selection selection_from_json(const json& doc) {
  expect_object(doc, "/", {"phraseId", "choices"}, {"slotChoices"});
  Selection s;
  s.phrase_id = get_string(doc["phraseId"], "/phraseId");
  auto read_map = [](const json& j, const std::string& where) {
    if (!j.is_object()) malformed(where, "expected an object");
    std::map<std::string, std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out.emplace(it.key(), get_string(it.value(), where + "/" + it.key()));
    }
    return out;
  };
  s.choices = read_map(doc["choices"], "/choices");
  if (doc.contains("slotChoices")) {
    s.slot_choices = read_map(doc["slotChoices"], "/slotChoices");
  }
  return s;
}

json selection_to_json(const Selection& s) {
  return {{"phraseId", s.phrase_id},
          {"choices", string_map(s.choices)},
          {"slotChoices", string_map(s.slot_choices)}};
}

json finding_to_json(const Finding& f) {
  return {{"code", to_string(f.code)},
          {"severity", to_string(f.severity)},
          {"path", f.path},
          {"message", f.message}};
}

json validation_report_to_json(const ValidationReport& report) {
  json issues = json::array();
  for (const auto& issue : report.issues) {
    issues.push_back({{"code", to_string(issue.code)},
                      {"path", issue.path},
                      {"message", issue.message}});
  }
  return {{"ok", report.ok()}, {"issues", issues}};
}

}  // namespace phrasecat
