// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "phrasecat/bulletin.h"
#include "phrasecat/text.h"
#include "support.h"

using namespace phrasecat;
using phrasecat::testing::load_fixture;
namespace fs = std::filesystem;

namespace {

Selection plain_selection() {
  return {"P-AVAL",
          {{"subject", "avalanches"},
           {"modal", "can"},
           {"where", "none"},
           {"frequency", "none"},
           {"outcome", "large"}},
          {}};
}

JokerEntry joker(const std::string& de) {
  return {{{"de", de}, {"fr", "Prudence dans les ravines."},
           {"it", "Prudenza nei canaloni."}, {"en", "Caution in gullies."}}};
}

Bulletin sample_bulletin(const std::string& issued_at) {
  Bulletin b;
  b.issued_at = issued_at;
  b.edition = Edition::kEvening;
  b.catalogue_version = 1;
  b.descriptions.push_back({"north", "North", {PhraseEntry{plain_selection()}}});
  b.descriptions.push_back(
      {"south", "South", {PhraseEntry{plain_selection()}, joker("Vorsicht in Gräben.")}});
  return b;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "phrasecat-XXXXXX").string();
    path = ::mkdtemp(pattern.data());
  }
  ~TempDir() { fs::remove_all(path); }
};

// A joker-only description whose German text has exactly `n` characters.
DangerDescription of_length(std::size_t n) {
  std::string text;
  for (std::size_t i = 0; i + 1 < n; ++i) text += i % 2 ? "ä" : "x";
  text += ".";
  return {"", "len", {joker(text)}};
}

}  // namespace

TEST_SUITE("bulletin") {

TEST_CASE("descriptions join sentences with single spaces") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  DangerDescription d{"", "x", {PhraseEntry{plain_selection()}}};
  CHECK(render_description(c, d, "en") == "The avalanches can reach large size.");
  d.entries.push_back(joker("Vorsicht in Gräben."));
  CHECK(render_description(c, d, "de") ==
        "Die Lawinen können gross werden. Vorsicht in Gräben.");
  CHECK(render_description(c, DangerDescription{}, "de").empty());
}

TEST_CASE("joker text passes through byte for byte") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  std::string odd = "Achtung:  zwei  Leerzeichen\xE2\x80\xAF!";
  DangerDescription d{"", "x", {joker(odd)}};
  CHECK(render_description(c, d, "de") == odd);
}

TEST_CASE("a bulletin renders to one document per language") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  auto docs = render_bulletin(c, sample_bulletin("2026-01-10T17:00:00Z"));
  CHECK(docs.size() == 4);
  CHECK(docs.at("de") ==
        "Die Lawinen können gross werden.\n\n"
        "Die Lawinen können gross werden. Vorsicht in Gräben.");
  CHECK(docs.at("en") ==
        "The avalanches can reach large size.\n\n"
        "The avalanches can reach large size. Caution in gullies.");
}

TEST_CASE("every language has the same sentences in the same order") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    DangerDescription d;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t k = 0; k < n; ++k) {
      if (rng() % 4 == 0) {
        d.entries.push_back(joker("Satz " + std::to_string(k) + "."));
      } else {
        d.entries.push_back(PhraseEntry{
            phrasecat::testing::random_selection(c, c.phrases[0], rng)});
      }
    }
    std::size_t expected = render_sentences(c, d, "de").size();
    CHECK(expected == n);
    for (const auto& lang : c.languages) {
      CHECK(render_sentences(c, d, lang).size() == expected);
    }
  }
}

TEST_CASE("a joker missing french aborts the whole bulletin") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  Bulletin b = sample_bulletin("2026-01-10T17:00:00Z");
  std::get<JokerEntry>(b.descriptions[1].entries[1]).texts.erase("fr");
  try {
    render_bulletin(c, b);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingTranslation);
    CHECK(e.path() == "/descriptions/1/entries/1");
  }
  auto issues = validate_bulletin(c, b);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].path == "/descriptions/1/entries/1");
}

TEST_CASE("validation reports incomplete selections and empty bulletins") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  Bulletin b = sample_bulletin("2026-01-10T17:00:00Z");
  std::get<PhraseEntry>(b.descriptions[0].entries[0]).selection.choices.erase("modal");
  auto issues = validate_bulletin(c, b);
  REQUIRE_FALSE(issues.empty());
  CHECK(issues[0].path == "/descriptions/0/entries/0");
  CHECK_THROWS_AS(render_bulletin(c, b), Error);
  b.descriptions.clear();
  CHECK_FALSE(validate_bulletin(c, b).empty());
}

TEST_CASE("survey eligibility needs strictly more than 100 characters") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  CHECK(text::code_point_count(render_description(c, of_length(100), "de")) == 100);
  CHECK_FALSE(eligible_for_survey(c, of_length(34)));
  CHECK_FALSE(eligible_for_survey(c, of_length(100)));
  CHECK(eligible_for_survey(c, of_length(101)));
  DangerDescription row{"", "x", {PhraseEntry{plain_selection()}}};
  CHECK_FALSE(eligible_for_survey(c, row));
}

TEST_CASE("bulletins round trip through json") {
  Bulletin b = sample_bulletin("2026-01-10T17:00:00+01:00");
  b.id = "b1";
  CHECK(bulletin_from_json(bulletin_to_json(b)) == b);
  auto doc = bulletin_to_json(b);
  doc["edition"] = "noon";
  CHECK_THROWS_AS(bulletin_from_json(doc), Error);
  doc = bulletin_to_json(b);
  doc["issuedAt"] = "yesterday";
  CHECK_THROWS_AS(bulletin_from_json(doc), Error);
  doc = bulletin_to_json(b);
  doc["descriptions"][0]["entries"][0]["t"] = "image";
  CHECK_THROWS_AS(bulletin_from_json(doc), Error);
}

TEST_CASE("timestamps") {
  CHECK(parse_iso8601("1970-01-01T00:00:00Z") == 0);
  CHECK(parse_iso8601("2026-01-10T17:00:00+01:00") ==
        parse_iso8601("2026-01-10T16:00:00Z"));
  CHECK(parse_iso8601("2024-02-29T12:00:00.250Z"));
  CHECK_FALSE(parse_iso8601("2023-02-29T12:00:00Z"));
  CHECK_FALSE(parse_iso8601("2026-01-10 17:00:00Z"));
  CHECK_FALSE(parse_iso8601("2026-01-10T17:00:00"));
  CHECK_FALSE(parse_iso8601("2026-13-10T17:00:00Z"));
}

TEST_CASE("the store persists, loads and lists chronologically") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  TempDir dir;
  BulletinStore store(dir.path / "bulletins");
  Bulletin later = sample_bulletin("2026-01-11T08:00:00Z");
  Bulletin earlier = sample_bulletin("2026-01-10T17:00:00Z");
  std::string later_id = store.store(c, later);
  std::string earlier_id = store.store(c, earlier);
  CHECK(later_id == "20260111080000-evening");
  CHECK(store.store(c, earlier) == "20260110170000-evening-2");

  later.id = later_id;
  CHECK(store.load(later_id) == later);
  auto listed = store.list();
  REQUIRE(listed.size() == 3);
  CHECK(listed[0].id == earlier_id);
  CHECK(listed[1].id == "20260110170000-evening-2");
  CHECK(listed[2].id == later_id);

  Bulletin named = earlier;
  named.id = "custom";
  CHECK(store.store(c, named) == "custom");
  named.descriptions.pop_back();
  store.store(c, named);
  CHECK(store.load("custom") == named);
  CHECK(store.list().size() == 4);
  for (const auto& entry : fs::directory_iterator(store.directory())) {
    CHECK(entry.path().extension() == ".json");
  }
}

TEST_CASE("store failures are distinct") {
  Catalogue c = load_fixture("avalanche_phrase.json");
  TempDir dir;
  BulletinStore store(dir.path / "b");
  auto code_of = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kMalformed;
  };
  CHECK(code_of([&] { store.load("missing"); }) == ErrorCode::kNotFound);
  CHECK(code_of([&] { store.load("../etc/passwd"); }) == ErrorCode::kNotFound);

  Bulletin bad = sample_bulletin("2026-01-10T17:00:00Z");
  std::get<JokerEntry>(bad.descriptions[1].entries[1]).texts["it"] = "";
  CHECK(code_of([&] { store.store(c, bad); }) == ErrorCode::kValidation);
  Bulletin bad_id = sample_bulletin("2026-01-10T17:00:00Z");
  bad_id.id = "a/b";
  CHECK(code_of([&] { store.store(c, bad_id); }) == ErrorCode::kValidation);

  fs::remove_all(store.directory());
  { std::ofstream(store.directory()) << "not a directory"; }
  CHECK(code_of([&] { store.store(c, sample_bulletin("2026-01-10T17:00:00Z")); }) ==
        ErrorCode::kIoError);
}

}  // TEST_SUITE
