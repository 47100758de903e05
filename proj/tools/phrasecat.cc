// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "phrasecat/bulletin.h"
#include "phrasecat/codec.h"
#include "phrasecat/evalstats/report.h"
#include "phrasecat/evalstats/survey.h"
#include "phrasecat/lint.h"
#include "phrasecat/render.h"
#include "phrasecat/search.h"
#include "phrasecat/service.h"

namespace {

using namespace phrasecat;
using nlohmann::json;

constexpr int kExitFindings = 1;
constexpr int kExitFailure = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json slurp_json(const std::string& path) {
  json doc = json::parse(slurp(path), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::kMalformed, path + " is not JSON");
  return doc;
}

void print_json(const json& doc) {
  std::cout << doc.dump(2, ' ', false, json::error_handler_t::replace) << "\n";
}

int run_lint(const std::string& path, bool strict, const std::string& format) {
  Catalogue catalogue = decode_catalogue(slurp(path));
  auto findings = lint(catalogue, {.strict = strict});
  if (format == "json") {
    json list = json::array();
    for (const auto& f : findings) list.push_back(finding_to_json(f));
    print_json(list);
  } else {
    for (const auto& f : findings) {
      std::cout << to_string(f.severity) << " " << to_string(f.code) << " " << f.path
                << ": " << f.message << "\n";
    }
  }
  return has_errors(findings) ? kExitFindings : 0;
}

int run_count(const std::string& path) {
  Catalogue catalogue = parse_catalogue(slurp(path));
  for (const auto& phrase : catalogue.phrases) {
    std::cout << phrase.id << " " << count_selections(catalogue, phrase.id).str() << "\n";
  }
  std::cout << "total " << count_selections(catalogue).str() << "\n";
  return 0;
}

int run_render(const std::string& path, const std::string& selection_path,
               const std::string& lang) {
  Catalogue catalogue = parse_catalogue(slurp(path));
  Selection selection = selection_from_json(slurp_json(selection_path));
  try {
    if (!lang.empty()) {
      std::cout << render(catalogue, selection, lang).text << "\n";
      return 0;
    }
    for (const auto& [code, sentence] : render_all(catalogue, selection)) {
      std::cout << code << "\t" << sentence.text << "\n";
    }
  } catch (const SelectionError& e) {
    for (const auto& issue : e.report().issues) {
      std::cerr << to_string(issue.code) << " " << issue.path << ": " << issue.message
                << "\n";
    }
    return kExitFindings;
  }
  return 0;
}

int run_search(const std::string& path, std::string lang, std::size_t k,
               const std::string& query) {
  Catalogue catalogue = parse_catalogue(slurp(path));
  if (lang.empty()) lang = catalogue.source_language;
  Index index = build_index(catalogue, lang);
  for (const auto& hit : search(index, catalogue, query, k)) {
    std::cout << hit.phrase_id << "\t" << catalogue.find_phrase(hit.phrase_id)->label
              << "\n";
  }
  return 0;
}

int run_enumerate(const std::string& path, const std::string& phrase_id,
                  std::size_t limit, const std::string& cursor) {
  Catalogue catalogue = parse_catalogue(slurp(path));
  std::optional<std::string_view> from;
  if (!cursor.empty()) from = cursor;
  SelectionPage page = enumerate_selections(catalogue, phrase_id, limit, from);
  json selections = json::array();
  for (const auto& s : page.selections) selections.push_back(selection_to_json(s));
  json out = {{"selections", selections}};
  out["nextCursor"] = page.next_cursor ? json(*page.next_cursor) : json(nullptr);
  print_json(out);
  return 0;
}

int run_eval(const std::string& in, std::uint64_t seed, const std::string& format,
             bool yates) {
  evalstats::SurveyData data = evalstats::ingest_survey_csv(slurp(in));
  for (const auto& e : data.errors) {
    std::cerr << in << ":" << e.line << ": " << e.code << ": " << e.message << "\n";
  }
  evalstats::SummaryOptions options;
  options.seed = seed;
  options.yates = yates;
  evalstats::SurveyReport report = evalstats::summarize(data.responses, options);
  if (format == "json") {
    json doc = evalstats::report_to_json(report);
    doc["rowErrors"] = data.errors.size();
    print_json(doc);
  } else {
    std::cout << evalstats::format_text(report);
  }
  return 0;
}

int run_bulletin_render(const std::string& path, const std::string& bulletin_path,
                        const std::string& lang) {
  Catalogue catalogue = parse_catalogue(slurp(path));
  Bulletin bulletin = bulletin_from_json(slurp_json(bulletin_path));
  auto documents = render_bulletin(catalogue, bulletin);
  if (!lang.empty()) {
    auto it = documents.find(lang);
    if (it == documents.end()) throw Error(ErrorCode::kUnknownLanguage, "unknown language " + lang);
    std::cout << it->second << "\n";
    return 0;
  }
  for (const auto& [code, text] : documents) {
    std::cout << "[" << code << "]\n" << text << "\n\n";
  }
  return 0;
}

HttpServer* active_server = nullptr;

int run_serve(ServiceConfig config, const std::string& host, int port) {
  CatalogueService service(std::move(config));
  HttpServer server(service);
  int bound = server.bind(host, port);
  std::cerr << "serving catalogue version " << service.catalogue_version() << " on "
            << host << ":" << bound << "\n";
  active_server = &server;
  auto on_signal = [](int) {
    if (active_server) active_server->stop();
  };
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  active_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phrase catalogue tools"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string catalogue_path;
  std::string format = "text";
  std::string lang;

  auto* lint_cmd = app.add_subcommand("lint", "Check a catalogue");
  bool strict = false;
  lint_cmd->add_option("catalogue", catalogue_path)->required()->check(CLI::ExistingFile);
  lint_cmd->add_flag("--strict", strict, "Also report unannotated options");
  lint_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  lint_cmd->callback([&] { action = [&] { return run_lint(catalogue_path, strict, format); }; });

  auto* count_cmd = app.add_subcommand("count", "Count complete selections");
  count_cmd->add_option("catalogue", catalogue_path)->required()->check(CLI::ExistingFile);
  count_cmd->callback([&] { action = [&] { return run_count(catalogue_path); }; });

  auto* render_cmd = app.add_subcommand("render", "Render a selection");
  std::string selection_path;
  render_cmd->add_option("catalogue", catalogue_path)->required()->check(CLI::ExistingFile);
  render_cmd->add_option("selection", selection_path, "Selection JSON document")
      ->required()
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--lang", lang, "Single language; all languages by default");
  render_cmd->callback(
      [&] { action = [&] { return run_render(catalogue_path, selection_path, lang); }; });

  auto* search_cmd = app.add_subcommand("search", "Rank phrases for a query");
  std::string query;
  std::size_t k = 10;
  search_cmd->add_option("catalogue", catalogue_path)->required()->check(CLI::ExistingFile);
  search_cmd->add_option("query", query)->required();
  search_cmd->add_option("--lang", lang, "Index language; source language by default");
  search_cmd->add_option("--k", k, "Maximum number of hits")->check(CLI::PositiveNumber);
  search_cmd->callback(
      [&] { action = [&] { return run_search(catalogue_path, lang, k, query); }; });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List complete selections");
  std::string phrase_id, cursor;
  std::size_t limit = 100;
  enumerate_cmd->add_option("catalogue", catalogue_path)->required()->check(CLI::ExistingFile);
  enumerate_cmd->add_option("--phrase", phrase_id)->required();
  enumerate_cmd->add_option("--limit", limit)->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--cursor", cursor, "Resume from a previous nextCursor");
  enumerate_cmd->callback([&] {
    action = [&] { return run_enumerate(catalogue_path, phrase_id, limit, cursor); };
  });

  auto* eval_cmd = app.add_subcommand("eval", "Summarize a survey CSV");
  std::string survey_path;
  std::uint64_t seed = 0;
  bool yates = false;
  eval_cmd->add_option("--in", survey_path)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--seed", seed, "Seed for the balanced dataset");
  eval_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  eval_cmd->add_flag("--yates", yates, "Continuity correction on the 2x2 test");
  eval_cmd->callback(
      [&] { action = [&] { return run_eval(survey_path, seed, format, yates); }; });

  auto* bulletin_cmd = app.add_subcommand("bulletin", "Bulletin documents");
  bulletin_cmd->require_subcommand(1);
  auto* bulletin_render = bulletin_cmd->add_subcommand("render", "Render a bulletin");
  std::string bulletin_path;
  bulletin_render->add_option("catalogue", catalogue_path)->required()->check(CLI::ExistingFile);
  bulletin_render->add_option("bulletin", bulletin_path)->required()->check(CLI::ExistingFile);
  bulletin_render->add_option("--lang", lang);
  bulletin_render->callback([&] {
    action = [&] { return run_bulletin_render(catalogue_path, bulletin_path, lang); };
  });

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  std::string bulletin_dir = "bulletins";
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string search_lang, admin_token;
  serve_cmd->add_option("--catalogue", catalogue_path)
      ->envname("PHRASECAT_CATALOGUE")
      ->required()
      ->check(CLI::ExistingFile);
  serve_cmd->add_option("--bulletins", bulletin_dir, "Bulletin directory")
      ->envname("PHRASECAT_BULLETINS");
  serve_cmd->add_option("--host", host)->envname("PHRASECAT_HOST");
  serve_cmd->add_option("--port", port)->envname("PHRASECAT_PORT")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--search-lang", search_lang)->envname("PHRASECAT_SEARCH_LANG");
  serve_cmd->add_option("--admin-token", admin_token, "Required for catalogue reloads")
      ->envname("PHRASECAT_ADMIN_TOKEN");
  serve_cmd->callback([&] {
    action = [&] {
      ServiceConfig config{catalogue_path, bulletin_dir, {}, {}};
      if (!search_lang.empty()) config.search_language = search_lang;
      if (!admin_token.empty()) config.admin_token = admin_token;
      return run_serve(std::move(config), host, port);
    };
  });

  CLI11_PARSE(app, argc, argv);
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what();
    if (!e.path().empty()) std::cerr << " at " << e.path();
    std::cerr << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitFailure;
}
