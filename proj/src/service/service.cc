// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "phrasecat/service.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "phrasecat/codec.h"
#include "phrasecat/lint.h"
#include "phrasecat/render.h"

namespace phrasecat {

using nlohmann::json;

namespace {

constexpr std::size_t kDefaultHits = 10;
constexpr std::size_t kMaxHits = 1000;

ApiResponse ok(json body, int status = 200) { return {status, std::move(body)}; }

ApiResponse fail(ApiError error) {
  int status = error.http_status;
  return {status, error.to_json()};
}

ApiResponse from_error(const Error& e) {
  ApiError error;
  error.http_status = http_status_for(e.code());
  switch (e.code()) {
    case ErrorCode::kUnknownPhrase: error.code = "NOT_FOUND"; break;
    case ErrorCode::kIncompleteSelection: error.code = "VALIDATION"; break;
    default: error.code = std::string(to_string(e.code()));
  }
  error.detail = e.what();
  if (!e.path().empty()) error.path = e.path();
  if (const auto* se = dynamic_cast<const SelectionError*>(&e)) {
    error.extra["report"] = validation_report_to_json(se->report());
    if (!se->report().issues.empty()) error.path = se->report().issues.front().path;
  }
  return fail(std::move(error));
}

ApiResponse bad_request(std::string detail, std::optional<std::string> path = {}) {
  return fail({400, "MALFORMED", std::move(detail), std::move(path)});
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    if (end > start) parts.emplace_back(path.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

json parse_body(const ApiRequest& request) {
  json body = json::parse(request.body, nullptr, false);
  if (body.is_discarded()) throw Error(ErrorCode::kMalformed, "request body is not JSON");
  return body;
}

// Sub-segments reachable from a phrase, nested ones included.
std::set<std::string> reachable_sub_segments(const Catalogue& c, const Phrase& p) {
  std::set<std::string> seen;
  std::vector<const Option*> pending;
  for (const auto& segment : p.segments) {
    for (const auto& option : segment.options) pending.push_back(&option);
  }
  while (!pending.empty()) {
    const Option* option = pending.back();
    pending.pop_back();
    for (const auto& occ : slot_occurrences(*option, c.source_language)) {
      if (!seen.insert(occ.sub_segment_id).second) continue;
      if (const SubSegment* sub = c.find_sub_segment(occ.sub_segment_id)) {
        for (const auto& o : sub->options) pending.push_back(&o);
      }
    }
  }
  return seen;
}

json phrase_summary(const Phrase& p) {
  return {{"id", p.id}, {"label", p.label}, {"segments", p.segments.size()}};
}

bool truthy(const std::map<std::string, std::string>& query, const std::string& key) {
  auto it = query.find(key);
  return it != query.end() && (it->second == "1" || it->second == "true");
}

}  // namespace

json ApiError::to_json() const {
  json body = extra.is_object() ? extra : json::object();
  body["httpStatus"] = http_status;
  body["code"] = code;
  body["detail"] = detail;
  if (path) body["path"] = *path;
  return body;
}

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kUnknownPhrase:
      return 404;
    case ErrorCode::kStaleVersion:
      return 409;
    case ErrorCode::kMalformed:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidCursor:
    case ErrorCode::kUnknownLanguage:
      return 400;
    case ErrorCode::kIoError:
      return 500;
    default:
      return 422;
  }
}

CatalogueService::CatalogueService(ServiceConfig config)
    : config_(std::move(config)), store_(config_.bulletin_dir) {
  snapshot_ = load_snapshot();
}

std::shared_ptr<const CatalogueService::Snapshot> CatalogueService::load_snapshot() const {
  auto s = std::make_shared<Snapshot>();
  s->catalogue = parse_catalogue(read_file(config_.catalogue_path));
  const Catalogue& c = s->catalogue;
  s->search_language = config_.search_language.value_or(c.source_language);
  if (!c.has_language(s->search_language)) {
    throw Error(ErrorCode::kUnknownLanguage,
                "search language '" + s->search_language + "' is not in the catalogue");
  }
  for (const auto& lang : c.languages) s->indexes.emplace(lang, build_index(c, lang));

  json all = catalogue_to_json(c);
  for (const auto& phrase : c.phrases) {
    json subs = json::object();
    for (const auto& id : reachable_sub_segments(c, phrase)) {
      subs[id] = all["subSegments"][id];
    }
    json layout = json::array();
    for (const auto& entry : phrase.layouts.at(c.source_language).entries) {
      layout.push_back(layout_entry_to_string(entry));
    }
    s->phrase_details[phrase.id] = {{"catalogueVersion", c.version},
                                    {"sourceLanguage", c.source_language},
                                    {"phrase", phrase_to_json(phrase)},
                                    {"subSegments", subs},
                                    {"sourceLayout", layout}};
  }
  return s;
}

std::shared_ptr<const CatalogueService::Snapshot> CatalogueService::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

std::int64_t CatalogueService::catalogue_version() const {
  return snapshot()->catalogue.version;
}

std::int64_t CatalogueService::reload() {
  std::lock_guard writer(writer_mutex_);
  auto fresh = load_snapshot();
  std::lock_guard lock(snapshot_mutex_);
  snapshot_ = fresh;
  return snapshot_->catalogue.version;
}

ApiResponse CatalogueService::handle(const ApiRequest& request) {
  try {
    auto parts = split_path(request.path);
    if (parts.empty() || parts[0] != "api") {
      return fail({404, "NOT_FOUND", "no such endpoint: " + request.path, {}});
    }
    auto s = snapshot();
    const bool get = request.method == "GET";
    const bool post = request.method == "POST";
    auto method_not_allowed = [&] {
      return fail({405, "METHOD_NOT_ALLOWED",
                   request.method + " is not allowed on " + request.path, {}});
    };

    if (parts.size() == 2 && parts[1] == "catalogue") {
      return get ? get_catalogue(*s) : method_not_allowed();
    }
    if (parts.size() == 2 && parts[1] == "phrases") {
      return get ? get_phrases(*s, request) : method_not_allowed();
    }
    if (parts.size() == 3 && parts[1] == "phrases") {
      return get ? get_phrase(*s, parts[2]) : method_not_allowed();
    }
    if (parts.size() == 2 && parts[1] == "render") {
      return post ? post_render(*s, request) : method_not_allowed();
    }
    if (parts.size() == 2 && parts[1] == "lint") {
      return post ? post_lint(*s, request) : method_not_allowed();
    }
    if (parts.size() == 2 && parts[1] == "bulletins") {
      if (get) return list_bulletins();
      if (post) return post_bulletin(request);
      return method_not_allowed();
    }
    if (parts.size() == 3 && parts[1] == "bulletins") {
      return get ? get_bulletin(parts[2]) : method_not_allowed();
    }
    if (parts.size() == 3 && parts[1] == "admin" && parts[2] == "reload") {
      return post ? post_reload(request) : method_not_allowed();
    }
    return fail({404, "NOT_FOUND", "no such endpoint: " + request.path, {}});
  } catch (const Error& e) {
    return from_error(e);
  } catch (const json::exception& e) {
    return bad_request(e.what());
  } catch (const std::exception& e) {
    return fail({500, "INTERNAL", e.what(), {}});
  }
}

ApiResponse CatalogueService::get_catalogue(const Snapshot& s) const {
  const Catalogue& c = s.catalogue;
  return ok({{"catalogueVersion", c.version},
             {"sourceLanguage", c.source_language},
             {"languages", c.languages},
             {"searchLanguage", s.search_language},
             {"phraseCount", c.phrases.size()}});
}

ApiResponse CatalogueService::get_phrases(const Snapshot& s,
                                          const ApiRequest& request) const {
  const Catalogue& c = s.catalogue;
  json phrases = json::array();
  auto q = request.query.find("q");
  if (q == request.query.end() || q->second.empty()) {
    for (const auto& p : c.phrases) phrases.push_back(phrase_summary(p));
    return ok({{"catalogueVersion", c.version}, {"phrases", phrases}});
  }

  std::size_t k = kDefaultHits;
  if (auto it = request.query.find("k"); it != request.query.end()) {
    const std::string& text = it->second;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || end != text.data() + text.size() || k == 0 ||
        k > kMaxHits) {
      return fail({400, "INVALID_ARGUMENT",
                   "k must be an integer between 1 and " + std::to_string(kMaxHits),
                   "k"});
    }
  }
  LanguageCode lang = s.search_language;
  if (auto it = request.query.find("lang"); it != request.query.end()) lang = it->second;
  auto index = s.indexes.find(lang);
  if (index == s.indexes.end()) {
    return fail({400, "UNKNOWN_LANGUAGE", "unknown language '" + lang + "'", "lang"});
  }
  for (const auto& hit : search(index->second, c, q->second, k)) {
    json entry = phrase_summary(*c.find_phrase(hit.phrase_id));
    entry["score"] = hit.score;
    entry["matchedTokens"] = hit.matched_tokens;
    phrases.push_back(entry);
  }
  return ok({{"catalogueVersion", c.version}, {"language", lang}, {"phrases", phrases}});
}

ApiResponse CatalogueService::get_phrase(const Snapshot& s, const std::string& id) const {
  auto it = s.phrase_details.find(id);
  if (it == s.phrase_details.end()) {
    return fail({404, "NOT_FOUND", "unknown phrase '" + id + "'", {}});
  }
  return ok(it->second);
}

ApiResponse CatalogueService::post_render(const Snapshot& s,
                                          const ApiRequest& request) const {
  const Catalogue& c = s.catalogue;
  json body = parse_body(request);
  if (!body.is_object() || !body.contains("catalogueVersion") ||
      !body["catalogueVersion"].is_number_integer()) {
    return bad_request("catalogueVersion must be an integer", "/catalogueVersion");
  }
  if (!body.contains("selection")) return bad_request("missing selection", "/selection");
  std::int64_t version = body["catalogueVersion"].get<std::int64_t>();
  if (version != c.version) {
    ApiError error{409, "STALE_VERSION",
                   "selection was made against catalogue version " +
                       std::to_string(version) + ", serving " + std::to_string(c.version),
                   "/catalogueVersion"};
    error.extra["catalogueVersion"] = c.version;
    return fail(std::move(error));
  }
  Selection selection = selection_from_json(body["selection"]);
  json renderings = json::object();
  for (const auto& [lang, sentence] : render_all(c, selection)) {
    renderings[lang] = sentence.text;
  }
  return ok({{"catalogueVersion", c.version}, {"renderings", renderings}});
}

ApiResponse CatalogueService::post_lint(const Snapshot& s,
                                        const ApiRequest& request) const {
  LintOptions options;
  options.strict = truthy(request.query, "strict");
  json result = json::object();
  std::vector<Finding> findings;
  if (request.body.empty()) {
    findings = lint(s.catalogue, options);
    result["catalogueVersion"] = s.catalogue.version;
  } else {
    findings = lint(decode_catalogue(request.body), options);
  }
  json list = json::array();
  std::size_t errors = 0;
  for (const auto& f : findings) {
    list.push_back(finding_to_json(f));
    if (f.severity == Severity::kError) ++errors;
  }
  result["findings"] = list;
  result["errors"] = errors;
  result["warnings"] = findings.size() - errors;
  return ok(result);
}

ApiResponse CatalogueService::list_bulletins() const {
  auto summaries = store_.list();
  json list = json::array();
  for (auto it = summaries.rbegin(); it != summaries.rend(); ++it) {
    list.push_back({{"id", it->id},
                    {"issuedAt", it->issued_at},
                    {"edition", to_string(it->edition)},
                    {"catalogueVersion", it->catalogue_version}});
  }
  return ok({{"bulletins", list}});
}

ApiResponse CatalogueService::get_bulletin(const std::string& id) const {
  return ok(bulletin_to_json(store_.load(id)));
}

ApiResponse CatalogueService::post_bulletin(const ApiRequest& request) {
  Bulletin bulletin = bulletin_from_json(parse_body(request));
  std::lock_guard writer(writer_mutex_);
  auto s = snapshot();
  if (bulletin.catalogue_version != s->catalogue.version) {
    ApiError error{409, "STALE_VERSION",
                   "bulletin targets catalogue version " +
                       std::to_string(bulletin.catalogue_version) + ", serving " +
                       std::to_string(s->catalogue.version),
                   "/catalogueVersion"};
    error.extra["catalogueVersion"] = s->catalogue.version;
    return fail(std::move(error));
  }
  std::string id = store_.store(s->catalogue, bulletin);
  return ok({{"id", id}, {"catalogueVersion", s->catalogue.version}}, 201);
}

ApiResponse CatalogueService::post_reload(const ApiRequest& request) {
  if (config_.admin_token) {
    auto it = request.headers.find("x-admin-token");
    if (it == request.headers.end() || it->second != *config_.admin_token) {
      return fail({403, "FORBIDDEN", "admin token required", {}});
    }
  }
  std::int64_t previous = catalogue_version();
  std::int64_t current = reload();
  return ok({{"catalogueVersion", current}, {"previousVersion", previous}});
}

}  // namespace phrasecat
