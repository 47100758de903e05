// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_SERVICE_H_
#define PHRASECAT_SERVICE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"
#include "phrasecat/bulletin.h"
#include "phrasecat/catalogue.h"
#include "phrasecat/error.h"
#include "phrasecat/search.h"

namespace httplib {
class Server;
}

namespace phrasecat {

struct ServiceConfig {
  std::filesystem::path catalogue_path;
  std::filesystem::path bulletin_dir;
  // Defaults to the catalogue's source language.
  std::optional<LanguageCode> search_language;
  // When set, POST /api/admin/reload requires a matching X-Admin-Token header.
  std::optional<std::string> admin_token;
};

// Header names are lowercase.
struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Error envelope for every non-2xx response.
struct ApiError {
  int http_status = 500;
  std::string code;
  std::string detail;
  std::optional<std::string> path;
  nlohmann::json extra = nlohmann::json::object();  // merged into the body

  nlohmann::json to_json() const;
};

int http_status_for(ErrorCode code);

// Request handling over a swappable catalogue snapshot. Readers take the
// current snapshot and never wait for each other; reloads and bulletin writes
// go through a single writer gate.
class CatalogueService {
 public:
  // Loads and validates the catalogue; throws Error on failure.
  explicit CatalogueService(ServiceConfig config);

  ApiResponse handle(const ApiRequest& request);

  // Replaces the catalogue from the configured path. The old snapshot stays
  // in place if the new file is invalid.
  std::int64_t reload();

  std::int64_t catalogue_version() const;

  struct Snapshot {
    Catalogue catalogue;
    LanguageCode search_language;
    std::map<LanguageCode, Index> indexes;
    std::map<std::string, nlohmann::json> phrase_details;
  };
  std::shared_ptr<const Snapshot> snapshot() const;

 private:
  ApiResponse get_catalogue(const Snapshot& s) const;
  ApiResponse get_phrases(const Snapshot& s, const ApiRequest& request) const;
  ApiResponse get_phrase(const Snapshot& s, const std::string& id) const;
  ApiResponse post_render(const Snapshot& s, const ApiRequest& request) const;
  ApiResponse post_lint(const Snapshot& s, const ApiRequest& request) const;
  ApiResponse list_bulletins() const;
  ApiResponse get_bulletin(const std::string& id) const;
  ApiResponse post_bulletin(const ApiRequest& request);
  ApiResponse post_reload(const ApiRequest& request);

  std::shared_ptr<const Snapshot> load_snapshot() const;

  ServiceConfig config_;
  BulletinStore store_;
  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::mutex writer_mutex_;
};

// Plain HTTP front end for a CatalogueService.
class HttpServer {
 public:
  explicit HttpServer(CatalogueService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds the listening socket; port 0 picks a free port. Returns the bound
  // port and throws Error(kIoError) on failure.
  int bind(const std::string& host, int port);

  // Serves until stop() is called.
  void listen();
  void stop();

 private:
  CatalogueService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace phrasecat

#endif  // PHRASECAT_SERVICE_H_
