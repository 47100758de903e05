// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "phrasecat/bulletin.h"
#include "phrasecat/error.h"

namespace phrasecat {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void io_error(const std::string& what, const fs::path& path) {
  throw Error(ErrorCode::kIoError,
              what + " " + path.string() + ": " + std::strerror(errno));
}

void write_all(int fd, std::string_view data, const fs::path& path) {
  while (!data.empty()) {
    ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      io_error("cannot write", path);
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

// Write to a temporary sibling, fsync, then rename over the target.
void atomic_write(const fs::path& target, std::string_view data) {
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) io_error("cannot create", tmp);
  try {
    write_all(fd, data, tmp);
    if (::fsync(fd) != 0) io_error("cannot sync", tmp);
  } catch (...) {
    ::close(fd);
    ::unlink(tmp.c_str());
    throw;
  }
  if (::close(fd) != 0) io_error("cannot close", tmp);
  if (::rename(tmp.c_str(), target.c_str()) != 0) {
    ::unlink(tmp.c_str());
    io_error("cannot rename onto", target);
  }
  int dir = ::open(target.parent_path().c_str(), O_RDONLY | O_DIRECTORY);
  if (dir >= 0) {
    ::fsync(dir);
    ::close(dir);
  }
}

std::string derive_id(const Bulletin& b) {
  std::string id;
  for (char c : b.issued_at.substr(0, 19)) {
    if (c >= '0' && c <= '9') id += c;
  }
  return id + "-" + std::string(to_string(b.edition));
}

Bulletin read_bulletin(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed,
                path.string() + ": invalid JSON: " + e.what());
  }
  return bulletin_from_json(doc);
}

}  // namespace

BulletinStore::BulletinStore(fs::path directory)
    : directory_(std::move(directory)) {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create " + directory_.string() + ": " + ec.message());
  }
}

fs::path BulletinStore::path_for(std::string_view id) const {
  return directory_ / (std::string(id) + ".json");
}

std::string BulletinStore::store(const Catalogue& catalogue, Bulletin bulletin) {
  auto issues = validate_bulletin(catalogue, bulletin);
  if (!issues.empty()) {
    throw Error(ErrorCode::kValidation, issues.front().message,
                issues.front().path);
  }
  if (bulletin.id.empty()) {
    std::string base = derive_id(bulletin);
    bulletin.id = base;
    for (int n = 2; fs::exists(path_for(bulletin.id)); ++n) {
      bulletin.id = base + "-" + std::to_string(n);
    }
  } else if (!is_valid_identifier(bulletin.id)) {
    throw Error(ErrorCode::kValidation,
                "invalid bulletin id '" + bulletin.id + "'", "/id");
  }
  atomic_write(path_for(bulletin.id), bulletin_to_json(bulletin).dump(2) + "\n");
  return bulletin.id;
}

Bulletin BulletinStore::load(std::string_view id) const {
  if (!is_valid_identifier(id) || !fs::exists(path_for(id))) {
    throw Error(ErrorCode::kNotFound,
                "no bulletin '" + std::string(id) + "'", std::string(id));
  }
  return read_bulletin(path_for(id));
}

std::vector<BulletinSummary> BulletinStore::list() const {
  std::vector<std::pair<std::int64_t, BulletinSummary>> found;
  for (const auto& entry : fs::directory_iterator(directory_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    Bulletin b = read_bulletin(entry.path());
    found.push_back({*parse_iso8601(b.issued_at),
                     {b.id, b.issued_at, b.edition, b.catalogue_version}});
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.id < b.second.id;
  });
  std::vector<BulletinSummary> out;
  out.reserve(found.size());
  for (auto& [t, summary] : found) out.push_back(std::move(summary));
  return out;
}

}  // namespace phrasecat
