#pragma once

// Read-only client for the LMFDB classical modular forms API with an on-disk
// cache. Cache files are content-addressed by the SHA-256 of the request key
// (level, weight, source version) and replaced atomically.

#include "modiag/data.hpp"

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

namespace modiag {

struct FetchOptions {
  std::string base_url = "https://www.lmfdb.org";
  std::filesystem::path cache_dir;
  bool offline = false;
  std::chrono::milliseconds min_interval{1000};
  std::chrono::seconds timeout{20};

  // Defaults overridden by MODIAG_CACHE_DIR, MODIAG_OFFLINE, MODIAG_LMFDB_URL.
  static FetchOptions from_environment();
};

struct FetchResult {
  long level = 0;
  int weight = 2;
  std::vector<NewformOrbit> orbits;
  bool from_cache = false;
  bool stale = false;
  std::string fetched_at; // UTC, ISO 8601, when the data left the server
  std::string source_url;
  std::string status() const; // "fresh", "cached: <t>" or "stale: <t>"
};

// Source version folded into the cache key; bump when the parsed fields change.
inline constexpr const char* lmfdb_source_version = "mf_newforms-v1";

std::string cache_key(long level, int weight);
std::filesystem::path cache_path(const std::filesystem::path& dir, long level, int weight);

// Parses one API page: {"data":[{"label":..,"level":..,"weight":..,"dim":..,
// "char_order":..,"atkin_lehner_eigenvals":[[p,s],..]},..]}.
std::vector<NewformOrbit> parse_lmfdb_page(const nlohmann::json& page, long level, int weight);

FetchResult lmfdb_fetch(long level, int weight, const FetchOptions& options);

} // namespace modiag
