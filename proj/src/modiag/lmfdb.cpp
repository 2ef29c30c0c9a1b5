#include "modiag/lmfdb.hpp"

#include "modiag/error.hpp"

#include <httplib.h>
#include <openssl/sha.h>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace modiag {

using nlohmann::json;

namespace {

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return (v && *v) ? std::string(v) : fallback;
}

bool env_flag(const char* name) {
  const std::string v = env_or(name, "");
  return !v.empty() && v != "0" && v != "false" && v != "no";
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string sha256_hex(const std::string& s) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(s.data()), s.size(), md);
  std::ostringstream os;
  for (unsigned char c : md) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(c);
  return os.str();
}

std::mutex& cache_write_mutex() {
  static std::mutex mu;
  return mu;
}

// Spaces requests at least min_interval apart within this process.
void rate_limit(std::chrono::milliseconds min_interval) {
  static std::mutex mu;
  static std::chrono::steady_clock::time_point last{};
  std::lock_guard lock(mu);
  const auto now = std::chrono::steady_clock::now();
  if (last != std::chrono::steady_clock::time_point{} && now - last < min_interval)
    std::this_thread::sleep_for(min_interval - (now - last));
  last = std::chrono::steady_clock::now();
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::lock_guard lock(cache_write_mutex());
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::network, "cannot write cache file " + tmp.string());
    out << content;
    if (!out.flush()) fail(ErrorKind::network, "cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

struct HttpError {
  std::string message;
};

json http_get_json(const FetchOptions& options, const std::string& path) {
  rate_limit(options.min_interval);
  httplib::Client cli(options.base_url);
  cli.set_connection_timeout(options.timeout);
  cli.set_read_timeout(options.timeout);
  cli.set_follow_location(true);
  auto res = cli.Get(path);
  if (!res) throw HttpError{"request to " + options.base_url + path + " failed: " + httplib::to_string(res.error())};
  if (res->status != 200) throw HttpError{"request to " + options.base_url + path + " returned HTTP " + std::to_string(res->status)};
  try {
    return json::parse(res->body);
  } catch (const json::exception& e) {
    throw HttpError{"response from " + options.base_url + path + " is not JSON: " + e.what()};
  }
}

std::string first_page_path(long level, int weight) {
  return "/api/mf_newforms/?level=" + std::to_string(level) + "&weight=" + std::to_string(weight) +
         "&char_order=1&_format=json&_fields=label,level,weight,dim,char_order,atkin_lehner_eigenvals";
}

} // namespace

FetchOptions FetchOptions::from_environment() {
  FetchOptions o;
  o.base_url = env_or("MODIAG_LMFDB_URL", o.base_url);
  const char* home = std::getenv("HOME");
  const std::string fallback = std::string(home ? home : ".") + "/.cache/modiag/lmfdb";
  o.cache_dir = env_or("MODIAG_CACHE_DIR", fallback);
  o.offline = env_flag("MODIAG_OFFLINE");
  return o;
}

std::string FetchResult::status() const {
  if (stale) return "stale: " + fetched_at;
  if (from_cache) return "cached: " + fetched_at;
  return "fresh";
}

std::string cache_key(long level, int weight) {
  return "level=" + std::to_string(level) + ";weight=" + std::to_string(weight) + ";source=" + lmfdb_source_version;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, long level, int weight) {
  return dir / (sha256_hex(cache_key(level, weight)) + ".json");
}

std::vector<NewformOrbit> parse_lmfdb_page(const json& page, long level, int weight) {
  if (!page.is_object() || !page.contains("data") || !page["data"].is_array())
    fail(ErrorKind::network, "LMFDB response has no \"data\" array");
  std::vector<NewformOrbit> out;
  for (const auto& rec : page["data"]) {
    try {
      NewformOrbit o;
      o.label = rec.at("label").get<std::string>();
      o.level = rec.at("level").get<long>();
      o.weight = rec.at("weight").get<int>();
      o.hecke_degree = rec.at("dim").get<int>();
      o.nebentypus_trivial = !rec.contains("char_order") || rec["char_order"].get<int>() == 1;
      if (o.level != level || o.weight != weight || !o.nebentypus_trivial) continue;
      const auto fac = factorize(level);
      if (rec.contains("atkin_lehner_eigenvals") && !rec["atkin_lehner_eigenvals"].is_null())
        for (const auto& pair : rec["atkin_lehner_eigenvals"]) {
          const long p = pair.at(0).get<long>();
          const Sign s = Sign::from_int(pair.at(1).get<long>());
          if (!fac.contains(p)) continue;
          (fac.at(p) == 1 ? o.atkin_lehner : o.atkin_lehner_prime_power).insert_or_assign(p, s);
        }
      o.provenance = json{{"source", "https://www.lmfdb.org/ModularForm/GL2/Q/holomorphic/" + o.label + "/"}};
      out.push_back(std::move(o));
    } catch (const json::exception& e) {
      fail(ErrorKind::network, std::string("malformed LMFDB record: ") + e.what());
    } catch (const Error& e) {
      fail(ErrorKind::network, std::string("malformed LMFDB record: ") + e.what());
    }
  }
  return out;
}

namespace {

FetchResult from_cache_file(const std::filesystem::path& path, long level, int weight) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::network, "no cached copy at " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::network, "corrupt cache file " + path.string() + ": " + e.what());
  }
  if (j.value("key", "") != cache_key(level, weight))
    fail(ErrorKind::network, "cache file " + path.string() + " does not match its key");
  FetchResult r;
  r.level = level;
  r.weight = weight;
  r.from_cache = true;
  r.fetched_at = j.value("fetched_at", "");
  r.source_url = j.value("url", "");
  for (const auto& page : j.at("pages")) {
    auto orbits = parse_lmfdb_page(page, level, weight);
    r.orbits.insert(r.orbits.end(), orbits.begin(), orbits.end());
  }
  return r;
}

} // namespace

FetchResult lmfdb_fetch(long level, int weight, const FetchOptions& options) {
  if (level < 1) fail(ErrorKind::usage, "level must be positive");
  if (weight != 2) fail(ErrorKind::usage, "only weight 2 is in scope");
  const auto path = cache_path(options.cache_dir, level, weight);
  const bool have_cache = !options.cache_dir.empty() && std::filesystem::exists(path);

  if (options.offline) {
    if (!have_cache)
      fail(ErrorKind::network, "offline and no cached LMFDB data for level " + std::to_string(level));
    return from_cache_file(path, level, weight);
  }

  std::string next = first_page_path(level, weight);
  json pages = json::array();
  std::string failure;
  try {
    for (int guard = 0; !next.empty() && guard < 50; ++guard) {
      json page = http_get_json(options, next);
      parse_lmfdb_page(page, level, weight); // validate before caching
      next = page.contains("next") && page["next"].is_string() ? page["next"].get<std::string>() : "";
      pages.push_back(std::move(page));
    }
  } catch (const HttpError& e) {
    failure = e.message;
  } catch (const Error& e) {
    failure = e.what();
  }

  if (!failure.empty()) {
    if (!have_cache) fail(ErrorKind::network, failure + "; no cached copy for level " + std::to_string(level));
    FetchResult r = from_cache_file(path, level, weight);
    r.stale = true;
    return r;
  }

  FetchResult r;
  r.level = level;
  r.weight = weight;
  r.fetched_at = utc_now();
  r.source_url = options.base_url + first_page_path(level, weight);
  for (const auto& page : pages) {
    auto orbits = parse_lmfdb_page(page, level, weight);
    r.orbits.insert(r.orbits.end(), orbits.begin(), orbits.end());
  }
  if (!options.cache_dir.empty()) {
    const json record{{"key", cache_key(level, weight)},
                      {"level", level},
                      {"weight", weight},
                      {"source_version", lmfdb_source_version},
                      {"fetched_at", r.fetched_at},
                      {"url", r.source_url},
                      {"pages", pages}};
    write_atomically(path, record.dump(2) + "\n");
  }
  return r;
}

} // namespace modiag
