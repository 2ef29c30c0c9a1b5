#include "modiag/error.hpp"
#include "modiag/lmfdb.hpp"

#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <filesystem>
#include <random>
#include <thread>

using namespace modiag;
using nlohmann::json;

namespace {

// Two-page fake of the mf_newforms endpoint for level 35.
class FakeLmfdb {
public:
  FakeLmfdb() {
    server_.Get("/api/mf_newforms/", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits_;
      if (req.get_param_value("level") != "35") {
        res.status = 404;
        return;
      }
      json page;
      if (req.has_param("_offset")) {
        page["data"] = json::array({{{"label", "35.2.a.b"}, {"level", 35}, {"weight", 2}, {"dim", 2}, {"char_order", 1},
                                     {"atkin_lehner_eigenvals", {{5, -1}, {7, 1}}}}});
      } else {
        page["data"] = json::array({{{"label", "35.2.a.a"}, {"level", 35}, {"weight", 2}, {"dim", 1}, {"char_order", 1},
                                     {"atkin_lehner_eigenvals", {{5, 1}, {7, -1}}}},
                                    {{"label", "35.2.b.a"}, {"level", 35}, {"weight", 2}, {"dim", 2}, {"char_order", 2},
                                     {"atkin_lehner_eigenvals", nullptr}}});
        page["next"] = "/api/mf_newforms/?level=35&weight=2&_offset=2";
      }
      res.set_content(page.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeLmfdb() { stop(); }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int hits() const { return hits_; }
  void stop() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
};

std::filesystem::path temp_dir() {
  std::random_device rd;
  auto p = std::filesystem::temp_directory_path() / ("modiag-test-" + std::to_string(rd()));
  std::filesystem::create_directories(p);
  return p;
}

FetchOptions options_for(const std::string& url, const std::filesystem::path& cache) {
  FetchOptions o;
  o.base_url = url;
  o.cache_dir = cache;
  o.min_interval = std::chrono::milliseconds(0);
  o.timeout = std::chrono::seconds(5);
  return o;
}

} // namespace

TEST_SUITE("lmfdb") {

TEST_CASE("cache keys are content addressed") {
  CHECK(cache_key(217, 2) == "level=217;weight=2;source=mf_newforms-v1");
  CHECK(cache_path("/c", 217, 2) == std::filesystem::path("/c/52c2fd0293f65e3be19323d1fbed5848584618bed66e5e1195f5847299923f33.json"));
  CHECK(cache_path("/c", 217, 2) != cache_path("/c", 218, 2));
}

TEST_CASE("page parsing") {
  const json page = json::parse(R"({"data":[{"label":"459.2.a.b","level":459,"weight":2,"dim":1,"char_order":1,
                                             "atkin_lehner_eigenvals":[[3,1],[17,-1]]}]})");
  const auto orbits = parse_lmfdb_page(page, 459, 2);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].atkin_lehner == std::map<long, Sign>{{17, Sign::minus()}});
  CHECK(orbits[0].atkin_lehner_prime_power == std::map<long, Sign>{{3, Sign::plus()}});
  CHECK_THROWS_AS(parse_lmfdb_page(json::object(), 459, 2), Error);
  CHECK_THROWS_AS(parse_lmfdb_page(json::parse(R"({"data":[{"label":"x"}]})"), 459, 2), Error);
}

TEST_CASE("fetch, cache, offline and stale paths") {
  const auto cache = temp_dir();
  FakeLmfdb fake;
  FetchOptions o = options_for(fake.url(), cache);

  const FetchResult fresh = lmfdb_fetch(35, 2, o);
  CHECK(fresh.status() == "fresh");
  REQUIRE(fresh.orbits.size() == 2); // the nontrivial-character orbit is skipped
  CHECK(fresh.orbits[0].label == "35.2.a.a");
  CHECK(fresh.orbits[1].hecke_degree == 2);
  CHECK(fresh.orbits[1].atkin_lehner.at(5) == Sign::minus());
  CHECK(std::filesystem::exists(cache_path(cache, 35, 2)));
  CHECK(fake.hits() == 2);

  o.offline = true;
  const FetchResult cached = lmfdb_fetch(35, 2, o);
  CHECK(cached.from_cache);
  CHECK(cached.status().rfind("cached: ", 0) == 0);
  CHECK(cached.orbits.size() == 2);
  CHECK(fake.hits() == 2);

  fake.stop();
  o.offline = false;
  const FetchResult stale = lmfdb_fetch(35, 2, o);
  CHECK(stale.stale);
  CHECK(stale.orbits.size() == 2);

  try {
    lmfdb_fetch(36, 2, o);
    FAIL("expected a network error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::network);
  }
  std::filesystem::remove_all(cache);
}

TEST_CASE("offline without a cache is a network error") {
  const auto cache = temp_dir();
  FetchOptions o = options_for("http://127.0.0.1:1", cache);
  o.offline = true;
  try {
    lmfdb_fetch(35, 2, o);
    FAIL("expected a network error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::network);
  }
  std::filesystem::remove_all(cache);
}

TEST_CASE("server errors fall back to the cache only when one exists") {
  const auto cache = temp_dir();
  FakeLmfdb fake;
  FetchOptions o = options_for(fake.url(), cache);
  CHECK_THROWS_AS(lmfdb_fetch(77, 2, o), Error);
  CHECK_FALSE(std::filesystem::exists(cache_path(cache, 77, 2)));
  CHECK_THROWS_AS(lmfdb_fetch(35, 4, o), Error);
  std::filesystem::remove_all(cache);
}

} // TEST_SUITE
