// Exercises the shared library through its C header only.

#include "modiag.h"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

namespace {

struct Out {
  char* p = nullptr;
  ~Out() { modiag_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Ds {
  modiag_dataset* p = nullptr;
  ~Ds() { modiag_dataset_free(p); }
};

const std::string fixture = std::string(MODIAG_FIXTURE_DIR) + "/go_table1.json";

} // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(modiag_status_name(MODIAG_ERR_DATA)) == "data-error");
  CHECK(std::string(modiag_version()).size() > 0);
}

TEST_CASE("check-curve through the C API") {
  Ds ds;
  REQUIRE(modiag_dataset_load(fixture.c_str(), &ds.p) == MODIAG_OK);
  Out out;
  CHECK(modiag_check_curve(ds.p, "217.A", "", MODIAG_FORMAT_TEXT, &out.p) == MODIAG_OK);
  CHECK(out.str().find("good: yes") != std::string::npos);
  Out j;
  CHECK(modiag_check_curve(ds.p, "217.A", nullptr, MODIAG_FORMAT_JSON, &j.p) == MODIAG_OK);
  CHECK(nlohmann::json::parse(j.str())["good"] == "yes");
  Out none;
  CHECK(modiag_check_curve(ds.p, "no.such", "", MODIAG_FORMAT_TEXT, &none.p) == MODIAG_ERR_USAGE);
  CHECK(none.p == nullptr);
  CHECK(std::string(modiag_last_error()).find("unknown curve") != std::string::npos);
}

TEST_CASE("459 certificates can be cleared") {
  Ds ds;
  REQUIRE(modiag_dataset_load(fixture.c_str(), &ds.p) == MODIAG_OK);
  Out a, b;
  CHECK(modiag_check_curve(ds.p, "459.B", "", MODIAG_FORMAT_TEXT, &a.p) == MODIAG_OK);
  REQUIRE(modiag_dataset_clear_certificates(ds.p) == MODIAG_OK);
  CHECK(modiag_check_curve(ds.p, "459.B", "", MODIAG_FORMAT_TEXT, &b.p) == MODIAG_UNKNOWN);
}

TEST_CASE("dataset errors map to statuses") {
  Ds ds;
  CHECK(modiag_dataset_parse("{", &ds.p) == MODIAG_ERR_DATA);
  CHECK(modiag_dataset_parse(R"({"curves":[{"label":"x","level":1,"genus":0,"newforms":["nope"]}]})", &ds.p) == MODIAG_ERR_DATA);
  CHECK(std::string(modiag_last_error()).rfind("dangling-reference", 0) == 0);
  CHECK(modiag_dataset_load("/nonexistent.json", &ds.p) == MODIAG_ERR_DATA);
  CHECK(modiag_dataset_load(nullptr, &ds.p) == MODIAG_ERR_USAGE);
  CHECK(modiag_dataset_empty(nullptr) == MODIAG_ERR_USAGE);
}

TEST_CASE("dump round trip") {
  Ds ds, again;
  REQUIRE(modiag_dataset_load(fixture.c_str(), &ds.p) == MODIAG_OK);
  Out a, b;
  REQUIRE(modiag_dataset_dump(ds.p, &a.p) == MODIAG_OK);
  REQUIRE(modiag_dataset_parse(a.p, &again.p) == MODIAG_OK);
  REQUIRE(modiag_dataset_dump(again.p, &b.p) == MODIAG_OK);
  CHECK(a.str() == b.str());
}

TEST_CASE("group, sign and Hasse calls") {
  Out t;
  CHECK(modiag_trilinear("dihedral", 3, "V_1", "V_1", "V_1", MODIAG_FORMAT_TEXT, &t.p) == MODIAG_OK);
  CHECK(t.str().find("multiplicity: 1") != std::string::npos);
  Out bad;
  CHECK(modiag_trilinear("dihedral", 2, "triv", "triv", "triv", MODIAG_FORMAT_TEXT, &bad.p) == MODIAG_ERR_USAGE);

  Out r;
  CHECK(modiag_root_number("7=+1,31=+1", MODIAG_FORMAT_JSON, &r.p) == MODIAG_OK);
  const auto j = nlohmann::json::parse(r.str());
  CHECK(j["global_sign"] == -1);
  CHECK(j["l_value_forced_zero"] == true);
  CHECK(j["supporting_quaternion"].is_null());
  Out r2;
  CHECK(modiag_root_number("7=x", MODIAG_FORMAT_JSON, &r2.p) == MODIAG_ERR_USAGE);

  Out h;
  CHECK(modiag_hasse(1, "2", nullptr, MODIAG_FORMAT_TEXT, &h.p) == MODIAG_ERR_DATA);
  CHECK(std::string(modiag_last_error()).rfind("parity", 0) == 0);
  Out h2;
  CHECK(modiag_hasse(1, "2,3", "3", MODIAG_FORMAT_JSON, &h2.p) == MODIAG_OK);

  Out q;
  CHECK(modiag_find_quadratic("3,7,11", MODIAG_FORMAT_JSON, &q.p) == MODIAG_OK);
  CHECK(nlohmann::json::parse(q.str())["d"] == 37);
}

TEST_CASE("construct and verify") {
  Ds ds;
  REQUIRE(modiag_dataset_load(fixture.c_str(), &ds.p) == MODIAG_OK);
  Out c;
  REQUIRE(modiag_construct(ds.p, "217.2.a.b", "217.2.a.b", "217.2.a.b", 7, MODIAG_FORMAT_JSON, &c.p) == MODIAG_OK);
  Out v;
  CHECK(modiag_verify(c.p, MODIAG_FORMAT_JSON, &v.p) == MODIAG_OK);
  CHECK(nlohmann::json::parse(v.str())["valid"] == true);

  auto j = nlohmann::json::parse(c.str());
  j["epsilons"][0] = -j["epsilons"][0].get<int>();
  Out v2;
  CHECK(modiag_verify(j.dump().c_str(), MODIAG_FORMAT_TEXT, &v2.p) == MODIAG_VERDICT_NO);
  CHECK(v2.str().rfind("valid: false", 0) == 0);
  Out v3;
  CHECK(modiag_verify("not json", MODIAG_FORMAT_TEXT, &v3.p) == MODIAG_ERR_DATA);

  Out c2;
  CHECK(modiag_construct(ds.p, "217.2.a.b", "217.2.a.b", "217.2.a.b", 5, MODIAG_FORMAT_JSON, &c2.p) == MODIAG_ERR_DATA);
}

TEST_CASE("null handles and formats") {
  Out o;
  CHECK(modiag_reproduce_tables(nullptr, MODIAG_FORMAT_TEXT, &o.p) == MODIAG_ERR_USAGE);
  CHECK(modiag_trilinear("cyclic", 3, "chi_0", "chi_1", "chi_2", static_cast<modiag_format>(7), &o.p) == MODIAG_ERR_USAGE);
  CHECK(modiag_trilinear("cyclic", 3, "chi_0", "chi_1", "chi_2", MODIAG_FORMAT_TEXT, nullptr) == MODIAG_ERR_USAGE);
}

TEST_CASE("offline fetch without cache") {
  modiag_fetch_options o{};
  const std::string dir = "/nonexistent-modiag-cache";
  o.cache_dir = dir.c_str();
  o.offline = 1;
  Out out;
  CHECK(modiag_fetch_lmfdb(217, 2, &o, MODIAG_FORMAT_TEXT, &out.p) == MODIAG_ERR_NETWORK);
}
