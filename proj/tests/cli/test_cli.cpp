// Runs the installed-style binary as a subprocess and checks exit codes and output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + MODIAG_CLI + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string data = std::string("--data ") + MODIAG_FIXTURE_DIR + "/go_table1.json";

std::filesystem::path temp_dir() {
  std::random_device rd;
  auto p = std::filesystem::temp_directory_path() / ("modiag-cli-" + std::to_string(rd()));
  std::filesystem::create_directories(p);
  return p;
}

} // namespace

TEST_CASE("check-curve verdicts map to exit codes") {
  const Run good = run(data + " check-curve 217.A");
  CHECK(good.code == 0);
  CHECK(good.out.find("good: yes") != std::string::npos);
  CHECK(good.out.find("modified diagonal cycle vanishes") != std::string::npos);

  const Run j = run(data + " --json check-curve 217.A");
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["good"] == "yes");

  // 243 carries a non-good verdict.
  const auto t = nlohmann::json::parse(run(data + " --json reproduce-tables").out);
  int seen = 0;
  for (const auto& cat : t["categories"])
    for (const auto& c : cat["curves"])
      if (c.get<std::string>().rfind("243.", 0) == 0) {
        ++seen;
        CHECK(run(data + " check-curve " + c.get<std::string>()).code != 0);
      }
  CHECK(seen > 0);
}

TEST_CASE("459 depends on the certificates") {
  CHECK(run(data + " check-curve 459.B").code == 0);
  const Run r = run(data + " --json reproduce-tables");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["match"] == true);
}

TEST_CASE("usage and data errors") {
  CHECK(run("").code == 3);
  CHECK(run("no-such-command").code == 3);
  CHECK(run("check-curve 217.A", "MODIAG_DATA=").code == 3);
  CHECK(run(data + " check-curve 1.Z").code == 3);
  CHECK(run("--data /nonexistent.json check-curve 217.A").code == 4);
  CHECK(run("hasse --ramified 2").code == 4);
  CHECK(run("trilinear dihedral 2 triv triv triv").code == 3);
  CHECK(run("find-quadratic 4").code == 3);
}

TEST_CASE("group and arithmetic subcommands") {
  const Run t = run("trilinear dihedral 3 V_1 V_1 V_1");
  CHECK(t.code == 0);
  CHECK(t.out.find("multiplicity: 1") != std::string::npos);
  const Run z = run("--json trilinear cyclic 5 chi_1 chi_2 chi_3");
  CHECK(nlohmann::json::parse(z.out)["multiplicity"] == 0);

  const Run h = run("--json hasse --ramified 2,3 --place 3");
  CHECK(h.code == 0);
  CHECK(nlohmann::json::parse(h.out).is_object());

  const Run rn = run("--json root-number --eps 7=+1,31=+1");
  CHECK(rn.code == 0);
  const auto j = nlohmann::json::parse(rn.out);
  CHECK(j["global_sign"] == -1);
  CHECK(j["l_value_forced_zero"] == true);

  const Run q = run("--json find-quadratic 3,7,11");
  CHECK(q.code == 0);
  CHECK(nlohmann::json::parse(q.out)["d"] == 37);
}

TEST_CASE("construct then verify through files and stdin") {
  const auto dir = temp_dir();
  const Run c = run(data + " --json construct 217.2.a.b 217.2.a.b 217.2.a.b --prime 7");
  REQUIRE(c.code == 0);
  const auto path = dir / "cert.json";
  std::ofstream(path) << c.out;
  const Run v = run("verify " + path.string());
  CHECK(v.code == 0);
  CHECK(v.out.rfind("valid: true", 0) == 0);
  const Run s = run("--json verify - < " + path.string());
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["valid"] == true);

  auto j = nlohmann::json::parse(c.out);
  j["tower"]["layers"] = j["tower"]["layers"].get<int>() + 1;
  std::ofstream(dir / "bad.json") << j.dump();
  const Run b = run("verify " + (dir / "bad.json").string());
  CHECK(b.code == 1);
  CHECK(b.out.rfind("valid: false", 0) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::string args : {data + " reproduce-tables", data + " --json reproduce-tables",
                                 data + " --json check-curve 459.I", std::string("trilinear dihedral 12 V_1 V_5 V_4")}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("certificate merging") {
  const auto dir = temp_dir();
  std::ofstream(dir / "bad.json") << R"({"certificates":[{"id":"x"}]})";
  CHECK(run(data + " --certificates " + (dir / "bad.json").string() + " check-curve 217.A").code == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("offline fetch with an empty cache") {
  const auto dir = temp_dir();
  CHECK(run("--offline --cache-dir " + dir.string() + " fetch-lmfdb 217").code == 5);
  CHECK(run("fetch-lmfdb 217 --weight 2 --cache-dir " + dir.string(), "MODIAG_OFFLINE=1").code == 5);
  std::filesystem::remove_all(dir);
}
