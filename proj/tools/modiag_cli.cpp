// modiag: command-line front end over the C API.

#include "modiag.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct DatasetDeleter {
  void operator()(modiag_dataset* d) const { modiag_dataset_free(d); }
};
using DatasetPtr = std::unique_ptr<modiag_dataset, DatasetDeleter>;

struct Globals {
  std::string data;
  std::string certificates;
  std::string cache_dir;
  bool json = false;
  bool offline = false;
};

modiag_format fmt(const Globals& g) { return g.json ? MODIAG_FORMAT_JSON : MODIAG_FORMAT_TEXT; }

bool is_error(modiag_status s) { return s >= MODIAG_ERR_USAGE; }

int report(modiag_status s) {
  if (is_error(s) || (s == MODIAG_UNKNOWN && *modiag_last_error()))
    std::cerr << "modiag: " << modiag_last_error() << "\n";
  return static_cast<int>(s);
}

// Prints the string the call stored in *out and frees it. Takes out by
// reference: the call is evaluated before *out is read.
int emit(modiag_status s, char*& out) {
  if (out) {
    std::cout << out;
    modiag_string_free(out);
    out = nullptr;
  }
  return report(s);
}

std::string join(const std::vector<std::string>& v) {
  std::string r;
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? "," : "") + v[i];
  return r;
}

std::optional<DatasetPtr> open_dataset(const Globals& g, int& code) {
  std::string path = g.data;
  if (path.empty())
    if (const char* env = std::getenv("MODIAG_DATA")) path = env;
  if (path.empty()) {
    std::cerr << "modiag: usage: this subcommand needs --data <path> (or MODIAG_DATA)\n";
    code = MODIAG_ERR_USAGE;
    return std::nullopt;
  }
  modiag_dataset* raw = nullptr;
  modiag_status s = modiag_dataset_load(path.c_str(), &raw);
  if (s != MODIAG_OK) {
    code = report(s);
    return std::nullopt;
  }
  DatasetPtr ds(raw);
  if (!g.certificates.empty()) {
    s = modiag_dataset_merge_certificates(ds.get(), g.certificates.c_str());
    if (s != MODIAG_OK) {
      code = report(s);
      return std::nullopt;
    }
  }
  return ds;
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vanishing criteria for modified diagonal cycles on modular and Shimura curves"};
  app.set_version_flag("--version", std::string(modiag_version()));
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  app.add_option("--data", g.data, "dataset JSON (env MODIAG_DATA)");
  app.add_option("--certificates", g.certificates, "extra local certificates merged into the dataset");
  app.add_option("--cache-dir", g.cache_dir, "LMFDB cache directory (env MODIAG_CACHE_DIR)");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--offline", g.offline, "never touch the network (env MODIAG_OFFLINE)");

  std::string curve;
  std::vector<std::string> ramified;
  auto* check_curve = app.add_subcommand("check-curve", "decide whether a curve is good");
  check_curve->add_option("curve", curve, "curve label or alias, e.g. 217.A")->required();
  check_curve->add_option("--ramified", ramified, "ramified places of the quaternion algebra over Q")->delimiter(',');

  std::vector<std::string> labels;
  auto* check_triple = app.add_subcommand("check-triple", "decide one triple of newform orbits");
  check_triple->add_option("labels", labels, "three newform labels")->required()->expected(3);
  check_triple->add_option("--ramified", ramified, "ramified places of the quaternion algebra over Q")->delimiter(',');

  std::string kind;
  long n = 0;
  std::vector<std::string> irreps;
  auto* trilinear = app.add_subcommand("trilinear", "invariant trilinear forms of a finite group");
  trilinear->add_option("kind", kind, "cyclic or dihedral")->required();
  trilinear->add_option("n", n, "group parameter")->required();
  trilinear->add_option("irreps", irreps, "three irreducible labels")->required()->expected(3);

  std::vector<std::string> eps;
  std::vector<std::string> rn_triple;
  auto* root_number = app.add_subcommand("root-number", "global sign and supporting quaternion algebra");
  root_number->add_option("--eps", eps, "finite local sign <prime>=<+1|-1>")->delimiter(',');
  root_number->add_option("--triple", rn_triple, "read local signs of a triple from the dataset")->expected(3);

  int degree = 1;
  std::string place;
  auto* hasse = app.add_subcommand("hasse", "quaternion algebra from its ramification set");
  hasse->add_option("--ramified", ramified, "ramified places")->delimiter(',');
  hasse->add_option("--degree", degree, "degree of the totally real base field")->check(CLI::PositiveNumber);
  hasse->add_option("--place", place, "report the invariant at this place");

  std::vector<std::string> primes;
  auto* find_quadratic = app.add_subcommand("find-quadratic", "smallest real quadratic field split at given primes");
  find_quadratic->add_option("primes", primes, "odd primes")->required()->delimiter(',');

  long prime = 0;
  auto* construct = app.add_subcommand("construct", "build a vanishing certificate for a triple at a prime");
  construct->add_option("labels", labels, "three newform labels")->required()->expected(3);
  construct->add_option("--prime", prime, "prime where all three components are discrete series")->required();

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "independently check a construction certificate");
  verify->add_option("certificate", cert_path, "certificate JSON file, or - for stdin")->required();

  long level = 0;
  int weight = 2;
  auto* fetch = app.add_subcommand("fetch-lmfdb", "Atkin-Lehner data for one level, cached");
  fetch->add_option("level", level, "level N")->required()->check(CLI::PositiveNumber);
  fetch->add_option("--weight", weight, "weight")->check(CLI::PositiveNumber);

  auto* tables = app.add_subcommand("reproduce-tables", "classify every curve in the dataset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "modiag: usage: " << e.what() << "\n";
    return MODIAG_ERR_USAGE;
  }

  char* out = nullptr;
  int code = 0;

  if (check_curve->parsed()) {
    auto ds = open_dataset(g, code);
    if (!ds) return code;
    return emit(modiag_check_curve(ds->get(), curve.c_str(), join(ramified).c_str(), fmt(g), &out), out);
  }
  if (check_triple->parsed()) {
    auto ds = open_dataset(g, code);
    if (!ds) return code;
    return emit(modiag_check_triple(ds->get(), labels[0].c_str(), labels[1].c_str(), labels[2].c_str(),
                                    join(ramified).c_str(), fmt(g), &out),
                out);
  }
  if (trilinear->parsed())
    return emit(modiag_trilinear(kind.c_str(), n, irreps[0].c_str(), irreps[1].c_str(), irreps[2].c_str(), fmt(g), &out),
                out);
  if (root_number->parsed()) {
    if (!rn_triple.empty()) {
      if (!eps.empty()) {
        std::cerr << "modiag: usage: give either --eps or --triple, not both\n";
        return MODIAG_ERR_USAGE;
      }
      auto ds = open_dataset(g, code);
      if (!ds) return code;
      return emit(modiag_root_number_triple(ds->get(), rn_triple[0].c_str(), rn_triple[1].c_str(),
                                            rn_triple[2].c_str(), fmt(g), &out),
                  out);
    }
    return emit(modiag_root_number(join(eps).c_str(), fmt(g), &out), out);
  }
  if (hasse->parsed())
    return emit(modiag_hasse(degree, join(ramified).c_str(), place.empty() ? nullptr : place.c_str(), fmt(g), &out),
                out);
  if (find_quadratic->parsed()) return emit(modiag_find_quadratic(join(primes).c_str(), fmt(g), &out), out);
  if (construct->parsed()) {
    auto ds = open_dataset(g, code);
    if (!ds) return code;
    return emit(modiag_construct(ds->get(), labels[0].c_str(), labels[1].c_str(), labels[2].c_str(), prime, fmt(g),
                                 &out),
                out);
  }
  if (verify->parsed()) {
    const auto text = read_input(cert_path);
    if (!text) {
      std::cerr << "modiag: usage: cannot read " << cert_path << "\n";
      return MODIAG_ERR_USAGE;
    }
    return emit(modiag_verify(text->c_str(), fmt(g), &out), out);
  }
  if (fetch->parsed()) {
    modiag_fetch_options o{};
    o.cache_dir = g.cache_dir.empty() ? nullptr : g.cache_dir.c_str();
    o.offline = g.offline ? 1 : 0;
    return emit(modiag_fetch_lmfdb(level, weight, &o, fmt(g), &out), out);
  }
  if (tables->parsed()) {
    auto ds = open_dataset(g, code);
    if (!ds) return code;
    return emit(modiag_reproduce_tables(ds->get(), fmt(g), &out), out);
  }
  std::cerr << "modiag: usage: no subcommand\n";
  return MODIAG_ERR_USAGE;
}
