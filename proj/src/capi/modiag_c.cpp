#include "modiag.h"

#include "modiag/construct.hpp"
#include "modiag/error.hpp"
#include "modiag/goodness.hpp"
#include "modiag/lmfdb.hpp"
#include "modiag/render.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

struct modiag_dataset {
  modiag::Dataset data;
};

namespace {

using namespace modiag;

thread_local std::string last_error;

modiag_status status_of(ErrorKind k) {
  switch (k) {
  case ErrorKind::usage: return MODIAG_ERR_USAGE;
  case ErrorKind::incomplete: return MODIAG_UNKNOWN;
  case ErrorKind::network: return MODIAG_ERR_NETWORK;
  case ErrorKind::internal: return MODIAG_ERR_INTERNAL;
  case ErrorKind::parity:
  case ErrorKind::schema:
  case ErrorKind::dangling_reference:
  case ErrorKind::genus_mismatch:
  case ErrorKind::invariant:
  case ErrorKind::hypothesis: return MODIAG_ERR_DATA;
  }
  return MODIAG_ERR_INTERNAL;
}

// Runs f, translating exceptions into a status and the thread's last error.
template <class F> modiag_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    last_error = std::string(to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("schema: ") + e.what();
    return MODIAG_ERR_DATA;
  } catch (const std::bad_alloc&) {
    last_error = "internal: out of memory";
    return MODIAG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return MODIAG_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal: unknown exception";
    return MODIAG_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (!out) fail(ErrorKind::usage, "output pointer is null");
  *out = copy_out(s);
}

std::string str(const char* s, const char* what) {
  if (!s) fail(ErrorKind::usage, std::string(what) + " is null");
  return s;
}

Format format_of(modiag_format f) {
  if (f == MODIAG_FORMAT_JSON) return Format::json;
  if (f == MODIAG_FORMAT_TEXT) return Format::text;
  fail(ErrorKind::usage, "unknown output format");
}

const Dataset& data_of(const modiag_dataset* ds) {
  if (!ds) fail(ErrorKind::usage, "dataset handle is null");
  return ds->data;
}

std::vector<std::string> split_list(const char* s) {
  std::vector<std::string> out;
  if (!s) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::set<Place> places_of(const char* s) {
  std::set<Place> out;
  for (const auto& t : split_list(s)) out.insert(Place::parse(t));
  return out;
}

QuaternionAlgebra algebra_over_q(const char* ramified) {
  return QuaternionAlgebra(FieldDesc::rationals(), places_of(ramified));
}

Sign parse_sign(const std::string& t) {
  if (t == "+1" || t == "1" || t == "+") return Sign::plus();
  if (t == "-1" || t == "-") return Sign::minus();
  fail(ErrorKind::usage, "sign must be +1 or -1, got '" + t + "'");
}

long parse_long(const std::string& t, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::logic_error&) {
    fail(ErrorKind::usage, std::string(what) + ": not an integer: '" + t + "'");
  }
  if (used != t.size()) fail(ErrorKind::usage, std::string(what) + ": not an integer: '" + t + "'");
  return v;
}

LabelTriple triple(const char* a, const char* b, const char* c) {
  return {str(a, "label"), str(b, "label"), str(c, "label")};
}

} // namespace

extern "C" {

const char* modiag_version(void) { return "0.1.0"; }

const char* modiag_last_error(void) { return last_error.c_str(); }

const char* modiag_status_name(modiag_status s) {
  switch (s) {
  case MODIAG_OK: return "ok";
  case MODIAG_VERDICT_NO: return "verdict-no";
  case MODIAG_UNKNOWN: return "unknown";
  case MODIAG_ERR_USAGE: return "usage-error";
  case MODIAG_ERR_DATA: return "data-error";
  case MODIAG_ERR_NETWORK: return "network-error";
  case MODIAG_ERR_INTERNAL: return "internal-error";
  }
  return "invalid-status";
}

void modiag_string_free(char* s) { std::free(s); }

modiag_status modiag_dataset_load(const char* path, modiag_dataset** out) {
  return guarded([&] {
    if (!out) fail(ErrorKind::usage, "output pointer is null");
    *out = new modiag_dataset{load_dataset(str(path, "path"))};
    return MODIAG_OK;
  });
}

modiag_status modiag_dataset_parse(const char* json_text, modiag_dataset** out) {
  return guarded([&] {
    if (!out) fail(ErrorKind::usage, "output pointer is null");
    *out = new modiag_dataset{Dataset::from_string(str(json_text, "json text"))};
    return MODIAG_OK;
  });
}

modiag_status modiag_dataset_empty(modiag_dataset** out) {
  return guarded([&] {
    if (!out) fail(ErrorKind::usage, "output pointer is null");
    *out = new modiag_dataset{};
    return MODIAG_OK;
  });
}

void modiag_dataset_free(modiag_dataset* ds) { delete ds; }

modiag_status modiag_dataset_merge_certificates(modiag_dataset* ds, const char* path) {
  return guarded([&] {
    if (!ds) fail(ErrorKind::usage, "dataset handle is null");
    // Validate on a copy so a rejected file leaves the handle untouched.
    Dataset copy = ds->data;
    copy.merge_certificates(load_certificates(str(path, "path")));
    ds->data = std::move(copy);
    return MODIAG_OK;
  });
}

modiag_status modiag_dataset_clear_certificates(modiag_dataset* ds) {
  return guarded([&] {
    if (!ds) fail(ErrorKind::usage, "dataset handle is null");
    ds->data.clear_certificates();
    return MODIAG_OK;
  });
}

modiag_status modiag_dataset_dump(const modiag_dataset* ds, char** out) {
  return guarded([&] {
    put(out, data_of(ds).dump());
    return MODIAG_OK;
  });
}

modiag_status modiag_check_curve(const modiag_dataset* ds, const char* curve, const char* ramified, modiag_format fmt,
                                 char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    const GoodnessReport r = check_curve(data_of(ds), str(curve, "curve"), algebra_over_q(ramified));
    put(out, render(r, f));
    return r.good == Goodness::yes ? MODIAG_OK : r.good == Goodness::no ? MODIAG_VERDICT_NO : MODIAG_UNKNOWN;
  });
}

modiag_status modiag_check_triple(const modiag_dataset* ds, const char* a, const char* b, const char* c,
                                  const char* ramified, modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    const TripleVerdict v = check_triple(data_of(ds), triple(a, b, c), algebra_over_q(ramified));
    put(out, render(v, f));
    switch (v.conclusion) {
    case TripleVerdict::Conclusion::vanishes: return MODIAG_OK;
    case TripleVerdict::Conclusion::form_exists: return MODIAG_VERDICT_NO;
    case TripleVerdict::Conclusion::unknown: return MODIAG_UNKNOWN;
    }
    return MODIAG_UNKNOWN;
  });
}

modiag_status modiag_reproduce_tables(const modiag_dataset* ds, modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    const TablesSummary s = reproduce_tables(data_of(ds));
    put(out, render(s, f));
    return s.match ? MODIAG_OK : MODIAG_VERDICT_NO;
  });
}

modiag_status modiag_trilinear(const char* group_kind, long n, const char* a, const char* b, const char* c,
                               modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    const GroupSpec g = parse_group(str(group_kind, "group kind"), n);
    const LabelTriple t = triple(a, b, c);
    const long m = trilinear_multiplicity(g, t[0], t[1], t[2]);
    put(out, render_trilinear(g, t, m, f));
    return MODIAG_OK;
  });
}

modiag_status modiag_root_number(const char* signs, modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    std::map<Place, Sign> eps;
    for (const auto& item : split_list(signs)) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) fail(ErrorKind::usage, "expected <place>=<sign>, got '" + item + "'");
      const Place v = Place::parse(item.substr(0, eq));
      if (!v.is_finite()) fail(ErrorKind::usage, "real places always contribute -1; list finite places only");
      require_place_of(FieldDesc::rationals(), v);
      if (!eps.emplace(v, parse_sign(item.substr(eq + 1))).second)
        fail(ErrorKind::usage, "place listed twice: " + v.to_string());
    }
    const FieldDesc q = FieldDesc::rationals();
    put(out, render_root_number(global_root_number(q, eps), supporting_quaternion(q, eps), f));
    return MODIAG_OK;
  });
}

modiag_status modiag_root_number_triple(const modiag_dataset* ds, const char* a, const char* b, const char* c,
                                        modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    const Dataset& d = data_of(ds);
    const LabelTriple t = canonical_triple(triple(a, b, c));
    // Local signs need no algebra choice: read them off the split-side verdict.
    const TripleVerdict v = check_triple(d, t, QuaternionAlgebra::matrix_algebra(FieldDesc::rationals()));
    const FieldDesc q = FieldDesc::rationals();
    const RootNumberResult r = global_root_number(q, v.per_place);
    std::map<Place, Sign> finite;
    for (const auto& [place, s] : r.local_signs)
      if (place.is_finite()) finite.emplace(place, s);
    put(out, render_root_number(r, supporting_quaternion(q, finite), f));
    return MODIAG_OK;
  });
}

modiag_status modiag_hasse(int degree, const char* ramified, const char* place, modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    if (degree < 1) fail(ErrorKind::usage, "field degree must be positive");
    const FieldDesc base = degree == 1 ? FieldDesc::rationals() : FieldDesc::totally_real("F", degree);
    std::set<Place> ram = places_of(ramified);
    for (const auto& v : ram) require_place_of(base, v);
    const QuaternionAlgebra b(base, ram);
    std::optional<Place> v;
    if (place && *place) {
      v = Place::parse(place);
      require_place_of(base, *v);
    }
    put(out, render_hasse(b, v, f));
    return MODIAG_OK;
  });
}

modiag_status modiag_find_quadratic(const char* primes, modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    std::set<long> ps;
    for (const auto& t : split_list(primes)) ps.insert(parse_long(t, "prime"));
    put(out, render_quadratic(ps, find_real_quadratic_split(ps), f));
    return MODIAG_OK;
  });
}

modiag_status modiag_construct(const modiag_dataset* ds, const char* a, const char* b, const char* c, long prime,
                               modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    const ConstructionCertificate cert = vanishing_pipeline(data_of(ds), triple(a, b, c), prime);
    put(out, render(cert, f));
    return MODIAG_OK;
  });
}

modiag_status modiag_verify(const char* certificate_json, modiag_format fmt, char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(str(certificate_json, "certificate"));
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorKind::schema, std::string("certificate is not valid JSON: ") + e.what());
    }
    const VerifyResult r = verify_certificate(construction_certificate_from_json(j));
    put(out, render(r, f));
    return r.ok ? MODIAG_OK : MODIAG_VERDICT_NO;
  });
}

modiag_status modiag_fetch_lmfdb(long level, int weight, const modiag_fetch_options* options, modiag_format fmt,
                                 char** out) {
  return guarded([&] {
    const Format f = format_of(fmt);
    FetchOptions o = FetchOptions::from_environment();
    if (options) {
      if (options->cache_dir) o.cache_dir = options->cache_dir;
      if (options->base_url) o.base_url = options->base_url;
      if (options->offline) o.offline = true;
    }
    put(out, render(lmfdb_fetch(level, weight, o), f));
    return MODIAG_OK;
  });
}

} // extern "C"
