#include "modiag/render.hpp"

#include <sstream>

namespace modiag {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string triple_text(const LabelTriple& t) { return "(" + t[0] + ", " + t[1] + ", " + t[2] + ")"; }

std::string place_line(const TripleLocalVerdict& v) {
  std::string s = v.place.to_string() + ": " + to_string(v.outcome) + " [" + v.reason;
  if (v.epsilon) s += ", eps " + v.epsilon->to_string();
  if (v.multiplicity) s += ", D-side multiplicity " + std::to_string(*v.multiplicity);
  s += "]";
  if (!v.missing.empty()) s += " needs: " + join(v.missing, "; ");
  return s;
}

std::string conclusion_line(const TripleVerdict& v) {
  std::string s = triple_text(v.labels) + ": " + to_string(v.conclusion);
  if (v.witness) s += " at " + v.witness->to_string();
  return s;
}

json place_set(const std::set<Place>& s) {
  json a = json::array();
  for (const auto& v : s) a.push_back(v.to_string());
  return a;
}

std::string place_set_text(const std::set<Place>& s) {
  std::vector<std::string> v;
  for (const auto& p : s) v.push_back(p.to_string());
  return "{" + join(v, ", ") + "}";
}

} // namespace

json to_json(const TripleLocalVerdict& v) {
  json j{{"place", v.place.to_string()}, {"outcome", to_string(v.outcome)}, {"reason", v.reason}};
  j["epsilon"] = v.epsilon ? json(v.epsilon->value()) : json(nullptr);
  if (!v.missing.empty()) j["missing"] = v.missing;
  if (v.multiplicity) j["multiplicity"] = *v.multiplicity;
  return j;
}

json to_json(const TripleVerdict& v) {
  json places = json::array();
  for (const auto& p : v.per_place) places.push_back(to_json(p));
  json j{{"labels", v.labels}, {"conclusion", to_string(v.conclusion)}, {"places", places}};
  j["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
  if (!v.blockers.empty()) j["blockers"] = v.blockers;
  return j;
}

json to_json(const GoodnessReport& r) {
  json triples = json::array();
  for (const auto& t : r.triples) triples.push_back(to_json(t));
  return json{{"curve", r.curve},     {"level", r.level},     {"genus", r.genus},
              {"newforms", r.newforms}, {"good", to_string(r.good)}, {"consequence", r.consequence},
              {"citations", r.citations}, {"notes", r.notes},   {"triples", triples}};
}

json to_json(const TablesSummary& s) {
  json cats = json::array();
  for (const auto& c : s.categories)
    cats.push_back(json{{"category", c.category}, {"curves", c.curves}, {"good", c.good}, {"not_good", c.not_good}, {"unknown", c.unknown}});
  return json{{"categories", cats},
              {"expected_good", s.expected_good},
              {"missing", s.missing},
              {"unexpected", s.unexpected},
              {"unexpected_unknown", s.unexpected_unknown},
              {"reviewed", s.reviewed},
              {"match", s.match}};
}

json to_json(const RootNumberResult& r) {
  json local = json::object();
  for (const auto& [v, s] : r.local_signs) local[v.to_string()] = s.value();
  return json{{"local_signs", local}, {"global_sign", r.global_sign.value()}, {"l_value_forced_zero", r.l_value_forced_zero}};
}

json to_json(const FetchResult& r) {
  json orbits = json::array();
  for (const auto& o : r.orbits) {
    json al = json::object();
    for (const auto& [p, s] : o.atkin_lehner) al[std::to_string(p)] = s.value();
    json pp = json::object();
    for (const auto& [p, s] : o.atkin_lehner_prime_power) pp[std::to_string(p)] = s.value();
    orbits.push_back(json{{"label", o.label}, {"hecke_degree", o.hecke_degree}, {"atkin_lehner", al}, {"atkin_lehner_prime_power", pp}});
  }
  return json{{"level", r.level}, {"weight", r.weight}, {"status", r.status()}, {"source", r.source_url}, {"orbits", orbits}};
}

std::string render(const GoodnessReport& r, Format f) {
  if (f == Format::json) return dump(to_json(r));
  std::ostringstream os;
  os << "curve: " << r.curve << "\n";
  os << "level: " << r.level << "\n";
  os << "genus: " << r.genus << "\n";
  os << "newforms: " << join(r.newforms, ", ") << "\n";
  os << "triples: " << r.triples.size() << "\n";
  for (const auto& t : r.triples) {
    os << "  " << conclusion_line(t) << "\n";
    for (const auto& p : t.per_place) os << "    " << place_line(p) << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "good: " << to_string(r.good) << " (" << r.consequence << ")\n";
  return os.str();
}

std::string render(const TripleVerdict& v, Format f) {
  if (f == Format::json) return dump(to_json(v));
  std::ostringstream os;
  os << "triple: " << triple_text(v.labels) << "\n";
  for (const auto& p : v.per_place) os << "  " << place_line(p) << "\n";
  for (const auto& b : v.blockers) os << "blocker: " << b << "\n";
  os << "conclusion: " << to_string(v.conclusion);
  if (v.witness) os << " at " << v.witness->to_string();
  os << "\n";
  return os.str();
}

std::string render(const TablesSummary& s, Format f) {
  if (f == Format::json) return dump(to_json(s));
  std::ostringstream os;
  for (const auto& c : s.categories) {
    os << "[" << c.category << "] " << c.curves.size() << " curves\n";
    os << "  good: " << join(c.good, ", ") << "\n";
    os << "  not good: " << join(c.not_good, ", ") << "\n";
    os << "  unknown: " << join(c.unknown, ", ") << "\n";
  }
  os << "published good: " << join(s.expected_good, ", ") << "\n";
  if (!s.missing.empty()) os << "missing: " << join(s.missing, ", ") << "\n";
  if (!s.unexpected.empty()) os << "unexpected good: " << join(s.unexpected, ", ") << "\n";
  if (!s.unexpected_unknown.empty()) os << "unexpected unknown: " << join(s.unexpected_unknown, ", ") << "\n";
  if (!s.reviewed.empty()) os << "good outside the published list (review): " << join(s.reviewed, ", ") << "\n";
  os << "match: " << (s.match ? "yes" : "no") << "\n";
  return os.str();
}

std::string render(const FetchResult& r, Format f) {
  if (f == Format::json) return dump(to_json(r));
  std::ostringstream os;
  os << "level " << r.level << " weight " << r.weight << " (" << r.status() << ")\n";
  for (const auto& o : r.orbits) {
    os << "  " << o.label << " dim " << o.hecke_degree;
    for (const auto& [p, s] : o.atkin_lehner) os << " w_" << p << "=" << s.to_string();
    for (const auto& [p, s] : o.atkin_lehner_prime_power) os << " w_" << p << "^e=" << s.to_string();
    os << "\n";
  }
  return os.str();
}

std::string render(const VerifyResult& r, Format f) {
  if (f == Format::json) return dump(json{{"valid", r.ok}, {"failed", r.failed}});
  std::ostringstream os;
  os << "valid: " << (r.ok ? "true" : "false") << "\n";
  for (const auto& x : r.failed) os << "failed: " << x << "\n";
  return os.str();
}

std::string render(const ConstructionCertificate& c, Format f) {
  if (f == Format::json) return dump(certificate_to_json(c));
  std::ostringstream os;
  os << "inputs: " << triple_text(c.inputs) << " at " << c.prime << "\n";
  os << "n: " << c.n << " (" << c.hecke_degrees[0] << "*" << c.hecke_degrees[1] << "*" << c.hecke_degrees[2] << ")\n";
  os << "local signs: " << c.epsilon_source << "\n";
  os << "tower: " << c.tower.layers << " layers, " << c.tower.places_over.size() << " degree-one places over " << c.prime;
  if (c.tower.first_layer_d) os << ", first layer Q(sqrt " << *c.tower.first_layer_d << ")";
  os << "\n";
  os << "algebra over " << c.algebra_base.label << " ramified at " << place_set_text(c.ramified) << "\n";
  for (const auto& [k, v] : c.witnesses)
    os << "  k=" << k << ": " << v.to_string() << " eps_k " << c.epsilons[static_cast<std::size_t>(k - 1)].to_string()
       << ", invariant " << (c.ramified.contains(v) ? "-1" : "+1") << "\n";
  return os.str();
}

std::string render_trilinear(const GroupSpec& g, const LabelTriple& labels, long multiplicity, Format f) {
  if (f == Format::json) return dump(json{{"group", g.to_string()}, {"labels", labels}, {"multiplicity", multiplicity}});
  return "group: " + g.to_string() + "\nlabels: " + triple_text(labels) + "\nmultiplicity: " + std::to_string(multiplicity) + "\n";
}

std::string render_root_number(const RootNumberResult& r, const std::optional<QuaternionAlgebra>& support, Format f) {
  if (f == Format::json) {
    json j = to_json(r);
    j["supporting_quaternion"] = support ? json{{"ramified", place_set(support->ramified())}, {"almost_definite", is_almost_definite(*support)}}
                                         : json(nullptr);
    return dump(j);
  }
  std::ostringstream os;
  for (const auto& [v, s] : r.local_signs) os << "eps(" << v.to_string() << ") = " << s.to_string() << "\n";
  os << "global sign: " << r.global_sign.to_string() << "\n";
  os << "L-value forced zero: " << (r.l_value_forced_zero ? "yes" : "no") << "\n";
  if (support)
    os << "supporting quaternion algebra: ramified at " << place_set_text(support->ramified())
       << (is_almost_definite(*support) ? " (almost definite)" : "") << "\n";
  else
    os << "supporting quaternion algebra: none (odd candidate set)\n";
  return os.str();
}

std::string render_hasse(const QuaternionAlgebra& b, const std::optional<Place>& v, Format f) {
  if (f == Format::json) {
    json j{{"base", b.base().label}, {"ramified", place_set(b.ramified())}, {"almost_definite", is_almost_definite(b)}};
    if (v) j["invariant"] = json{{"place", v->to_string()}, {"value", hasse_invariant(b, *v).value()}};
    return dump(j);
  }
  std::ostringstream os;
  os << b.to_string() << "\n";
  os << "almost definite: " << (is_almost_definite(b) ? "yes" : "no") << "\n";
  if (v) os << "eps(" << v->to_string() << ") = " << hasse_invariant(b, *v).to_string() << "\n";
  return os.str();
}

std::string render_quadratic(const std::set<long>& primes, long d, Format f) {
  std::vector<std::string> ps;
  for (long p : primes) ps.push_back(std::to_string(p));
  if (f == Format::json) return dump(json{{"primes", primes}, {"d", d}});
  return "split at {" + join(ps, ", ") + "}: d = " + std::to_string(d) + "\n";
}

} // namespace modiag
