#include "modiag/data.hpp"

#include "modiag/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace modiag {

using nlohmann::json;

const char* to_string(Certificate::Payload p) {
  switch (p) {
  case Certificate::Payload::dihedral: return "dihedral";
  case Certificate::Payload::direct: return "direct";
  case Certificate::Payload::principal_series: return "principal_series";
  case Certificate::Payload::supercuspidal: return "supercuspidal";
  }
  return "direct";
}

LabelTriple canonical_triple(LabelTriple t) {
  std::sort(t.begin(), t.end());
  return t;
}

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  fail(ErrorKind::schema, where + ": " + what);
}

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* key) { return k == key; }))
      schema_error(where, "unknown field \"" + k + "\"");
}

const json& field(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) schema_error(where, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string get_string(const json& j, const std::string& where, const char* key) {
  const json& v = field(j, where, key);
  if (!v.is_string()) schema_error(where, std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

long get_long(const json& j, const std::string& where, const char* key) {
  const json& v = field(j, where, key);
  if (!v.is_number_integer()) schema_error(where, std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

bool get_bool(const json& j, const std::string& where, const char* key) {
  const json& v = field(j, where, key);
  if (!v.is_boolean()) schema_error(where, std::string("field \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

Sign get_sign(const json& v, const std::string& where) {
  if (!v.is_number_integer() || (v.get<long>() != 1 && v.get<long>() != -1))
    schema_error(where, "sign must be 1 or -1");
  return Sign::from_int(v.get<long>());
}

long parse_prime_key(const std::string& key, const std::string& where) {
  if (key.empty() || key.size() > 12 || !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); }))
    schema_error(where, "key \"" + key + "\" is not a prime");
  const long p = std::stol(key);
  if (!is_prime(p)) schema_error(where, "key \"" + key + "\" is not a prime");
  return p;
}

std::map<long, Sign> parse_sign_map(const json& j, const std::string& where) {
  require_object(j, where);
  std::map<long, Sign> out;
  for (const auto& [k, v] : j.items()) out.emplace(parse_prime_key(k, where), get_sign(v, where + "." + k));
  return out;
}

json sign_map_to_json(const std::map<long, Sign>& m) {
  json j = json::object();
  for (const auto& [p, s] : m) j[std::to_string(p)] = s.value();
  return j;
}

GroupSpec parse_group_json(const json& j, const std::string& where) {
  require_object(j, where);
  allow_keys(j, where, {"kind", "n"});
  try {
    return parse_group(get_string(j, where, "kind"), get_long(j, where, "n"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::usage) schema_error(where, e.what());
    throw;
  }
}

json group_to_json(const GroupSpec& g) {
  return json{{"kind", g.kind == GroupSpec::Kind::cyclic ? "cyclic" : "dihedral"}, {"n", g.n}};
}

void check_rep(const GroupSpec& g, const std::string& rep, const std::string& where) {
  try {
    character_table(g).index_of(rep);
  } catch (const Error&) {
    schema_error(where, "irrep \"" + rep + "\" does not belong to " + g.to_string());
  }
}

std::vector<std::string> get_string_list(const json& j, const std::string& where, const char* key) {
  const json& v = field(j, where, key);
  if (!v.is_array()) schema_error(where, std::string("field \"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) schema_error(where, std::string("field \"") + key + "\" must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

NewformOrbit parse_newform(const json& j, std::size_t index) {
  std::string where = "newforms[" + std::to_string(index) + "]";
  require_object(j, where);
  NewformOrbit o;
  o.label = get_string(j, where, "label");
  where = "newform " + o.label;
  allow_keys(j, where,
             {"label", "level", "weight", "hecke_degree", "nebentypus_trivial", "atkin_lehner",
              "atkin_lehner_prime_power", "local_types", "provenance"});
  o.level = get_long(j, where, "level");
  o.weight = static_cast<int>(get_long(j, where, "weight"));
  o.hecke_degree = static_cast<int>(get_long(j, where, "hecke_degree"));
  o.nebentypus_trivial = get_bool(j, where, "nebentypus_trivial");
  o.atkin_lehner = parse_sign_map(field(j, where, "atkin_lehner"), where + ".atkin_lehner");
  if (j.contains("atkin_lehner_prime_power"))
    o.atkin_lehner_prime_power = parse_sign_map(j["atkin_lehner_prime_power"], where + ".atkin_lehner_prime_power");
  if (j.contains("local_types")) {
    require_object(j["local_types"], where + ".local_types");
    for (const auto& [k, v] : j["local_types"].items())
      o.local_types.emplace(parse_prime_key(k, where + ".local_types"),
                            local_component_from_json(v, where + ".local_types." + k));
  }
  if (j.contains("provenance")) o.provenance = j["provenance"];
  return o;
}

json newform_to_json(const NewformOrbit& o) {
  json j{{"label", o.label},
         {"level", o.level},
         {"weight", o.weight},
         {"hecke_degree", o.hecke_degree},
         {"nebentypus_trivial", o.nebentypus_trivial},
         {"atkin_lehner", sign_map_to_json(o.atkin_lehner)}};
  if (!o.atkin_lehner_prime_power.empty()) j["atkin_lehner_prime_power"] = sign_map_to_json(o.atkin_lehner_prime_power);
  if (!o.local_types.empty()) {
    json lt = json::object();
    for (const auto& [p, c] : o.local_types) lt[std::to_string(p)] = local_component_to_json(c);
    j["local_types"] = lt;
  }
  if (!o.provenance.is_null()) j["provenance"] = o.provenance;
  return j;
}

CurveRecord parse_curve(const json& j, std::size_t index) {
  std::string where = "curves[" + std::to_string(index) + "]";
  require_object(j, where);
  CurveRecord c;
  c.label = get_string(j, where, "label");
  where = "curve " + c.label;
  allow_keys(j, where, {"label", "level", "genus", "newforms", "aliases", "category", "expected_unknown", "provenance"});
  c.level = get_long(j, where, "level");
  c.genus = static_cast<int>(get_long(j, where, "genus"));
  c.newforms = get_string_list(j, where, "newforms");
  if (j.contains("aliases")) c.aliases = get_string_list(j, where, "aliases");
  if (j.contains("category")) c.category = get_string(j, where, "category");
  if (j.contains("expected_unknown")) c.expected_unknown = get_bool(j, where, "expected_unknown");
  if (j.contains("provenance")) c.provenance = j["provenance"];
  return c;
}

json curve_to_json(const CurveRecord& c) {
  json j{{"label", c.label}, {"level", c.level}, {"genus", c.genus}, {"newforms", c.newforms}};
  if (!c.aliases.empty()) j["aliases"] = c.aliases;
  if (!c.category.empty()) j["category"] = c.category;
  if (c.expected_unknown) j["expected_unknown"] = true;
  if (!c.provenance.is_null()) j["provenance"] = c.provenance;
  return j;
}

Certificate parse_certificate(const json& j, std::size_t index) {
  std::string where = "certificates[" + std::to_string(index) + "]";
  require_object(j, where);
  Certificate c;
  c.id = get_string(j, where, "id");
  where = "certificate " + c.id;
  allow_keys(j, where, {"id", "scope", "payload", "provenance"});
  const json& scope = field(j, where, "scope");
  require_object(scope, where + ".scope");
  allow_keys(scope, where + ".scope", {"newform", "triple", "prime"});
  c.prime = get_long(scope, where + ".scope", "prime");
  if (!is_prime(c.prime)) schema_error(where + ".scope", "prime is not a prime");
  if (scope.contains("newform") == scope.contains("triple"))
    schema_error(where + ".scope", "exactly one of \"newform\" and \"triple\" is required");
  if (scope.contains("newform")) {
    c.labels = {get_string(scope, where + ".scope", "newform")};
  } else {
    c.labels = get_string_list(scope, where + ".scope", "triple");
    if (c.labels.size() != 3) schema_error(where + ".scope", "triple must list three labels");
    std::sort(c.labels.begin(), c.labels.end());
  }

  const json& payload = field(j, where, "payload");
  const std::string pw = where + ".payload";
  require_object(payload, pw);
  const std::string kind = get_string(payload, pw, "kind");
  if (kind == "dihedral") {
    allow_keys(payload, pw, {"kind", "group", "rep"});
    c.payload = Certificate::Payload::dihedral;
    c.group = parse_group_json(field(payload, pw, "group"), pw + ".group");
    c.rep = get_string(payload, pw, "rep");
    check_rep(*c.group, c.rep, pw);
    if (c.is_triple()) schema_error(pw, "dihedral payloads attach to a single newform");
  } else if (kind == "direct") {
    allow_keys(payload, pw, {"kind", "hom_gl2", "hom_d", "embedding_epsilons"});
    c.payload = Certificate::Payload::direct;
    c.hom_gl2 = static_cast<int>(get_long(payload, pw, "hom_gl2"));
    c.hom_d = static_cast<int>(get_long(payload, pw, "hom_d"));
    if (!c.is_triple()) schema_error(pw, "direct payloads attach to a triple");
  } else if (kind == "principal_series" || kind == "supercuspidal") {
    allow_keys(payload, pw, {"kind"});
    c.payload = kind == "principal_series" ? Certificate::Payload::principal_series : Certificate::Payload::supercuspidal;
    if (c.is_triple()) schema_error(pw, kind + " payloads attach to a single newform");
  } else {
    schema_error(pw, "unknown payload kind \"" + kind + "\"");
  }
  if (payload.contains("embedding_epsilons")) {
    const json& e = payload["embedding_epsilons"];
    if (!e.is_array()) schema_error(pw, "embedding_epsilons must be an array");
    for (const auto& s : e) c.embedding_epsilons.push_back(get_sign(s, pw + ".embedding_epsilons"));
  }
  if (j.contains("provenance")) c.provenance = j["provenance"];
  return c;
}

} // namespace

json certificate_to_json(const Certificate& c) {
  json scope{{"prime", c.prime}};
  if (c.is_triple())
    scope["triple"] = c.labels;
  else
    scope["newform"] = c.labels.front();
  json payload{{"kind", to_string(c.payload)}};
  if (c.payload == Certificate::Payload::dihedral) {
    payload["group"] = group_to_json(*c.group);
    payload["rep"] = c.rep;
  }
  if (c.payload == Certificate::Payload::direct) {
    payload["hom_gl2"] = c.hom_gl2;
    payload["hom_d"] = c.hom_d;
  }
  if (!c.embedding_epsilons.empty()) {
    json e = json::array();
    for (auto s : c.embedding_epsilons) e.push_back(s.value());
    payload["embedding_epsilons"] = e;
  }
  json j{{"id", c.id}, {"scope", scope}, {"payload", payload}};
  if (!c.provenance.is_null()) j["provenance"] = c.provenance;
  return j;
}

json local_component_to_json(const LocalComponent& c) {
  json j{{"kind", to_string(c.kind)}};
  if (c.al_sign) j["al_sign"] = c.al_sign->value();
  if (c.group) {
    j["group"] = group_to_json(*c.group);
    j["rep"] = c.label;
  }
  if (!c.certificate_id.empty()) j["certificate"] = c.certificate_id;
  if (c.kind == LocalComponent::Kind::ramified_ps) j["decidable"] = c.decidable;
  if (!c.central_character_trivial) j["central_character_trivial"] = false;
  return j;
}

LocalComponent local_component_from_json(const json& j, const std::string& where) {
  require_object(j, where);
  allow_keys(j, where, {"kind", "al_sign", "group", "rep", "certificate", "decidable", "central_character_trivial"});
  const std::string kind = get_string(j, where, "kind");
  LocalComponent c;
  if (kind == "unramified-ps") {
    c = LocalComponent::unramified();
  } else if (kind == "ramified-ps") {
    c = LocalComponent::ramified_principal_series(j.contains("decidable") && get_bool(j, where, "decidable"));
  } else if (kind == "special") {
    c = LocalComponent::special(get_sign(field(j, where, "al_sign"), where + ".al_sign"));
  } else if (kind == "supercuspidal-dihedral") {
    const GroupSpec g = parse_group_json(field(j, where, "group"), where + ".group");
    const std::string rep = get_string(j, where, "rep");
    check_rep(g, rep, where);
    c = LocalComponent::dihedral(g, rep);
  } else if (kind == "supercuspidal-opaque") {
    c = LocalComponent::opaque(get_string(j, where, "certificate"));
  } else if (kind == "unresolved") {
    c = LocalComponent::unresolved_type();
  } else {
    schema_error(where, "unknown local type \"" + kind + "\"");
  }
  if (j.contains("certificate")) c.certificate_id = get_string(j, where, "certificate");
  if (j.contains("central_character_trivial")) c.central_character_trivial = get_bool(j, where, "central_character_trivial");
  return c;
}

NewformOrbit infer_local_types(const NewformOrbit& orbit) {
  NewformOrbit out = orbit;
  for (const auto& [p, e] : factorize(orbit.level)) {
    if (out.local_types.contains(p)) continue;
    if (e == 1) {
      auto s = orbit.atkin_lehner.find(p);
      if (s == orbit.atkin_lehner.end())
        fail(ErrorKind::invariant, "newform " + orbit.label + ": no Atkin-Lehner sign at " + std::to_string(p));
      out.local_types.emplace(p, LocalComponent::special(s->second));
    } else {
      out.local_types.emplace(p, LocalComponent::unresolved_type());
    }
  }
  return out;
}

Dataset Dataset::from_json(const json& j) {
  require_object(j, "dataset");
  allow_keys(j, "dataset", {"curves", "newforms", "certificates", "meta"});
  Dataset d;
  for (const char* key : {"curves", "newforms", "certificates"})
    if (j.contains(key) && !j[key].is_array()) schema_error("dataset", std::string("\"") + key + "\" must be an array");
  if (j.contains("newforms"))
    for (std::size_t i = 0; i < j["newforms"].size(); ++i) d.newforms_.push_back(parse_newform(j["newforms"][i], i));
  if (j.contains("curves"))
    for (std::size_t i = 0; i < j["curves"].size(); ++i) d.curves_.push_back(parse_curve(j["curves"][i], i));
  if (j.contains("certificates"))
    for (std::size_t i = 0; i < j["certificates"].size(); ++i)
      d.certificates_.push_back(parse_certificate(j["certificates"][i], i));
  if (j.contains("meta")) {
    require_object(j["meta"], "dataset.meta");
    d.meta_ = j["meta"];
  }
  d.index_and_validate();
  return d;
}

Dataset Dataset::from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::schema, std::string("dataset is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

Dataset Dataset::build(std::vector<NewformOrbit> newforms, std::vector<CurveRecord> curves,
                       std::vector<Certificate> certificates, json meta) {
  Dataset d;
  d.newforms_ = std::move(newforms);
  d.curves_ = std::move(curves);
  d.certificates_ = std::move(certificates);
  d.meta_ = std::move(meta);
  d.index_and_validate();
  return d;
}

json Dataset::to_json() const {
  json j{{"meta", meta_}, {"newforms", json::array()}, {"curves", json::array()}, {"certificates", json::array()}};
  for (const auto& o : newforms_) j["newforms"].push_back(newform_to_json(o));
  for (const auto& c : curves_) j["curves"].push_back(curve_to_json(c));
  for (const auto& c : certificates_) j["certificates"].push_back(certificate_to_json(c));
  return j;
}

std::string Dataset::dump() const { return to_json().dump(2) + "\n"; }

void Dataset::index_and_validate() {
  newform_index_.clear();
  curve_index_.clear();
  newform_certs_.clear();
  triple_certs_.clear();

  for (std::size_t i = 0; i < newforms_.size(); ++i) {
    const auto& o = newforms_[i];
    const std::string where = "newform " + o.label;
    if (!newform_index_.emplace(o.label, i).second) fail(ErrorKind::invariant, where + ": duplicate label");
    if (o.level < 1) fail(ErrorKind::invariant, where + ": level must be positive");
    if (o.label.rfind(std::to_string(o.level) + ".", 0) != 0)
      fail(ErrorKind::invariant, where + ": label does not start with its level " + std::to_string(o.level));
    if (o.weight != 2) fail(ErrorKind::invariant, where + ": weight " + std::to_string(o.weight) + " is out of scope");
    if (!o.nebentypus_trivial) fail(ErrorKind::invariant, where + ": nontrivial nebentypus is out of scope");
    if (o.hecke_degree < 1) fail(ErrorKind::invariant, where + ": hecke_degree must be >= 1");
    const auto fac = factorize(o.level);
    std::set<long> expected_al;
    for (const auto& [p, e] : fac)
      if (e == 1) expected_al.insert(p);
    for (const auto& [p, c] : o.local_types) {
      if (!fac.contains(p) && c.kind != LocalComponent::Kind::unramified_ps)
        fail(ErrorKind::invariant, where + ".local_types: ramified type declared at " + std::to_string(p) + " which does not divide the level");
      if (c.kind == LocalComponent::Kind::special) {
        expected_al.insert(p);
        auto s = o.atkin_lehner.find(p);
        if (s != o.atkin_lehner.end() && s->second != *c.al_sign)
          fail(ErrorKind::invariant, where + ".local_types: Special sign at " + std::to_string(p) + " disagrees with atkin_lehner");
      }
    }
    std::set<long> keys;
    for (const auto& [p, s] : o.atkin_lehner) keys.insert(p);
    if (keys != expected_al)
      fail(ErrorKind::invariant, where + ".atkin_lehner: keys must be exactly the primes p with p || level (or declared Special)");
    for (const auto& [p, s] : o.atkin_lehner_prime_power)
      if (!fac.contains(p) || fac.at(p) < 2)
        fail(ErrorKind::invariant, where + ".atkin_lehner_prime_power: " + std::to_string(p) + " is not a prime with p^2 | level");
  }

  auto register_curve_name = [&](const std::string& name, std::size_t i, const std::string& where) {
    if (!curve_index_.emplace(name, i).second) fail(ErrorKind::invariant, where + ": label or alias \"" + name + "\" used twice");
  };
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    const auto& c = curves_[i];
    const std::string where = "curve " + c.label;
    register_curve_name(c.label, i, where);
    for (const auto& a : c.aliases) register_curve_name(a, i, where);
    if (c.genus < 0) fail(ErrorKind::invariant, where + ": genus must be nonnegative");
    static const std::set<std::string> categories{"", "squarefree", "p-exact", "p-squared", "remaining"};
    if (!categories.contains(c.category)) fail(ErrorKind::schema, where + ": unknown category \"" + c.category + "\"");
    long total = 0;
    std::set<std::string> seen;
    for (const auto& l : c.newforms) {
      auto it = newform_index_.find(l);
      if (it == newform_index_.end()) fail(ErrorKind::dangling_reference, where + ".newforms: unknown newform " + l);
      if (!seen.insert(l).second) fail(ErrorKind::invariant, where + ".newforms: " + l + " listed twice");
      const auto& o = newforms_[it->second];
      if (o.level != c.level)
        fail(ErrorKind::invariant, where + ".newforms: " + l + " has level " + std::to_string(o.level) + ", curve has " + std::to_string(c.level));
      total += o.hecke_degree;
    }
    if (total != c.genus)
      fail(ErrorKind::genus_mismatch, where + ": hecke degrees sum to " + std::to_string(total) + " but genus is " + std::to_string(c.genus));
  }

  std::set<std::string> ids;
  for (std::size_t i = 0; i < certificates_.size(); ++i) {
    auto& c = certificates_[i];
    const std::string where = "certificate " + c.id;
    if (!ids.insert(c.id).second) fail(ErrorKind::invariant, where + ": duplicate id");
    bool divides_some = false;
    long degree_product = 1;
    for (const auto& l : c.labels) {
      auto it = newform_index_.find(l);
      if (it == newform_index_.end()) fail(ErrorKind::dangling_reference, where + ".scope: unknown newform " + l);
      if (newforms_[it->second].level % c.prime == 0) divides_some = true;
      degree_product *= newforms_[it->second].hecke_degree;
    }
    if (!divides_some) fail(ErrorKind::invariant, where + ".scope: prime " + std::to_string(c.prime) + " divides no level in scope");
    if (c.payload == Certificate::Payload::direct && (c.hom_gl2 < 0 || c.hom_d < 0 || c.hom_gl2 + c.hom_d != 1))
      fail(ErrorKind::invariant, where + ".payload: hom_gl2 + hom_d must equal 1");
    if (!c.embedding_epsilons.empty()) {
      if (!c.is_triple()) fail(ErrorKind::invariant, where + ".payload: embedding_epsilons need a triple scope");
      if (static_cast<long>(c.embedding_epsilons.size()) != degree_product)
        fail(ErrorKind::invariant, where + ".payload: embedding_epsilons must list " + std::to_string(degree_product) + " signs");
    }
    if (c.is_triple()) {
      LabelTriple t{c.labels[0], c.labels[1], c.labels[2]};
      if (!triple_certs_.emplace(std::make_pair(canonical_triple(t), c.prime), i).second)
        fail(ErrorKind::invariant, where + ": another certificate already covers this triple and prime");
    } else {
      if (!newform_certs_.emplace(std::make_pair(c.labels.front(), c.prime), i).second)
        fail(ErrorKind::invariant, where + ": another certificate already covers this newform and prime");
    }
  }
}

const NewformOrbit& Dataset::newform(const std::string& label) const {
  auto it = newform_index_.find(label);
  if (it == newform_index_.end()) fail(ErrorKind::usage, "unknown newform " + label);
  return newforms_[it->second];
}

const CurveRecord& Dataset::curve(const std::string& label) const {
  auto it = curve_index_.find(label);
  if (it == curve_index_.end()) fail(ErrorKind::usage, "unknown curve " + label);
  return curves_[it->second];
}

bool Dataset::has_curve(const std::string& label) const { return curve_index_.contains(label); }

LocalComponent Dataset::local_type(const std::string& newform_label, long p) const {
  const NewformOrbit& o = newform(newform_label);
  LocalComponent c;
  if (auto it = newform_certs_.find({newform_label, p}); it != newform_certs_.end()) {
    const Certificate& cert = certificates_[it->second];
    switch (cert.payload) {
    case Certificate::Payload::dihedral: c = LocalComponent::dihedral(*cert.group, cert.rep, cert.id); break;
    case Certificate::Payload::principal_series: c = LocalComponent::ramified_principal_series(true, cert.id); break;
    case Certificate::Payload::supercuspidal: c = LocalComponent::opaque(cert.id); break;
    case Certificate::Payload::direct: fail(ErrorKind::internal, "direct certificate in newform scope");
    }
  } else if (auto d = o.local_types.find(p); d != o.local_types.end()) {
    c = d->second;
  } else if (o.level % p != 0) {
    c = LocalComponent::unramified();
  } else {
    c = infer_local_types(o).local_types.at(p);
  }
  c.central_character_trivial = c.central_character_trivial && o.nebentypus_trivial;
  return c;
}

const Certificate* Dataset::triple_certificate(const LabelTriple& labels, long p) const {
  auto it = triple_certs_.find({canonical_triple(labels), p});
  return it == triple_certs_.end() ? nullptr : &certificates_[it->second];
}

void Dataset::merge_certificates(const std::vector<Certificate>& certs) {
  Dataset next = *this;
  next.certificates_.insert(next.certificates_.end(), certs.begin(), certs.end());
  next.index_and_validate();
  *this = std::move(next);
}

void Dataset::clear_certificates() {
  certificates_.clear();
  index_and_validate();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::schema, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

Dataset load_dataset(const std::string& path) { return Dataset::from_string(read_file(path)); }

std::vector<Certificate> parse_certificates(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    allow_keys(j, "certificate file", {"certificates", "meta"});
    arr = &field(j, "certificate file", "certificates");
  }
  if (!arr->is_array()) schema_error("certificate file", "expected an array of certificates");
  std::vector<Certificate> out;
  for (std::size_t i = 0; i < arr->size(); ++i) out.push_back(parse_certificate((*arr)[i], i));
  return out;
}

std::vector<Certificate> load_certificates(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(ErrorKind::schema, path + " is not valid JSON: " + e.what());
  }
  return parse_certificates(j);
}

} // namespace modiag
