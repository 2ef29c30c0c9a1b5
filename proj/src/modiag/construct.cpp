#include "modiag/construct.hpp"

#include "modiag/error.hpp"

#include <algorithm>

namespace modiag {

using nlohmann::json;

FieldDesc TowerDesc::field() const {
  if (layers == 0) return base;
  const std::string label = "E[" + base.label + ";" + split_place.to_string() + ";r=" + std::to_string(layers) + "]";
  return FieldDesc::totally_real(label, base.degree << layers);
}

namespace {

std::string bare_label(const Place& v) {
  const std::string s = v.to_string();
  return s.rfind("v:", 0) == 0 ? s.substr(2) : s;
}

} // namespace

TowerDesc build_split_tower(const FieldDesc& base, const Place& v, int r) {
  if (!v.is_finite()) fail(ErrorKind::usage, "build_split_tower: the split place must be finite");
  require_place_of(base, v);
  if (r < 0 || r > 20) fail(ErrorKind::usage, "build_split_tower: layer count must lie in [0, 20]");
  TowerDesc t;
  t.base = base;
  t.layers = r;
  t.split_place = v;
  if (r == 0) {
    t.places_over = {v};
  } else {
    const long m = 1L << r;
    for (long k = 1; k <= m; ++k) t.places_over.push_back(Place::finite("v:" + bare_label(v) + "." + std::to_string(k)));
    if (base.is_rationals()) t.first_layer_d = find_real_quadratic_split({v.prime_value()});
  }
  t.degree_one.assign(t.places_over.size(), true);
  return t;
}

QuaternionAlgebra select_quaternion(const TowerDesc& tower, const std::vector<SignConstraint>& constraints) {
  const FieldDesc e = tower.field();
  const std::size_t m = tower.places_over.size();
  if (constraints.size() >= m)
    fail(ErrorKind::hypothesis, "select_quaternion: " + std::to_string(constraints.size()) + " constraints need more than " +
                                    std::to_string(m) + " places (a free place repairs parity)");
  std::set<Place> ramified;
  for (int i = 1; i < e.real_places; ++i) ramified.insert(Place::real(i));
  std::vector<bool> constrained(m, false);
  for (const auto& c : constraints) {
    if (c.index < 1 || static_cast<std::size_t>(c.index) > m)
      fail(ErrorKind::usage, "select_quaternion: constraint index " + std::to_string(c.index) + " out of range");
    if (constrained[static_cast<std::size_t>(c.index) - 1])
      fail(ErrorKind::usage, "select_quaternion: two constraints at index " + std::to_string(c.index));
    constrained[static_cast<std::size_t>(c.index) - 1] = true;
    // Invariant must differ from eps_k: ramify where eps_k = +1.
    if (c.forbidden.is_plus()) ramified.insert(tower.places_over[static_cast<std::size_t>(c.index) - 1]);
  }
  if (ramified.size() % 2 != 0) {
    const auto free = std::find(constrained.begin(), constrained.end(), false);
    ramified.insert(tower.places_over[static_cast<std::size_t>(free - constrained.begin())]);
  }
  return QuaternionAlgebra(e, std::move(ramified));
}

ConstructionCertificate vanishing_pipeline(const Dataset& d, const LabelTriple& labels, long v) {
  if (!is_prime(v)) fail(ErrorKind::usage, "vanishing_pipeline: " + std::to_string(v) + " is not prime");
  ConstructionCertificate c;
  c.inputs = labels;
  c.prime = v;
  c.n = 1;
  const Certificate* cert = d.triple_certificate(labels, v);
  for (std::size_t i = 0; i < 3; ++i) {
    const NewformOrbit& o = d.newform(labels[i]);
    c.hecke_degrees[i] = o.hecke_degree;
    c.n *= o.hecke_degree;
    c.components[i] = d.local_type(labels[i], v);
    // A nonzero Hom on the division-algebra side forces all three components
    // to be discrete series, so a triple certificate settles unresolved types.
    if (c.components[i].kind == LocalComponent::Kind::unresolved && cert && cert->hom_d > 0)
      c.components[i] = LocalComponent::opaque(cert->id);
    if (!c.components[i].is_discrete_series())
      fail(ErrorKind::hypothesis, "newform " + labels[i] + " is not discrete series at " + std::to_string(v) + " (" +
                                      c.components[i].describe() + ")");
  }

  const bool all_special = std::all_of(c.components.begin(), c.components.end(),
                                       [](const auto& x) { return x.kind == LocalComponent::Kind::special; });
  if (all_special) {
    // Atkin-Lehner signs are rational, so every embedding triple shares the sign.
    const Sign eps = *c.components[0].al_sign * *c.components[1].al_sign * *c.components[2].al_sign;
    c.epsilons.assign(static_cast<std::size_t>(c.n), eps);
    c.epsilon_source = "al-sign-product";
  } else {
    if (!cert || cert->embedding_epsilons.empty())
      fail(ErrorKind::incomplete, "per-embedding local signs at " + std::to_string(v) +
                                      " are not determined by the data; supply a triple certificate with embedding_epsilons");
    c.epsilons = cert->embedding_epsilons;
    c.epsilon_source = "certificate:" + cert->id;
  }

  int r = 0;
  while ((1L << r) <= c.n) ++r;
  c.tower = build_split_tower(FieldDesc::rationals(), Place::prime(v), r);

  std::vector<SignConstraint> constraints;
  for (long k = 1; k <= c.n; ++k) constraints.push_back({static_cast<int>(k), c.epsilons[static_cast<std::size_t>(k - 1)]});
  const QuaternionAlgebra b = select_quaternion(c.tower, constraints);
  c.algebra_base = b.base();
  c.ramified = b.ramified();
  for (long k = 1; k <= c.n; ++k) c.witnesses.emplace(static_cast<int>(k), c.tower.places_over[static_cast<std::size_t>(k - 1)]);

  const VerifyResult check = verify_certificate(c);
  if (!check.ok) fail(ErrorKind::internal, "pipeline produced a certificate failing: " + check.failed.front());
  return c;
}

VerifyResult verify_certificate(const ConstructionCertificate& c) {
  VerifyResult r;
  auto check = [&](bool cond, const std::string& name) {
    if (!cond) {
      r.ok = false;
      r.failed.push_back(name);
    }
    return cond;
  };

  check(is_prime(c.prime), "prime");
  long n = 1;
  bool degrees_ok = true;
  for (int d : c.hecke_degrees) {
    degrees_ok = degrees_ok && d >= 1;
    n *= std::max(d, 1);
  }
  check(degrees_ok, "hecke degrees positive");
  check(c.n == n, "n = product of hecke degrees");
  const bool discrete = std::all_of(c.components.begin(), c.components.end(), [](const auto& x) { return x.is_discrete_series(); });
  check(discrete, "discrete series at v");
  const bool counts_ok = check(c.n >= 1 && static_cast<long>(c.epsilons.size()) == c.n, "epsilon count");

  const bool all_special = std::all_of(c.components.begin(), c.components.end(), [](const auto& x) {
    return x.kind == LocalComponent::Kind::special && x.al_sign.has_value();
  });
  if (all_special) {
    check(c.epsilon_source == "al-sign-product", "epsilon source");
    const Sign eps = *c.components[0].al_sign * *c.components[1].al_sign * *c.components[2].al_sign;
    for (std::size_t k = 0; k < c.epsilons.size(); ++k)
      check(c.epsilons[k] == eps, "epsilon " + std::to_string(k + 1) + " = product of Atkin-Lehner signs");
  } else {
    check(c.epsilon_source.rfind("certificate:", 0) == 0, "epsilon source");
  }

  const TowerDesc& t = c.tower;
  const bool layers_ok = check(t.layers >= 0 && t.layers <= 20, "tower layers");
  const long m = layers_ok ? (1L << t.layers) : 0;
  check(static_cast<long>(t.places_over.size()) == m, "m = 2^r");
  check(m > c.n, "m > n");
  check(t.layers == 0 || (1L << (t.layers - 1)) <= c.n, "r minimal");
  check(t.degree_one.size() == t.places_over.size() &&
            std::all_of(t.degree_one.begin(), t.degree_one.end(), [](bool b) { return b; }),
        "degree-one tags");
  check(t.base.is_rationals(), "tower base");
  check(t.split_place.is_finite() && t.split_place.prime_value() == c.prime, "split place");
  check(std::set<Place>(t.places_over.begin(), t.places_over.end()).size() == t.places_over.size(), "tower places distinct");
  if (layers_ok && t.split_place.is_finite() && t.base.is_rationals() && t.split_place.prime_value() != 0)
    check(t.places_over == build_split_tower(t.base, t.split_place, t.layers).places_over, "tower place names");
  if (t.layers >= 1 && t.base.is_rationals()) {
    const bool d_ok = t.first_layer_d && *t.first_layer_d > 1 && *t.first_layer_d <= QuadraticSplitBound::max_d &&
                      is_squarefree(*t.first_layer_d) && is_prime(c.prime) &&
                      splits_in_real_quadratic(*t.first_layer_d, c.prime) &&
                      *t.first_layer_d == find_real_quadratic_split({c.prime});
    check(d_ok, "first-layer split");
  }

  FieldDesc e;
  bool field_ok = false;
  if (layers_ok) {
    try {
      e = t.field();
      field_ok = true;
    } catch (const Error&) {
    }
  }
  field_ok = check(field_ok && c.algebra_base == e && c.algebra_base.real_places == c.algebra_base.degree, "algebra base");

  bool support_ok = true;
  for (const auto& v : c.ramified) {
    if (!field_ok) break;
    try {
      require_place_of(c.algebra_base, v);
    } catch (const Error&) {
      support_ok = false;
      continue;
    }
    if (v.is_finite() && std::find(t.places_over.begin(), t.places_over.end(), v) == t.places_over.end()) support_ok = false;
  }
  check(support_ok, "ramification support");
  const bool parity_ok = check(c.ramified.size() % 2 == 0, "Hasse parity");

  if (field_ok && support_ok && parity_ok) {
    const QuaternionAlgebra b(c.algebra_base, c.ramified);
    check(is_almost_definite(b), "almost definite");
    std::set<int> keys;
    for (const auto& [k, v] : c.witnesses) keys.insert(k);
    std::set<int> want;
    for (long k = 1; k <= c.n; ++k) want.insert(static_cast<int>(k));
    check(keys == want, "witness coverage");
    for (const auto& [k, v] : c.witnesses) {
      const std::string name = "witness " + std::to_string(k);
      if (k < 1 || k > static_cast<long>(t.places_over.size()) || !(v == t.places_over[static_cast<std::size_t>(k - 1)])) {
        check(false, name + " place");
        continue;
      }
      if (counts_ok && k <= c.n) check(!(hasse_invariant(b, v) == c.epsilons[static_cast<std::size_t>(k - 1)]), name + " invariant differs from epsilon");
    }
  } else {
    check(false, "almost definite");
  }
  return r;
}

namespace {

json field_to_json(const FieldDesc& f) { return json{{"label", f.label}, {"degree", f.degree}, {"real_places", f.real_places}}; }

FieldDesc field_from_json(const json& j) {
  FieldDesc f;
  f.label = j.at("label").get<std::string>();
  f.degree = j.at("degree").get<int>();
  f.real_places = j.at("real_places").get<int>();
  return f;
}

} // namespace

json certificate_to_json(const ConstructionCertificate& c) {
  json comps = json::array();
  for (const auto& x : c.components) comps.push_back(local_component_to_json(x));
  json eps = json::array();
  for (auto s : c.epsilons) eps.push_back(s.value());
  json places = json::array();
  for (const auto& v : c.tower.places_over) places.push_back(v.to_string());
  json ramified = json::array();
  for (const auto& v : c.ramified) ramified.push_back(v.to_string());
  json witnesses = json::object();
  for (const auto& [k, v] : c.witnesses) witnesses[std::to_string(k)] = v.to_string();
  json tower{{"base", field_to_json(c.tower.base)},
             {"layers", c.tower.layers},
             {"split_place", c.tower.split_place.to_string()},
             {"places_over", places},
             {"degree_one", c.tower.degree_one}};
  if (c.tower.first_layer_d) tower["first_layer_d"] = *c.tower.first_layer_d;
  return json{{"inputs", c.inputs},
              {"prime", c.prime},
              {"hecke_degrees", c.hecke_degrees},
              {"components", comps},
              {"n", c.n},
              {"epsilon_source", c.epsilon_source},
              {"epsilons", eps},
              {"tower", tower},
              {"algebra", {{"base", field_to_json(c.algebra_base)}, {"ramified", ramified}}},
              {"witnesses", witnesses}};
}

ConstructionCertificate construction_certificate_from_json(const json& j) {
  try {
    ConstructionCertificate c;
    const auto inputs = j.at("inputs").get<std::vector<std::string>>();
    if (inputs.size() != 3) fail(ErrorKind::schema, "certificate inputs must list three labels");
    c.inputs = {inputs[0], inputs[1], inputs[2]};
    c.prime = j.at("prime").get<long>();
    const auto degrees = j.at("hecke_degrees").get<std::vector<int>>();
    if (degrees.size() != 3) fail(ErrorKind::schema, "hecke_degrees must list three values");
    c.hecke_degrees = {degrees[0], degrees[1], degrees[2]};
    const auto& comps = j.at("components");
    if (!comps.is_array() || comps.size() != 3) fail(ErrorKind::schema, "components must list three local types");
    for (std::size_t i = 0; i < 3; ++i) c.components[i] = local_component_from_json(comps[i], "components[" + std::to_string(i) + "]");
    c.n = j.at("n").get<long>();
    c.epsilon_source = j.at("epsilon_source").get<std::string>();
    for (const auto& s : j.at("epsilons")) c.epsilons.push_back(Sign::from_int(s.get<long>()));
    const auto& t = j.at("tower");
    c.tower.base = field_from_json(t.at("base"));
    c.tower.layers = t.at("layers").get<int>();
    c.tower.split_place = Place::parse(t.at("split_place").get<std::string>());
    for (const auto& v : t.at("places_over")) c.tower.places_over.push_back(Place::parse(v.get<std::string>()));
    c.tower.degree_one = t.at("degree_one").get<std::vector<bool>>();
    if (t.contains("first_layer_d")) c.tower.first_layer_d = t["first_layer_d"].get<long>();
    c.algebra_base = field_from_json(j.at("algebra").at("base"));
    for (const auto& v : j.at("algebra").at("ramified")) c.ramified.insert(Place::parse(v.get<std::string>()));
    for (const auto& [k, v] : j.at("witnesses").items()) c.witnesses.emplace(std::stoi(k), Place::parse(v.get<std::string>()));
    return c;
  } catch (const json::exception& e) {
    fail(ErrorKind::schema, std::string("construction certificate: ") + e.what());
  } catch (const std::logic_error&) {
    fail(ErrorKind::schema, "construction certificate: bad witness index");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::usage) fail(ErrorKind::schema, std::string("construction certificate: ") + e.what());
    throw;
  }
}

} // namespace modiag
