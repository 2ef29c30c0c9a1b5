#include "modiag/localglobal.hpp"

#include "modiag/error.hpp"

#include <algorithm>

namespace modiag {

LocalComponent LocalComponent::unramified() { return {}; }

LocalComponent LocalComponent::ramified_principal_series(bool certified, std::string certificate_id) {
  LocalComponent c;
  c.kind = Kind::ramified_ps;
  c.decidable = certified;
  c.certificate_id = std::move(certificate_id);
  return c;
}

LocalComponent LocalComponent::special(Sign al_sign) {
  LocalComponent c;
  c.kind = Kind::special;
  c.al_sign = al_sign;
  return c;
}

LocalComponent LocalComponent::dihedral(GroupSpec g, std::string label, std::string certificate_id) {
  character_table(g).index_of(label); // validates the label
  LocalComponent c;
  c.kind = Kind::supercuspidal_dihedral;
  c.group = g;
  c.label = std::move(label);
  c.certificate_id = std::move(certificate_id);
  return c;
}

LocalComponent LocalComponent::opaque(std::string certificate_id) {
  LocalComponent c;
  c.kind = Kind::supercuspidal_opaque;
  c.certificate_id = std::move(certificate_id);
  return c;
}

LocalComponent LocalComponent::unresolved_type() {
  LocalComponent c;
  c.kind = Kind::unresolved;
  return c;
}

bool LocalComponent::is_discrete_series() const {
  return kind == Kind::special || kind == Kind::supercuspidal_dihedral || kind == Kind::supercuspidal_opaque;
}

bool LocalComponent::is_known_non_discrete() const {
  return kind == Kind::unramified_ps || (kind == Kind::ramified_ps && decidable);
}

const char* to_string(LocalComponent::Kind kind) {
  switch (kind) {
  case LocalComponent::Kind::unramified_ps: return "unramified-ps";
  case LocalComponent::Kind::ramified_ps: return "ramified-ps";
  case LocalComponent::Kind::special: return "special";
  case LocalComponent::Kind::supercuspidal_dihedral: return "supercuspidal-dihedral";
  case LocalComponent::Kind::supercuspidal_opaque: return "supercuspidal-opaque";
  case LocalComponent::Kind::unresolved: return "unresolved";
  }
  return "unresolved";
}

std::string LocalComponent::describe() const {
  std::string s = to_string(kind);
  if (al_sign) s += "(" + al_sign->to_string() + ")";
  if (group) s += "(" + group->to_string() + ", " + label + ")";
  return s;
}

const char* to_string(TripleLocalVerdict::Outcome o) {
  switch (o) {
  case TripleLocalVerdict::Outcome::vanishes: return "vanishes";
  case TripleLocalVerdict::Outcome::form_exists: return "form-exists";
  case TripleLocalVerdict::Outcome::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool central_character_ok(const LocalComponent& a, const LocalComponent& b, const LocalComponent& c) {
  return a.central_character_trivial && b.central_character_trivial && c.central_character_trivial;
}

namespace {

using Outcome = TripleLocalVerdict::Outcome;

// Sets outcome and epsilon from the GL2-side Hom dimension.
void settle(TripleLocalVerdict& out, int hom_gl2, bool b_v_split) {
  out.epsilon = hom_gl2 == 1 ? Sign::plus() : Sign::minus();
  const int hom_here = b_v_split ? hom_gl2 : 1 - hom_gl2;
  out.outcome = hom_here == 0 ? Outcome::vanishes : Outcome::form_exists;
}

} // namespace

TripleLocalVerdict local_triple_verdict(const Place& v, const ComponentTriple& comps, bool b_v_split) {
  TripleLocalVerdict out;
  out.place = v;

  if (!central_character_ok(comps[0], comps[1], comps[2])) {
    out.outcome = Outcome::vanishes;
    out.reason = "central-character";
    return out;
  }

  const bool any_non_discrete =
      std::any_of(comps.begin(), comps.end(), [](const auto& c) { return c.is_known_non_discrete(); });
  if (any_non_discrete) {
    if (!b_v_split)
      fail(ErrorKind::invariant, "non-discrete-series component at place " + v.to_string() +
                                     " where the quaternion algebra is ramified");
    out.outcome = Outcome::form_exists;
    out.reason = "jl-zero";
    out.epsilon = Sign::plus();
    return out;
  }

  const bool all_special =
      std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.kind == LocalComponent::Kind::special; });
  if (all_special) {
    const Sign eps = *comps[0].al_sign * *comps[1].al_sign * *comps[2].al_sign;
    out.reason = "al-sign-product";
    settle(out, eps.is_plus() ? 1 : 0, b_v_split);
    return out;
  }

  const bool all_dihedral = std::all_of(comps.begin(), comps.end(), [&](const auto& c) {
    return c.kind == LocalComponent::Kind::supercuspidal_dihedral && c.group == comps[0].group;
  });
  if (all_dihedral) {
    const long m = trilinear_multiplicity(*comps[0].group, comps[0].label, comps[1].label, comps[2].label);
    if (m != 0 && m != 1)
      fail(ErrorKind::internal, "D-side trilinear multiplicity " + std::to_string(m) + " outside {0, 1}");
    out.reason = "dihedral-trilinear";
    out.multiplicity = m;
    settle(out, m == 1 ? 0 : 1, b_v_split);
    return out;
  }

  out.outcome = Outcome::inconclusive;
  out.reason = "missing-certificate";
  for (const auto& c : comps) {
    std::string need;
    switch (c.kind) {
    case LocalComponent::Kind::supercuspidal_opaque: need = "certificate:" + c.certificate_id; break;
    case LocalComponent::Kind::ramified_ps: need = "ramified principal series needs a certificate"; break;
    case LocalComponent::Kind::unresolved: need = "local type unresolved"; break;
    default: break;
    }
    if (!need.empty() && std::find(out.missing.begin(), out.missing.end(), need) == out.missing.end())
      out.missing.push_back(need);
  }
  std::sort(out.missing.begin(), out.missing.end());
  if (out.missing.empty()) out.missing.push_back("mixed discrete-series types need a triple certificate");
  if (!b_v_split)
    for (const auto& c : comps)
      if (c.kind == LocalComponent::Kind::ramified_ps)
        fail(ErrorKind::invariant, "ramified principal series at place " + v.to_string() +
                                       " where the quaternion algebra is ramified");
  return out;
}

TripleLocalVerdict verdict_from_homs(const Place& v, int hom_gl2, int hom_d, bool b_v_split,
                                     const std::string& certificate_id) {
  if (hom_gl2 < 0 || hom_d < 0 || hom_gl2 + hom_d != 1)
    fail(ErrorKind::invariant, "certificate " + certificate_id + ": hom_gl2 + hom_d must equal 1");
  TripleLocalVerdict out;
  out.place = v;
  out.reason = "certificate:" + certificate_id;
  settle(out, hom_gl2, b_v_split);
  return out;
}

Sign archimedean_epsilon() { return Sign::minus(); }

namespace {

RootNumberResult finish_root_number(const FieldDesc& base, std::map<Place, Sign> signs) {
  RootNumberResult r;
  for (int i = 0; i < base.real_places; ++i) signs.insert_or_assign(Place::real(i), archimedean_epsilon());
  Sign g = Sign::plus();
  for (const auto& [v, s] : signs) g = g * s;
  r.local_signs = std::move(signs);
  r.global_sign = g;
  r.l_value_forced_zero = g.is_minus();
  return r;
}

} // namespace

RootNumberResult global_root_number(const FieldDesc& base, const std::vector<TripleLocalVerdict>& finite_verdicts) {
  std::map<Place, Sign> signs;
  for (const auto& v : finite_verdicts) {
    if (v.place.is_real()) fail(ErrorKind::usage, "global_root_number: expected finite places only");
    require_place_of(base, v.place);
    if (!v.epsilon) fail(ErrorKind::incomplete, "unknown local sign at " + v.place.to_string());
    if (!signs.emplace(v.place, *v.epsilon).second)
      fail(ErrorKind::usage, "place " + v.place.to_string() + " listed twice");
  }
  return finish_root_number(base, std::move(signs));
}

RootNumberResult global_root_number(const FieldDesc& base, const std::map<Place, Sign>& finite_signs) {
  for (const auto& [v, s] : finite_signs) {
    if (v.is_real()) fail(ErrorKind::usage, "global_root_number: expected finite places only");
    require_place_of(base, v);
  }
  return finish_root_number(base, finite_signs);
}

std::optional<QuaternionAlgebra> supporting_quaternion(const FieldDesc& base,
                                                       const std::map<Place, Sign>& finite_signs) {
  std::set<Place> candidate;
  for (const auto& [v, s] : finite_signs) {
    if (v.is_real()) fail(ErrorKind::usage, "supporting_quaternion: expected finite places only");
    require_place_of(base, v);
    if (s.is_minus()) candidate.insert(v);
  }
  // eps = -1 at every real place, so every real place ramifies.
  for (int i = 0; i < base.real_places; ++i) candidate.insert(Place::real(i));
  if (candidate.size() % 2 != 0) return std::nullopt;
  return QuaternionAlgebra(base, std::move(candidate));
}

} // namespace modiag
