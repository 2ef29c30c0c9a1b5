#pragma once

// Local components, the trilinear-form dichotomy at a single place, and
// global root numbers.
//
// Sign convention: for three Special components with Atkin-Lehner
// eigenvalues s1, s2, s3 (eigenvalues of w_p itself), eps_v = s1*s2*s3, and
// on a split place the GL2-side form vanishes exactly when eps_v = -1.

#include "modiag/arith.hpp"
#include "modiag/repcore.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace modiag {

struct LocalComponent {
  enum class Kind {
    unramified_ps,
    ramified_ps,
    special,
    supercuspidal_dihedral,
    supercuspidal_opaque,
    unresolved // p^2 | N with no certificate naming the type
  };

  Kind kind = Kind::unramified_ps;
  bool central_character_trivial = true;
  std::optional<Sign> al_sign;   // special
  std::optional<GroupSpec> group; // supercuspidal_dihedral
  std::string label;              // supercuspidal_dihedral irrep label
  std::string certificate_id;     // certificate that resolved this entry, if any
  bool decidable = false;         // ramified_ps certified as non-discrete

  static LocalComponent unramified();
  static LocalComponent ramified_principal_series(bool certified, std::string certificate_id = {});
  static LocalComponent special(Sign al_sign);
  static LocalComponent dihedral(GroupSpec g, std::string label, std::string certificate_id = {});
  static LocalComponent opaque(std::string certificate_id);
  static LocalComponent unresolved_type();

  bool is_discrete_series() const;
  // Known to be a principal series whose JL transfer is zero.
  bool is_known_non_discrete() const;
  std::string describe() const;
  friend bool operator==(const LocalComponent&, const LocalComponent&) = default;
};

const char* to_string(LocalComponent::Kind kind);

struct TripleLocalVerdict {
  enum class Outcome { vanishes, form_exists, inconclusive };

  Place place = Place::real(0);
  Outcome outcome = Outcome::inconclusive;
  std::string reason;
  std::vector<std::string> missing;
  std::optional<Sign> epsilon;
  std::optional<long> multiplicity; // D-side trilinear multiplicity when computed
};

const char* to_string(TripleLocalVerdict::Outcome o);

bool central_character_ok(const LocalComponent& a, const LocalComponent& b, const LocalComponent& c);

using ComponentTriple = std::array<LocalComponent, 3>;

// The dichotomy at one place. Non-discrete components at a ramified place of
// B are an invariant error.
TripleLocalVerdict local_triple_verdict(const Place& v, const ComponentTriple& comps, bool b_v_split);

// Verdict from a certified pair of Hom dimensions (hom_gl2 + hom_d = 1).
TripleLocalVerdict verdict_from_homs(const Place& v, int hom_gl2, int hom_d, bool b_v_split,
                                     const std::string& certificate_id);

Sign archimedean_epsilon();

struct RootNumberResult {
  std::map<Place, Sign> local_signs;
  Sign global_sign = Sign::plus();
  bool l_value_forced_zero = false;
};

RootNumberResult global_root_number(const FieldDesc& base, const std::vector<TripleLocalVerdict>& finite_verdicts);

// Same computation from bare finite signs (unlisted places contribute +1).
RootNumberResult global_root_number(const FieldDesc& base, const std::map<Place, Sign>& finite_signs);

std::optional<QuaternionAlgebra> supporting_quaternion(const FieldDesc& base,
                                                       const std::map<Place, Sign>& finite_signs);

} // namespace modiag
