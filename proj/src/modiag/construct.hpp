#pragma once

// Split quadratic towers over a finite place, quaternion algebras with
// prescribed local invariants at degree-one places, and the vanishing
// certificate tying them to a triple of newform orbits.

#include "modiag/data.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modiag {

struct TowerDesc {
  FieldDesc base;
  int layers = 0;
  Place split_place = Place::prime(2);
  std::vector<Place> places_over;
  std::vector<bool> degree_one;
  std::optional<long> first_layer_d;

  // The top field: degree base.degree * 2^layers, totally real.
  FieldDesc field() const;
};

// Abstract tower E_r / ... / E_1 / base with 2^r degree-one places over v.
TowerDesc build_split_tower(const FieldDesc& base, const Place& v, int r);

struct SignConstraint {
  int index = 1;          // k, 1-based: the constraint lives at places_over[k-1]
  Sign forbidden = Sign::plus(); // eps_k; the algebra must have invariant != eps_k there
};

// Almost definite algebra over the tower field, split at every finite place
// outside the tower places and satisfying every constraint.
QuaternionAlgebra select_quaternion(const TowerDesc& tower, const std::vector<SignConstraint>& constraints);

struct ConstructionCertificate {
  LabelTriple inputs;
  long prime = 0;
  std::array<int, 3> hecke_degrees{1, 1, 1};
  std::array<LocalComponent, 3> components; // local types at the prime
  long n = 0;
  std::string epsilon_source; // "al-sign-product" or "certificate:<id>"
  std::vector<Sign> epsilons; // eps_k, embedding triples in lexicographic order
  TowerDesc tower;
  FieldDesc algebra_base;
  std::set<Place> ramified; // kept raw so that a corrupted set can be reported
  std::map<int, Place> witnesses;
};

ConstructionCertificate vanishing_pipeline(const Dataset& d, const LabelTriple& labels, long v);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> failed;
};

VerifyResult verify_certificate(const ConstructionCertificate& c);

nlohmann::json certificate_to_json(const ConstructionCertificate& c);
ConstructionCertificate construction_certificate_from_json(const nlohmann::json& j);

} // namespace modiag
