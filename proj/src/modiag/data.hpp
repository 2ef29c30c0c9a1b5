#pragma once

// Newform orbits, curve compositions and certificates, loaded from the JSON
// dataset format documented in docs/dataset-schema.md.
//
// Atkin-Lehner signs are eigenvalues of the involution w_p itself (the
// "atkin_lehner_eigenvals" convention of the LMFDB).

#include "modiag/localglobal.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modiag {

struct NewformOrbit {
  std::string label;
  long level = 1;
  int weight = 2;
  int hecke_degree = 1;
  bool nebentypus_trivial = true;
  std::map<long, Sign> atkin_lehner;            // p || N (and declared Special)
  std::map<long, Sign> atkin_lehner_prime_power; // eigenvalue of w_{p^e} for p^2 | N; informational
  std::map<long, LocalComponent> local_types;   // declared entries only
  nlohmann::json provenance;                    // free-form, kept verbatim
};

struct CurveRecord {
  std::string label;
  long level = 1;
  int genus = 0;
  std::vector<std::string> newforms;
  std::vector<std::string> aliases;
  std::string category; // "squarefree", "p-exact", "p-squared", "remaining" or empty
  bool expected_unknown = false;
  nlohmann::json provenance;
};

struct Certificate {
  enum class Payload { dihedral, direct, principal_series, supercuspidal };

  std::string id;
  std::vector<std::string> labels; // one newform, or three (a multiset)
  long prime = 0;
  Payload payload = Payload::direct;
  std::optional<GroupSpec> group;
  std::string rep;
  int hom_gl2 = 0;
  int hom_d = 0;
  std::vector<Sign> embedding_epsilons; // optional, triple scope only
  nlohmann::json provenance;

  bool is_triple() const { return labels.size() == 3; }
};

const char* to_string(Certificate::Payload p);

using LabelTriple = std::array<std::string, 3>;

// Sorted copy; triples are multisets.
LabelTriple canonical_triple(LabelTriple t);

class Dataset {
public:
  Dataset() = default;

  // Validates everything; throws Error with a kind naming the violation and
  // a message naming the record and field.
  static Dataset from_json(const nlohmann::json& j);
  static Dataset from_string(const std::string& text);

  nlohmann::json to_json() const;
  // Canonical serialization: sorted keys, two-space indent, trailing newline.
  std::string dump() const;

  const std::vector<CurveRecord>& curves() const { return curves_; }
  const std::vector<NewformOrbit>& newforms() const { return newforms_; }
  const std::vector<Certificate>& certificates() const { return certificates_; }
  const nlohmann::json& meta() const { return meta_; }

  const NewformOrbit& newform(const std::string& label) const;
  bool has_newform(const std::string& label) const { return newform_index_.contains(label); }
  // Resolves labels and aliases.
  const CurveRecord& curve(const std::string& label_or_alias) const;
  bool has_curve(const std::string& label_or_alias) const;

  // Certificate resolution first, then declared types, then inference.
  LocalComponent local_type(const std::string& newform_label, long p) const;
  const Certificate* triple_certificate(const LabelTriple& labels, long p) const;

  // Adds certificates after validating them against this dataset.
  void merge_certificates(const std::vector<Certificate>& certs);
  void clear_certificates();

  // Adds or replaces records; used by synthetic-data tests and tooling.
  static Dataset build(std::vector<NewformOrbit> newforms, std::vector<CurveRecord> curves,
                       std::vector<Certificate> certificates, nlohmann::json meta = nlohmann::json::object());

private:
  void index_and_validate();

  std::vector<CurveRecord> curves_;
  std::vector<NewformOrbit> newforms_;
  std::vector<Certificate> certificates_;
  nlohmann::json meta_ = nlohmann::json::object();

  std::map<std::string, std::size_t> newform_index_;
  std::map<std::string, std::size_t> curve_index_; // labels and aliases
  std::map<std::pair<std::string, long>, std::size_t> newform_certs_;
  std::map<std::pair<LabelTriple, long>, std::size_t> triple_certs_;
};

Dataset load_dataset(const std::string& path);
// Reads {"certificates":[...]} (or a bare array) from a file.
std::vector<Certificate> load_certificates(const std::string& path);
std::vector<Certificate> parse_certificates(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json local_component_to_json(const LocalComponent& c);
LocalComponent local_component_from_json(const nlohmann::json& j, const std::string& where);

// Fills p | N entries the orbit does not declare: p || N -> Special with the
// stored sign, p^2 | N -> unresolved. Never overwrites declared entries.
NewformOrbit infer_local_types(const NewformOrbit& orbit);

} // namespace modiag
