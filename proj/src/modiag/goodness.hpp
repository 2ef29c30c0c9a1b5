#pragma once

// Curve-level decisions: a curve is good when every multiset of three
// newform orbits appearing in it has a finite place where the invariant
// trilinear form vanishes.

#include "modiag/data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modiag {

struct TripleVerdict {
  enum class Conclusion { vanishes, form_exists, unknown };

  LabelTriple labels;
  std::vector<TripleLocalVerdict> per_place;
  Conclusion conclusion = Conclusion::unknown;
  std::optional<Place> witness;
  std::vector<std::string> blockers;
};

const char* to_string(TripleVerdict::Conclusion c);

enum class Goodness { yes, no, unknown };
const char* to_string(Goodness g);

struct GoodnessReport {
  std::string curve;
  long level = 0;
  int genus = 0;
  std::vector<std::string> newforms;
  std::vector<TripleVerdict> triples;
  Goodness good = Goodness::unknown;
  std::string consequence;
  std::vector<std::string> citations;
  std::vector<std::string> notes;
};

// Every place where the triple can be ramified: primes dividing a level plus
// finite places where the algebra ramifies. Elsewhere all components are
// unramified and the form exists.
TripleVerdict check_triple(const Dataset& d, const LabelTriple& labels, const QuaternionAlgebra& algebra);

// All multisets of size three, sorted.
std::vector<LabelTriple> triples_of(const std::vector<std::string>& labels);

GoodnessReport check_curve(const Dataset& d, const std::string& curve_label, const QuaternionAlgebra& algebra);

struct CategorySummary {
  std::string category;
  std::vector<std::string> curves;
  std::vector<std::string> good;
  std::vector<std::string> not_good;
  std::vector<std::string> unknown;
};

struct TablesSummary {
  std::vector<CategorySummary> categories;
  std::vector<std::string> expected_good;   // published list, as curve names
  std::vector<std::string> missing;          // published good, not found good
  std::vector<std::string> unexpected;       // found good, published as not good
  std::vector<std::string> unexpected_unknown; // unknown without an expected-unknown flag
  std::vector<std::string> reviewed;         // good outside the published list where only reviewed
  bool match = false;
};

// The published classification, keyed by curve name.
const std::vector<std::string>& published_good_curves();

// Category: explicit record field, else "squarefree" for square-free levels,
// else "p-exact" when some prime exactly divides the level, else "p-squared".
std::string curve_category(const CurveRecord& c);

TablesSummary reproduce_tables(const Dataset& d);

} // namespace modiag
