#pragma once

// Text and JSON renderings of every result the CLI prints. Output is a pure
// function of the result, so identical inputs give identical bytes.

#include "modiag/construct.hpp"
#include "modiag/goodness.hpp"
#include "modiag/lmfdb.hpp"

#include <json.hpp>

#include <string>

namespace modiag {

enum class Format { text, json };

nlohmann::json to_json(const TripleLocalVerdict& v);
nlohmann::json to_json(const TripleVerdict& v);
nlohmann::json to_json(const GoodnessReport& r);
nlohmann::json to_json(const TablesSummary& s);
nlohmann::json to_json(const RootNumberResult& r);
nlohmann::json to_json(const FetchResult& r);

std::string render(const GoodnessReport& r, Format f);
std::string render(const TripleVerdict& v, Format f);
std::string render(const TablesSummary& s, Format f);
std::string render(const FetchResult& r, Format f);
std::string render(const VerifyResult& r, Format f);
std::string render(const ConstructionCertificate& c, Format f);

std::string render_trilinear(const GroupSpec& g, const LabelTriple& labels, long multiplicity, Format f);
std::string render_root_number(const RootNumberResult& r, const std::optional<QuaternionAlgebra>& support, Format f);
std::string render_hasse(const QuaternionAlgebra& b, const std::optional<Place>& v, Format f);
std::string render_quadratic(const std::set<long>& primes, long d, Format f);

} // namespace modiag
