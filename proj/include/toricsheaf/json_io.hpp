#pragma once

#include <string>

#include <json.hpp>

#include "toricsheaf/construction.hpp"
#include "toricsheaf/freeness.hpp"
#include "toricsheaf/stability.hpp"

namespace toricsheaf::io {

using Json = nlohmann::ordered_json;

// Rationals travel as strings "p/q" or "p"; plain JSON integers are accepted
// on input.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Vector vector_from_json(const Json& j, std::size_t expected_len);
Json vector_to_json(const Vector& v);
Json subspace_to_json(const Subspace& s);

// { "dim": n, "rays": [[int,...],...], "max_cones": [[rayIdx,...],...] }
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& fan);

// { "coeffs": [int per ray] }
LatticeVector divisor_from_json(const Json& j);
Json divisor_to_json(const LatticeVector& coeffs);

// { "rank": r, "filtrations": [ [ {"i": int, "basis": [[rat,...],...]}, ... ] per ray ] }
FiltrationFamily family_from_json(const Json& j);
Json family_to_json(const FiltrationFamily& e);

Json cone_to_json(const Cone& c);
Json validation_to_json(const FanValidation& v);
Json degrees_to_json(const DegreeVector& d);
Json verdict_to_json(const StabilityVerdict& v);
Json certificate_to_json(const SplittingCertificate& c);
Json freeness_to_json(const FreenessReport& r, bool with_certificates);
Json low_rank_family_to_json(const LowRankFamily& ex);
Json theorem_report_to_json(const TheoremReport& r);
Json rank_two_bound_to_json(const RankTwoBoundReport& r);

// Reads and parses a JSON file; throws ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace toricsheaf::io
