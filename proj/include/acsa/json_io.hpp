#pragma once

#include "acsa/leonard.hpp"
#include "acsa/modules.hpp"
#include "acsa/recognition.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <utility>

namespace acsa
{

using Json = nlohmann::json;

// Scalars serialize as their text forms; everything re-parses bit-exactly.
Json scalar_json(const ExtScalar& v);
ExtScalar scalar_from_json(const Json& j, const std::string& where);
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

// {"order": n, "entries": [[scalar, ...], ...]}
Json matrix_json(const Mat& m);
Mat matrix_from_json(const Json& j, const std::string& where);

// {"kind": "B"|"AB", "d": int, "n": "0"|"x"|"y"|"z"}
Json type_json(const ModuleType& t);
ModuleType type_from_json(const Json& j, const std::string& where);

// {"type": ..., "x"/"y"/"z": matrix, "basis": "constructor"|["a","b"]|"ambient"}
Json module_json(const ModuleRep& m);
ModuleRep module_from_json(const Json& j, const std::string& where);

Json pair_analysis_json(const PairAnalysis& p);
Json aw_json(const AWParams& w);
Json triple_analysis_json(const TripleAnalysis& t);
Json pair_recognition_json(const PairRecognition& r);
Json triple_outcome_json(const TripleOutcome& o);
Json iso_json(const IsoDecision& d);

// Reads and parses a file; failures throw parse_error with the location.
Json load_json(const std::string& path);

// Operator input: {"a": matrix, "a_star": matrix} or a module rep, whose
// x and y actions become the pair.
std::pair<Mat, Mat> pair_from_json(const Json& j);
// {"a", "a_star", "a_eps"} or a module rep's x, y, z actions.
std::array<Mat, 3> triple_from_json(const Json& j);

} // namespace acsa
