#pragma once

#include <string>

#include <json.hpp>

#include "pencils/decomp.hpp"
#include "pencils/invariants.hpp"
#include "pencils/pencil.hpp"
#include "pencils/strata.hpp"

namespace pencils {

using json = nlohmann::json;

// All readers throw ParseError on malformed input (including wrong JSON
// shapes); writers produce deterministic output: object keys are sorted,
// scalars are printed in canonical reduced form.

json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j, const std::string& what);

json pencil_to_json(const Pencil& p);
Pencil pencil_from_json(const json& j);

json canonical_form_to_json(const CanonicalForm& cf);
CanonicalForm canonical_form_from_json(const json& j);

json structure_to_json(const KroneckerStructure& s);

json verdict_to_json(const InclusionVerdict& v);

json decomposition_to_json(const DegreePatternDecomposition& d);
DegreePatternDecomposition decomposition_from_json(const json& j, int m, int n);

json parse_json_text(const std::string& text, const std::string& what);
json load_json_file(const std::string& path);

} // namespace pencils
