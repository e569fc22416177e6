#pragma once

#include <string>

#include <json.hpp>

#include "nucleon/finite_algebra.hpp"
#include "nucleon/nuclei.hpp"
#include "nucleon/variety.hpp"

namespace nucleon {

using Json = nlohmann::ordered_json;

/// {"size": n, "leq": [[0/1,...]], "mul": [[...]], "imp": [[...]]?,
///  "bot": i, "top": j}; imp is derived when absent.
/// Malformed documents raise StructuralError.
FiniteAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const FiniteAlgebra& a);

FiniteAlgebra load_algebra_file(const std::string& path);

/// {"values": [...], "image": [...], "dense": [...], "glivenko": bool,
///  "kind": "id|double_neg|join_const|other"}
Json nucleus_to_json(const FiniteAlgebra& a, const NucleusMap& gamma);

/// {"generators": ["S1 + S1 + Sw", ...]}
VarietyDescriptor variety_from_json(const Json& j);
VarietyDescriptor load_variety_file(const std::string& path);

Json flags_to_json(const VarietyFlags& f);
Json catalog_to_json(const NucleusCatalog& c);
Json report_to_json(const VerificationReport& r);
Json validation_to_json(const ValidationReport& r);
Json class_flags_to_json(const AlgebraClassFlags& f);

} // namespace nucleon
