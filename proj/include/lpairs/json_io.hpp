#pragma once

#include <json.hpp>

#include "lpairs/compat.hpp"
#include "lpairs/oracle.hpp"

namespace lpairs {

using nlohmann::json;

/// Raised while decoding request payloads: schema violations and unparsable
/// values, as opposed to domain errors from the module layer.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field descriptors:
//   {"kind":"rational"} | {"kind":"prime","p":13} |
//   {"kind":"extension","p":2,"modulus":[1,1,1]}        (little-endian)
json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

// Elements travel as strings: "n/d" over Q (the "/d" omitted when d = 1),
// the decimal residue over GF(p), "[c0,c1,...]" over GF(p^m).
json element_to_json(const FieldElement& x);
FieldElement element_from_json(const json& j, const FieldPtr& f);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldPtr& f);

// {"field":..., "d":..., "theta":[...], "theta_star":[...],
//  "varphi":[...], "phi":[...]}
json parameter_array_to_json(const ParameterArray& p);
ParameterArray parameter_array_from_json(const json& j);

// {"type":"I", "q":"2", "entries":[... 7 strings ...]}
json basic_sequence_to_json(const BasicSequence& b);
BasicSequence basic_sequence_from_json(const json& j, const FieldPtr& f);

json companion_family_to_json(const CompanionFamily& f);
json companion_result_to_json(const CompanionResult& r);

}  // namespace lpairs
