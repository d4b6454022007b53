#pragma once

// JSON encodings. Rationals and polynomials travel as strings in the parser
// grammar; indices are 1-based on the wire and 0-based in memory.

#include <json.hpp>

#include "orbitcalc/quotient.hpp"

namespace orbitcalc {

using json = nlohmann::json;

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, Ring ring);

// Nested rows of rational strings (numbers are accepted too); a flat list of
// n*n entries is read row-major.
json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j, std::size_t n);

// {"components": ["...", ...]}
json to_json(const PolyVectorField& X);
PolyVectorField vector_field_from_json(const json& j, Ring ring);

// {"degree": k, "terms": [{"indices": [i, ...], "coeff": "..."}]}
json to_json(const PolyDiffForm& w);
PolyDiffForm form_from_json(const json& j, Ring ring);

// {"degree": k, "generators": N, "values": [{"tuple": [...], "class": "..."}]}
// Values are read as given and then reduced by the caller's ideal.
json to_json(const OrbitForm& theta);
OrbitForm orbit_form_from_json(const json& j, Ring yring);

// {"components": ["...", ...]} over y.
json to_json(const OrbitVectorField& Y);

json to_json(const std::vector<Polynomial>& ps);
std::vector<Polynomial> polynomials_from_json(const json& j, Ring ring);

}  // namespace orbitcalc
