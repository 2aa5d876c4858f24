#pragma once

#include <json.hpp>

#include "conelat/algebra.hpp"
#include "conelat/linalg.hpp"

namespace conelat {

using Json = nlohmann::json;

// Matrix interchange: {"field": "H", "n": 3, "entries": [[..]]} where each
// entry is the coefficient array of length field_dim. Doubles serialize as
// JSON numbers; the exact backend serializes coefficients as "p/q" strings
// and round-trips bit-exactly.

Json to_json(const Herm& h);
Herm herm_from_json(const Json& j);

Json to_json(const HermQ& h);
HermQ hermq_from_json(const Json& j);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

std::string dump_canonical(const Json& j);  // stable key order, 17 sig digits

}  // namespace conelat
