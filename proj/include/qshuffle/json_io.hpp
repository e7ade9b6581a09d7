#pragma once

#include "qshuffle/relations.hpp"

#include <json.hpp>

namespace qshuffle {

using Json = nlohmann::json;

// {"terms": [{"coef": "p/q", "word": [i, ...]}, ...]}
Json to_json(const NCPoly& p);
NCPoly ncpoly_from_json(const Json& j);

// [{"coef": "p/q", "index": [n_1, ...]}, ...]
Json to_json(const ZetaCombination& z);

// {"lhs": NCPoly, "rendered": [...], "regularized": bool, "provenance": string,
//  "closed_form": {"coef": "p/q", "pi_power": m}}; closed_form only when present.
Json to_json(const Relation& rel);

Json to_json(const VerifyReport& rep);

}  // namespace qshuffle
