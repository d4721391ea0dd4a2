#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "locol/bounds.hpp"
#include "locol/coloring.hpp"
#include "locol/constructions.hpp"
#include "locol/corona.hpp"
#include "locol/solver.hpp"

namespace locol {

// Key order is fixed so that identical values always serialize to identical bytes.
using Json = nlohmann::ordered_json;

// {"k": 3, "colors": [1, 2, 3]}
Json to_json(const Coloring& c);
// Throws ParseError (line 0 for structural errors) or InvalidInput.
Coloring coloring_from_json(const Json& j);
Coloring parse_coloring(std::string_view text);

// {"centers": [...], "satellites": [{"g": u, "t": t, "h": v, "idx": p}, ...]}
Json to_json(const CoronaMap& map);

// One array of k distances per vertex.
Json to_json(const ColorCodeMatrix& codes);

// {"verdict": {"proper": b, "locating": b}, "witness": null | {...}}
Json to_json(const VerificationReport& report);

// {"lower": x, "upper": y, "tags": [{"tag", "side", "value"}...],
//  "indeterminate": b, "binding": {"lower": tag, "upper": tag}}
Json to_json(const BoundsReport& report);

// {"source": "...", "k": k, "colors": [...], "verified": true}
Json to_json(const ConstructionResult& result);

// Resolved: {"status": "resolved", "value": k, "certificate": {...}, "nodes": N}
// Otherwise: {"status": "indeterminate", "lower": a, "upper": b, "nodes": N}
Json to_json(const ChiResult& result);

}  // namespace locol
