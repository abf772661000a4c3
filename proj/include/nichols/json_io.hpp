#pragma once

#include <string>

#include "json.hpp"
#include "nichols/braiding.hpp"
#include "nichols/pbw.hpp"
#include "nichols/realize.hpp"

namespace nichols {

/// Wire schemas.  Vertices are 1-based on the wire (generators are spoken
/// of as x_1..x_r everywhere user-facing); exponent values may be negative
/// in input and are reduced into [0, n) on ingest.
///
///   matrix   {"n": int, "rank": int, "exponents": [[int]]}
///   diagram  {"n": int, "rank": int, "diag": [int], "edges": {"i,j": int}}
///   witness  {"x": [int], "y": [int]}
///
/// Parsers throw std::invalid_argument with a message naming the offending
/// field; they never partially construct.

nlohmann::json matrix_json(const BraidingMatrix& b);
BraidingMatrix matrix_of_json(const nlohmann::json& j);

nlohmann::json gdd_json(const Gdd& g);
Gdd gdd_of_json(const nlohmann::json& j);

nlohmann::json witness_json(const Realization& r);

/// {"label": str, "pbw": [str], "dimension": int|null}; generator words are
/// rendered like "[[x1,x3],x2]".
nlohmann::json summary_json(const NicholsSummary& s);

}  // namespace nichols
