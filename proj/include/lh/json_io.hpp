#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lh/closure.hpp"
#include "lh/commutators.hpp"
#include "lh/gamma.hpp"
#include "lh/magnus.hpp"

namespace lh {

using json = nlohmann::ordered_json;

// {"1.3.2": coeff, ...}, nonzero terms only; the constant term has key "".
json to_json(const MagnusSeries& s);
MagnusSeries series_from_json(const json& j, int rank);

// {"1.2": exponent, ...}, nonzero exponents only.
json to_json(const ExponentVector& e);
ExponentVector exponents_from_json(const json& j, const BasisPtr& basis);

// {"basis_order": [[1], [2], [1, 2], ...], "rows": [[...], ...]}
json to_json(const GammaMatrix& g);
GammaMatrix gamma_from_json(const json& j);

// {"n": 3, "order": "degree-lex", "nu": {"1.2": 0, ..., "1.2.3": 0}}
json to_json(const ClaspVector& v);
ClaspVector clasp_vector_from_json(const json& j);

// {"move": "table", "table": id, "row": r, "multiplier": k}
// {"move": "pc", "strand": i, "by": j, "sign": s, "count": k}
json to_json(const Move& m);
Move move_from_json(const json& j);

// {"status": "Equivalent", "witness": [...], "invariant": "..."}
json to_json(const OrbitVerdict& v);
OrbitVerdict verdict_from_json(const json& j);

// Rows in the table data file format.
json to_json(const MoveRow& row);
json to_json(const MoveTables& tables);

// Parses text as JSON, mapping syntax errors to InvalidInput.
json parse_json_text(std::string_view text);

}  // namespace lh
