#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ratmle/contingency.hpp"
#include "ratmle/disc_triple.hpp"
#include "ratmle/horn.hpp"
#include "ratmle/staged_tree.hpp"
#include "ratmle/verify.hpp"

namespace ratmle {

using Json = nlohmann::json;

// All parsers throw std::invalid_argument on malformed input (wrong shape,
// bad rational literals, inconsistent sizes); the CLI maps that to exit 2.

// {"vars": ["x1",...], "terms": [{"c": "p/q", "e": [int,...]}, ...]}
Json poly_to_json(const SparsePoly& p, std::vector<std::string> var_names = {});
SparsePoly poly_from_json(const Json& j);

// {"H": [[int,...],...], "lambda": ["p/q",...], "row_labels": [...]}
Json horn_pair_to_json(const HornPair& pair);
HornPair horn_pair_from_json(const Json& j);

// {"friendly": bool, "horn": bool, "sigma": [1,-1,...]}
Json horn_verdict_to_json(const HornVerdict& v);

// {"nodes": [...], "edges": [{"from","to","label"},...]}
Json tree_to_json(const StagedTree& t);
StagedTree tree_from_json(const Json& j);

// {"dims": [...], "counts": ["p/q",...]} in row-major order.
Json table_to_json(const ContingencyTable& t);
ContingencyTable table_from_json(const Json& j);

// {"A": [[int,...],...], "delta": <poly>, "marked_term_index": int}
Json triple_to_json(const IntMatrix& a, const MarkedPoly& mp);
std::pair<IntMatrix, MarkedPoly> triple_from_json(const Json& j);

// Includes the reduced Horn pair, sigma, and the originating marked term.
Json model_record_to_json(const ModelRecord& rec, const SparsePoly& delta);

// {"seed": int, "trials": int, "failures": [...], "ok": bool}
Json verify_report_to_json(const VerifyReport& rep);

// "p/q (0.1234567890)" -- exact fraction plus 10-significant-digit decimal.
std::string rational_display(const Rational& q);

Json load_json_file(const std::string& path);  // throws invalid_argument

}  // namespace ratmle
