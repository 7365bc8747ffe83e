#ifndef QCHAR_JSON_IO_HPP
#define QCHAR_JSON_IO_HPP

#include <map>

#include <nlohmann/json.hpp>

#include "qchar/blocks.hpp"
#include "qchar/boundary.hpp"
#include "qchar/characters.hpp"
#include "qchar/combinatorics.hpp"
#include "qchar/schur.hpp"
#include "qchar/rational.hpp"

namespace qchar::json {

using nlohmann::json;

// Every reader throws std::invalid_argument on malformed input.

json write(const Rational& value);  // "p/q" or "n"
Rational read_rational(const json& j);

json write(const Signature& sig);  // [2,1,0]; [] for "*"
Signature read_signature(const json& j);

/// {"level": N, "q": "p/q", "entries": [{"sig": [...], "prob": "p/q"}, ...]},
/// entries in lexicographic signature order.
json write(const LevelCharacter& chi);
LevelCharacter read_character(const json& j);

/// {"head": [...], "tail": t}
json write(const BoundaryParam& theta);
BoundaryParam read_boundary(const json& j);

/// {"level": N, "q": "p/q", "blocks": [{"sig": [...], "matrix": [["p/q", ...], ...]}]}
json write(const BlockElement& x);
BlockElement read_block_element(const json& j);

json write(const RationalMatrix& m);
RationalMatrix read_matrix(const json& j);

/// [{"sig": [...], "prob": "p/q"}, ...] for a signature-indexed map.
json write_rows(const std::map<Signature, Rational>& rows, const char* value_key = "prob");

json write(const LRExpansion& lr);
json write(const CoherenceReport& report);
json write(const CorollaryReport& report);
json write(const FCompatibilityReport& report);
json write(const Decomposition& result);

}  // namespace qchar::json

#endif  // QCHAR_JSON_IO_HPP
