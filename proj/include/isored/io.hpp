#pragma once

// JSON documents for networks and matrices.
//
//   network: { "n": 4, "edges": [ {"from": 1, "to": 2, "w": "1/l"} ],
//              "labels": [1, 4] }            (labels optional, default 1..n)
//   matrix:  { "rows": [ ["0", "1"], ["-1", "l/2"] ] }
//
// Weights are literal strings (integers are accepted too).

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isored/linalg.hpp"
#include "isored/netgraph.hpp"

namespace isored {

using Json = nlohmann::ordered_json;

/// Throws Error(ParseError) with line and column for malformed JSON,
/// Error(DuplicateEdge) and Error(BadVertexIndex).
Network parse_network(std::string_view text);
Json network_to_json(const Network& net);

/// Throws Error(ParseError) for malformed documents or ragged rows.
RatMatrix parse_matrix(std::string_view text);
Json matrix_to_json(const RatMatrix& m);
Json matrix_to_json(const GaussMatrix& m);

/// Comma-separated Gaussian-rational literals, e.g. "i,-1,1/2+3/4i".
GaussVector parse_gauss_list(std::string_view text);
Json vector_to_json(const GaussVector& v);

/// Comma-separated positive integers, e.g. "1,2,4".
VertexSet parse_vertex_list(std::string_view text);

}  // namespace isored
