#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gfa/functions.hpp"
#include "gfa/graph.hpp"
#include "gfa/matrix.hpp"
#include "gfa/scalar.hpp"

namespace gfa {

using json = nlohmann::json;

// Scalar literals: real -> number; complex -> [re, im]; zmod -> integer 0..n-1;
// rational -> "p/q".
Scalar scalar_from_json(const json& j, const ScalarDomain& domain, const std::string& where = "value");
json scalar_to_json(const Scalar& s);

ScalarDomain domain_from_json(const json& j);
json domain_to_json(const ScalarDomain& d);

/// Parses a graph document. ParseError carries the byte offset for syntax
/// errors and a JSON path for schema errors.
WeightedGraph parse_graph(std::string_view text);
WeightedGraph graph_from_json(const json& j);
json serialize_graph(const WeightedGraph& g);

/// {"values": [literal x n]}.
NodeFunction node_function_from_json(const json& j, const ScalarDomain& domain, std::size_t n);
json node_function_to_json(const NodeFunction& f);

/// {"values": [{"i": int, "j": int, "v": literal}]}; keys must be adjacent pairs of g.
EdgeFunction edge_function_from_json(const json& j, const WeightedGraph& g);
json edge_function_to_json(const EdgeFunction& f);

json matrix_to_json(const DenseMatrix& m);

/// Parses text as JSON, mapping syntax errors onto ParseError.
json parse_json_text(std::string_view text, const std::string& source = "input");

/// Deterministic serialization: object keys sorted, floats with 17 significant
/// digits, no whitespace unless indent >= 0.
std::string canonical_dump(const json& j, int indent = -1);

}  // namespace gfa
