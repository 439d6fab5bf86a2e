#pragma once

#include <string>
#include <string_view>

#include "thlab/graph.hpp"

namespace thlab {

enum class GraphFormat { Graph6, EdgeList };

/// Decodes a graph.  graph6 accepts an optional ">>graph6<<" header and a
/// single trailing newline; the edge-list form is "n m" followed by m
/// whitespace-separated "u v" pairs (0-indexed).  Throws ParseError with the
/// offending byte offset.
Graph parse_graph(std::string_view input, GraphFormat format);

Graph parse_graph6(std::string_view input);
Graph parse_edge_list(std::string_view input);

/// Standard graph6 encoding (no header, no newline).
std::string to_graph6(const Graph& g);

/// "n m\n" then one "u v\n" line per edge with u < v, in lexicographic order.
std::string to_edge_list(const Graph& g);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace thlab
