#pragma once

#include <string>

#include "distnum/graph.hpp"

namespace distnum {

// graph6: the standard header-less ASCII encoding of small simple graphs.
// Supports n <= 258047 (1- and 4-byte size prefixes).
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// Edge list: first line "n m", then m lines "u v".
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

enum class GraphFormat { graph6, edge_list, auto_detect };

Graph parse_graph(const std::string& text, GraphFormat fmt = GraphFormat::auto_detect);

}  // namespace distnum
