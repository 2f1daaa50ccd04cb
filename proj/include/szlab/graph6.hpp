#pragma once

#include <string>

#include "szlab/graph.hpp"

namespace szlab {

// graph6 encoding of a simple graph: N(n) header, then the upper triangle of
// the adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... packed into
// 6-bit groups, each offset by 63. Bit-exact with the de facto standard.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);  // ParseError / usual build errors

// Plain edge-list text: first line "n m", then m lines "u v".
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

}  // namespace szlab
