#pragma once

#include <string>
#include <string_view>

#include "covertool/graph.hpp"

namespace covertool {

// Edge-list text: one edge per line as two whitespace-separated vertex names;
// '#' starts a comment. A line with a single name declares an isolated
// vertex. Vertices are numbered in first-appearance order.
Graph parse_edge_list(std::string_view text);

// Standard graph6 encoding; vertices are named x1..xn. An optional
// ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Input consisting of exactly one token is read as graph6, anything else as
// an edge list.
Graph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);

// Sorted vertex list + sorted edge list, e.g. "V=a,b,c;E=a-b,b-c".
std::string canonical_string(const Graph& g);

}  // namespace covertool
