#pragma once

#include <string>
#include <string_view>

#include "betapack/graph.hpp"

namespace betapack {

// Edge-list text: "u v" per line, '#' comments, blank lines ignored. A first
// content line holding a single integer fixes the vertex count.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// One graph6 record; an optional ">>graph6<<" header and trailing newline
// are stripped.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

}  // namespace betapack
