#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "betapack/graph.hpp"

namespace betapack {

enum class GraphClass { path, cycle, complete, star, complete_bipartite, complete_multipartite };

struct GraphClassSpec {
    GraphClass kind = GraphClass::path;
    std::vector<std::size_t> parts;

    // "kind:params", e.g. "path:6", "complete_bipartite:4,5".
    static GraphClassSpec parse(std::string_view text);
    [[nodiscard]] std::string str() const;
};

// Throws InputError when the parameters violate the class constraints.
void validate(const GraphClassSpec& spec);

/// Builds the class member with canonical numbering: paths and cycles along
/// the walk, a star's center is 0, multipartite parts numbered consecutively.
Graph generate(const GraphClassSpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t m, std::size_t n);
Graph complete_multipartite_graph(const std::vector<std::size_t>& parts);

}  // namespace betapack
