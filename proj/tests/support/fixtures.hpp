#pragma once

#include "betapack/graph.hpp"

namespace betapack::testing {

// 4-cycle 0-1-3-2-0 with apex 4 joined to 2 and 3.
inline Graph house_graph() {
    const Edge edges[] = {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 2}, {4, 3}};
    return Graph::from_edges(5, edges);
}

}  // namespace betapack::testing
