#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "betapack/vertex_set.hpp"

namespace betapack {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense vertex indices 0..n-1.
///
/// Immutable once built. Neighbor lists are sorted and duplicate free; the
/// factory rejects self-loops and out-of-range endpoints and collapses
/// repeated edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    static Graph from_edges(std::size_t order, std::span<const Edge> edges);

    [[nodiscard]] std::size_t order() const noexcept { return adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    // Edges as (u, v) with u < v, in increasing order.
    [[nodiscard]] std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

// Checks symmetry, absence of loops and index range; throws InvariantViolation.
void validate(const Graph& g);

// Connectivity of the subgraph induced by `w`; vacuously true for |w| <= 1.
bool is_connected_induced(const Graph& g, const VertexSet& w);

std::size_t max_degree(const Graph& g);
std::vector<std::size_t> distinct_degrees(const Graph& g);

}  // namespace betapack
