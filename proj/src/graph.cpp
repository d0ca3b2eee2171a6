#include "betapack/graph.hpp"

#include <algorithm>
#include <string>

#include "betapack/error.hpp"

namespace betapack {

Graph::Graph(std::size_t order) : adj_(order) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (const auto& [u, v] : edges) {
        if (u >= order || v >= order) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                             std::to_string(order) + " vertices");
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_sum += list.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

void validate(const Graph& g) {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto nbrs = g.neighbors(v);
        if (!std::is_sorted(nbrs.begin(), nbrs.end()) ||
            std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
            throw InvariantViolation("neighbor list of " + std::to_string(v) + " is not a sorted set");
        }
        for (Vertex u : nbrs) {
            if (u >= g.order()) throw InvariantViolation("neighbor index out of range");
            if (u == v) throw InvariantViolation("self-loop at " + std::to_string(v));
            if (!g.adjacent(u, v)) throw InvariantViolation("asymmetric adjacency");
        }
        degree_sum += nbrs.size();
    }
    if (degree_sum != 2 * g.edge_count()) throw InvariantViolation("edge count disagrees with degrees");
}

bool is_connected_induced(const Graph& g, const VertexSet& w) {
    if (w.universe() != g.order()) throw InputError("vertex set universe does not match the graph");
    const auto members = w.members();
    if (members.size() <= 1) return true;
    VertexSet seen(g.order());
    std::vector<Vertex> stack{members.front()};
    seen.insert(members.front());
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (w.contains(u) && !seen.contains(u)) {
                seen.insert(u);
                stack.push_back(u);
                ++reached;
            }
        }
    }
    return reached == members.size();
}

std::size_t max_degree(const Graph& g) {
    if (g.order() == 0) throw InputError("maximum degree of the empty graph");
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<std::size_t> distinct_degrees(const Graph& g) {
    if (g.order() == 0) throw InputError("degrees of the empty graph");
    std::vector<std::size_t> out;
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace betapack
