#pragma once

// Slow reference definitions used as test oracles. They walk explicit member
// lists and compare ratios as Rational values, sharing nothing with the mask
// kernels or the search code.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "betapack/graph.hpp"
#include "betapack/rational.hpp"
#include "betapack/vertex_set.hpp"

namespace betapack::testing {

inline std::vector<VertexSet> all_subsets(std::size_t n) {
    std::vector<VertexSet> out;
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v) {
            if ((code >> v) & 1U) s.insert(v);
        }
        out.push_back(s);
    }
    return out;
}

inline Rational neighbor_ratio(const Graph& g, Vertex v, const VertexSet& s) {
    std::size_t inside = 0;
    for (Vertex u : g.neighbors(v)) inside += s.contains(u) ? 1 : 0;
    return Rational(inside, g.degree(v));
}

inline bool ref_packing_property(const Graph& g, const VertexSet& s, const Rational& beta) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!s.contains(v) && g.degree(v) > 0 && neighbor_ratio(g, v, s) > beta) return false;
    }
    return true;
}

inline bool ref_dominating(const Graph& g, const VertexSet& s, const Rational& alpha) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!s.contains(v) && g.degree(v) > 0 && neighbor_ratio(g, v, s) < alpha) return false;
    }
    return true;
}

// Maximal per definition: no proper strict superset has the property.
inline bool ref_is_packing_set(const Graph& g, const VertexSet& s, const Rational& beta) {
    if (!s.is_proper() || !ref_packing_property(g, s, beta)) return false;
    for (const auto& t : all_subsets(g.order())) {
        if (t.is_proper() && s.is_subset_of(t) && t != s && ref_packing_property(g, t, beta)) return false;
    }
    return true;
}

inline bool witness_better(const VertexSet& a, const std::optional<VertexSet>& best, bool larger) {
    if (!best) return true;
    if (a.size() != best->size()) return larger ? a.size() > best->size() : a.size() < best->size();
    return a < *best;
}

inline VertexSet ref_beta_pack(const Graph& g, const Rational& beta) {
    std::optional<VertexSet> best;
    for (const auto& s : all_subsets(g.order())) {
        if (s.is_proper() && ref_packing_property(g, s, beta) && witness_better(s, best, true)) best = s;
    }
    return *best;
}

inline VertexSet ref_gamma(const Graph& g, const Rational& alpha) {
    std::optional<VertexSet> best;
    for (const auto& s : all_subsets(g.order())) {
        if (ref_dominating(g, s, alpha) && witness_better(s, best, false)) best = s;
    }
    return *best;
}

inline std::vector<VertexSet> ref_maximal(const Graph& g, const Rational& beta) {
    std::vector<VertexSet> out;
    for (const auto& s : all_subsets(g.order())) {
        if (ref_is_packing_set(g, s, beta)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    return out;
}

}  // namespace betapack::testing
