#pragma once

// Shared helpers for the packing and domination solvers.

#include <bit>
#include <string>
#include <string_view>

#include "betapack/error.hpp"
#include "betapack/graph.hpp"
#include "betapack/kernels.hpp"
#include "betapack/rational.hpp"

namespace betapack::detail {

inline void require_unit_interval(const Rational& r, std::string_view name) {
    if (!r.in_unit_interval()) throw InputError(std::string(name) + " must lie in (0, 1], got " + r.str());
}

inline void require_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw InputError("vertex set universe does not match the graph");
}

inline std::size_t count_inside(const Graph& g, Vertex v, const VertexSet& s) {
    std::size_t c = 0;
    for (Vertex u : g.neighbors(v)) c += s.contains(u) ? 1 : 0;
    return c;
}

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool mask_feasible(const simd::DenseGraph& g, const simd::CountWindow& w, Mask s) {
    for (std::size_t v = 0; v < g.order; ++v) {
        if ((s >> v) & 1U) continue;
        const auto c = static_cast<std::uint64_t>(std::popcount(g.neighbors[v] & s));
        if (c < w.lo[v] || c > w.hi[v]) return false;
    }
    return true;
}

// Lexicographic order on sorted member lists, for sets of equal size: the
// lowest differing vertex decides.
inline bool lex_less(Mask a, Mask b) {
    const Mask diff = a ^ b;
    return (a & diff & -diff) != 0;
}

inline bool larger_then_lex(Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : lex_less(a, b);
}

enum class Prefer { larger, smaller };

// Running optimum with the lexicographic tie-break.
class BestSet {
public:
    explicit BestSet(Prefer p) : prefer_(p) {}

    void offer(Mask s) {
        if (!have_) {
            best_ = s;
            have_ = true;
            return;
        }
        const int ps = std::popcount(s);
        const int pb = std::popcount(best_);
        const bool better = ps != pb ? (prefer_ == Prefer::larger ? ps > pb : ps < pb) : lex_less(s, best_);
        if (better) best_ = s;
    }

    [[nodiscard]] bool has_value() const { return have_; }
    [[nodiscard]] Mask mask() const { return best_; }

private:
    Prefer prefer_;
    Mask best_ = 0;
    bool have_ = false;
};

}  // namespace betapack::detail
