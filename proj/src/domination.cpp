#include "betapack/domination.hpp"

#include <algorithm>
#include <bit>

#include "betapack/error.hpp"
#include "betapack/kernels.hpp"
#include "search_common.hpp"

namespace betapack {

bool satisfies_alpha_domination(const Graph& g, const VertexSet& s, const Rational& alpha) {
    detail::require_unit_interval(alpha, "alpha");
    detail::require_universe(g, s);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        const auto inside = detail::count_inside(g, v, s);
        if (static_cast<unsigned __int128>(inside) * alpha.den() <
            static_cast<unsigned __int128>(alpha.num()) * g.degree(v)) {
            return false;
        }
    }
    return true;
}

namespace {

Mask solve_brute(const simd::DenseGraph& dense, const simd::CountWindow& window) {
    const auto& kernels = simd::active_kernels();
    const Mask full = detail::full_mask(dense.order);
    detail::BestSet best(detail::Prefer::smaller);
    for (Mask first = 0;; first += simd::kBlock) {
        Mask bits = kernels.feasible_block(dense, window, first) & simd::valid_bits(dense.order, first);
        for (; bits != 0; bits &= bits - 1) best.offer(first + static_cast<Mask>(std::countr_zero(bits)));
        if (full - first < simd::kBlock) break;
    }
    return best.mask();
}

// Sizes are tried in increasing order; for each size an include-first DFS
// visits candidate sets lexicographically. Dominating sets are upward
// closed, so a branch dies as soon as some vertex already fixed outside
// cannot reach its quota even if every remaining pick were its neighbor.
class DominationSearch {
public:
    DominationSearch(const simd::DenseGraph& g, const simd::CountWindow& w) : g_(g), w_(w) {}

    Mask run() {
        for (std::size_t k = 0; k <= g_.order; ++k) {
            target_ = k;
            if (descend(0, 0, 0)) return found_;
        }
        throw InvariantViolation("the full vertex set failed to alpha-dominate");
    }

private:
    bool descend(std::size_t i, Mask chosen, Mask outside) {
        const std::size_t n = g_.order;
        const auto size = static_cast<std::size_t>(std::popcount(chosen));
        if (size == target_) {
            if (!detail::mask_feasible(g_, w_, chosen)) return false;
            found_ = chosen;
            return true;
        }
        if (size + (n - i) < target_) return false;
        const std::size_t picks_left = target_ - size;
        const Mask undecided = detail::full_mask(n) & ~detail::full_mask(i);
        for (Mask m = outside; m != 0; m &= m - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(m));
            const auto have = static_cast<std::size_t>(std::popcount(g_.neighbors[v] & chosen));
            const auto could = static_cast<std::size_t>(std::popcount(g_.neighbors[v] & undecided));
            if (have + std::min(picks_left, could) < w_.lo[v]) return false;
        }
        const Mask bit = Mask{1} << i;
        return descend(i + 1, chosen | bit, outside) || descend(i + 1, chosen, outside | bit);
    }

    const simd::DenseGraph& g_;
    const simd::CountWindow& w_;
    std::size_t target_ = 0;
    Mask found_ = 0;
};

}  // namespace

DominationSolveResult alpha_domination_number(const Graph& g, const Rational& alpha, Method method,
                                              const SearchLimits& limits) {
    detail::require_unit_interval(alpha, "alpha");
    if (g.order() == 0) throw InputError("alpha-domination of the empty graph is undefined");
    limits.require(g.order(), "alpha-domination");
    const auto dense = simd::make_dense(g);
    const auto window = simd::domination_window(dense, alpha);
    const Mask best =
        method == Method::brute_force ? solve_brute(dense, window) : DominationSearch(dense, window).run();
    return {static_cast<std::size_t>(std::popcount(best)), VertexSet::from_mask(g.order(), best), alpha, method};
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::less: return "less";
        case Verdict::equal: return "equal";
        case Verdict::greater: return "greater";
    }
    return "?";
}

Comparison compare_parameters(const Graph& g, const Rational& value, Method method, const SearchLimits& limits) {
    Comparison c;
    c.value = value;
    c.domination = alpha_domination_number(g, value, method, limits);
    c.packing = beta_pack_number(g, value, method, limits);
    c.verdict = c.packing.value < c.domination.value   ? Verdict::less
                : c.packing.value == c.domination.value ? Verdict::equal
                                                        : Verdict::greater;
    return c;
}

}  // namespace betapack
