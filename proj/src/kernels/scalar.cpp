#include <bit>

#include "kernels_internal.hpp"

namespace betapack::simd::detail {

namespace {

Mask feasible_block_scalar(const DenseGraph& g, const CountWindow& w, Mask first) {
    Mask result = 0;
    for (std::size_t i = 0; i < kBlock; ++i) {
        const Mask s = first + i;
        bool ok = true;
        for (std::size_t v = 0; v < g.order && ok; ++v) {
            if ((s >> v) & 1U) continue;
            const auto c = static_cast<std::uint64_t>(std::popcount(g.neighbors[v] & s));
            ok = c >= w.lo[v] && c <= w.hi[v];
        }
        if (ok) result |= Mask{1} << i;
    }
    return result;
}

void threshold_block_scalar(const DenseGraph& g, Mask first, std::span<Ratio, kBlock> out) {
    for (std::size_t i = 0; i < kBlock; ++i) {
        const Mask s = first + i;
        std::uint64_t best_num = 0;
        std::uint64_t best_den = 1;
        for (std::size_t v = 0; v < g.order; ++v) {
            if (((s >> v) & 1U) || g.degree[v] == 0) continue;
            const auto c = static_cast<std::uint64_t>(std::popcount(g.neighbors[v] & s));
            if (c * best_den > best_num * g.degree[v]) {
                best_num = c;
                best_den = g.degree[v];
            }
        }
        out[i] = Ratio{static_cast<std::uint32_t>(best_num), static_cast<std::uint32_t>(best_den)};
    }
}

constexpr KernelSet kScalar{"scalar", &feasible_block_scalar, &threshold_block_scalar};

}  // namespace

const KernelSet& scalar_table() { return kScalar; }

}  // namespace betapack::simd::detail
