#include <cstdlib>
#include <string>
#include <string_view>

#include "betapack/error.hpp"
#include "kernels_internal.hpp"

namespace betapack::simd {

DenseGraph make_dense(const Graph& g) {
    if (g.order() > kMaxOrder) {
        throw InputError("dense kernels support at most " + std::to_string(kMaxOrder) + " vertices, got " +
                         std::to_string(g.order()));
    }
    DenseGraph d;
    d.order = g.order();
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex u : g.neighbors(v)) d.neighbors[v] |= Mask{1} << u;
        d.degree[v] = g.degree(v);
    }
    return d;
}

CountWindow packing_window(const DenseGraph& g, const Rational& beta) {
    CountWindow w;
    for (std::size_t v = 0; v < g.order; ++v) w.hi[v] = beta.floor_times(g.degree[v]);
    return w;
}

CountWindow domination_window(const DenseGraph& g, const Rational& alpha) {
    CountWindow w;
    for (std::size_t v = 0; v < g.order; ++v) {
        w.lo[v] = alpha.ceil_times(g.degree[v]);
        w.hi[v] = g.degree[v];
    }
    return w;
}

Mask valid_bits(std::size_t order, Mask first) {
    if (order >= 6) return ~Mask{0};
    if (first != 0) return 0;
    return (Mask{1} << (std::size_t{1} << order)) - 1;
}

const KernelSet& scalar_kernels() { return detail::scalar_table(); }

const KernelSet* avx2_kernels() {
#if defined(BETAPACK_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") != 0;
    if (supported) return &detail::avx2_table();
#endif
    return nullptr;
}

const KernelSet& active_kernels() {
    static const KernelSet* chosen = [] {
        const char* env = std::getenv("BETAPACK_KERNEL");
        const std::string_view want = env ? env : "";
        if (want == "scalar") return &scalar_kernels();
        if (const auto* fast = avx2_kernels()) return fast;
        return &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace betapack::simd
