// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace betapack::simd::detail {

namespace {

// Per-lane popcount of four 64-bit words: nibble lookup, then byte sums.
inline __m256i popcount_epi64(__m256i x) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0F);
    const __m256i lo = _mm256_and_si256(x, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline __m256i lane_subsets(Mask first, std::size_t j) {
    const auto base = static_cast<long long>(first + 4 * j);
    return _mm256_add_epi64(_mm256_set1_epi64x(base), _mm256_setr_epi64x(0, 1, 2, 3));
}

inline __m256i outside_lanes(__m256i s, std::size_t v) {
    const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(Mask{1} << v));
    return _mm256_cmpeq_epi64(_mm256_and_si256(s, bit), _mm256_setzero_si256());
}

Mask feasible_block_avx2(const DenseGraph& g, const CountWindow& w, Mask first) {
    Mask result = 0;
    for (std::size_t j = 0; j < kBlock / 4; ++j) {
        const __m256i s = lane_subsets(first, j);
        __m256i violated = _mm256_setzero_si256();
        for (std::size_t v = 0; v < g.order; ++v) {
            const __m256i nbrs = _mm256_set1_epi64x(static_cast<long long>(g.neighbors[v]));
            const __m256i count = popcount_epi64(_mm256_and_si256(nbrs, s));
            const __m256i lo = _mm256_set1_epi64x(static_cast<long long>(w.lo[v]));
            const __m256i hi = _mm256_set1_epi64x(static_cast<long long>(w.hi[v]));
            const __m256i bad = _mm256_or_si256(_mm256_cmpgt_epi64(lo, count), _mm256_cmpgt_epi64(count, hi));
            violated = _mm256_or_si256(violated, _mm256_and_si256(bad, outside_lanes(s, v)));
        }
        const auto bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(violated)));
        result |= static_cast<Mask>(~bits & 0xFU) << (4 * j);
    }
    return result;
}

void threshold_block_avx2(const DenseGraph& g, Mask first, std::span<Ratio, kBlock> out) {
    alignas(32) std::uint64_t nums[4];
    alignas(32) std::uint64_t dens[4];
    for (std::size_t j = 0; j < kBlock / 4; ++j) {
        const __m256i s = lane_subsets(first, j);
        __m256i best_num = _mm256_setzero_si256();
        __m256i best_den = _mm256_set1_epi64x(1);
        for (std::size_t v = 0; v < g.order; ++v) {
            if (g.degree[v] == 0) continue;
            const __m256i nbrs = _mm256_set1_epi64x(static_cast<long long>(g.neighbors[v]));
            const __m256i count = popcount_epi64(_mm256_and_si256(nbrs, s));
            const __m256i deg = _mm256_set1_epi64x(static_cast<long long>(g.degree[v]));
            // count * best_den > best_num * deg; operands fit in 32 bits.
            const __m256i larger = _mm256_cmpgt_epi64(_mm256_mul_epu32(count, best_den), _mm256_mul_epu32(best_num, deg));
            const __m256i take = _mm256_and_si256(larger, outside_lanes(s, v));
            best_num = _mm256_blendv_epi8(best_num, count, take);
            best_den = _mm256_blendv_epi8(best_den, deg, take);
        }
        _mm256_store_si256(reinterpret_cast<__m256i*>(nums), best_num);
        _mm256_store_si256(reinterpret_cast<__m256i*>(dens), best_den);
        for (std::size_t lane = 0; lane < 4; ++lane) {
            out[4 * j + lane] = Ratio{static_cast<std::uint32_t>(nums[lane]), static_cast<std::uint32_t>(dens[lane])};
        }
    }
}

constexpr KernelSet kAvx2{"avx2", &feasible_block_avx2, &threshold_block_avx2};

}  // namespace

const KernelSet& avx2_table() { return kAvx2; }

}  // namespace betapack::simd::detail
