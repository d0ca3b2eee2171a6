#pragma once

// Subset-sweep kernels. Every exhaustive solver reduces to one of two inner
// loops over consecutive 64-subset blocks of a graph with at most 64
// vertices:
//
//   feasible_block   bit i of the result is set iff subset (first + i) keeps
//                    every outside vertex v inside its count window
//                    lo[v] <= |N(v) & S| <= hi[v].
//   threshold_block  for each subset, the largest ratio |N(v) & S| / deg(v)
//                    over outside vertices of positive degree, unreduced.
//
// A scalar reference and an AVX2 variant implement the same contract; the
// active table is picked once at runtime from CPU support (and the
// BETAPACK_KERNEL=scalar|avx2 override).

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "betapack/graph.hpp"
#include "betapack/rational.hpp"

namespace betapack::simd {

inline constexpr std::size_t kMaxOrder = 64;
inline constexpr std::size_t kBlock = 64;

struct DenseGraph {
    std::size_t order = 0;
    std::array<Mask, kMaxOrder> neighbors{};
    std::array<std::uint64_t, kMaxOrder> degree{};
};

// Allowed range of |N(v) & S| for each vertex v outside S.
struct CountWindow {
    std::array<std::uint64_t, kMaxOrder> lo{};
    std::array<std::uint64_t, kMaxOrder> hi{};
};

struct Ratio {
    std::uint32_t num = 0;
    std::uint32_t den = 1;
};

using FeasibleBlockFn = Mask (*)(const DenseGraph&, const CountWindow&, Mask first);
using ThresholdBlockFn = void (*)(const DenseGraph&, Mask first, std::span<Ratio, kBlock> out);

struct KernelSet {
    std::string_view name;
    FeasibleBlockFn feasible_block;
    ThresholdBlockFn threshold_block;
};

// Throws InputError for graphs above kMaxOrder vertices.
DenseGraph make_dense(const Graph& g);

// Packing: hi[v] = floor(beta * deg v), lo = 0.
CountWindow packing_window(const DenseGraph& g, const Rational& beta);
// Domination: lo[v] = ceil(alpha * deg v), hi = deg v.
CountWindow domination_window(const DenseGraph& g, const Rational& alpha);

// Bits of a block that name real subsets of an order-n universe.
Mask valid_bits(std::size_t order, Mask first);

const KernelSet& scalar_kernels();
// nullptr when the build lacks AVX2 code or the CPU lacks AVX2.
const KernelSet* avx2_kernels();
const KernelSet& active_kernels();

}  // namespace betapack::simd
