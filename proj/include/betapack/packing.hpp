#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "betapack/graph.hpp"
#include "betapack/rational.hpp"
#include "betapack/vertex_set.hpp"

namespace betapack {

enum class Method { brute_force, branch_and_bound };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

struct SearchLimits {
    static constexpr std::size_t kDefaultCap = 20;
    static constexpr std::size_t kHardCap = 63;

    std::size_t exhaustive_cap = kDefaultCap;

    // Throws CapExceeded when an order-n search is above the cap.
    void require(std::size_t order, std::string_view what) const;
};

struct PackingSolveResult {
    std::size_t value = 0;
    VertexSet witness;
    Rational beta;
    Method method = Method::brute_force;
};

/// Step function beta -> beta-pack(G) on (0, 1].
///
/// Only jump points are stored. The value at beta is the value of the
/// largest breakpoint <= beta, and 0 below the first breakpoint. A
/// breakpoint at 0 appears only when the value is already positive for every
/// beta > 0 (disconnected graphs, isolated vertices).
struct PackingProfile {
    std::vector<Rational> breakpoints;
    std::vector<std::size_t> values;

    [[nodiscard]] std::size_t value_at(const Rational& beta) const;
};

// Every v outside S has den * |N(v) & S| <= num * |N(v)|. Properness is not
// checked here.
bool satisfies_packing(const Graph& g, const VertexSet& s, const Rational& beta);

// Least beta at which the property holds for S (0/1 if no outside vertex has
// a neighbor in S). S must be a proper subset.
Rational threshold(const Graph& g, const VertexSet& s);

// Proper, has the property, and no proper strict superset has it.
bool is_packing_set(const Graph& g, const VertexSet& s, const Rational& beta,
                    const SearchLimits& limits = {});

PackingSolveResult beta_pack_number(const Graph& g, const Rational& beta,
                                    Method method = Method::branch_and_bound,
                                    const SearchLimits& limits = {});

// Sorted by cardinality descending, then lexicographically ascending.
std::vector<VertexSet> enumerate_maximal_packings(const Graph& g, const Rational& beta,
                                                  const SearchLimits& limits = {});

// {k/d : d a positive vertex degree, 1 <= k <= d} together with 1.
std::vector<Rational> interesting_betas(const Graph& g);

PackingProfile packing_profile(const Graph& g, const SearchLimits& limits = {});

}  // namespace betapack
