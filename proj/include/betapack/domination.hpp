#pragma once

#include <cstddef>
#include <string_view>

#include "betapack/graph.hpp"
#include "betapack/packing.hpp"
#include "betapack/rational.hpp"
#include "betapack/vertex_set.hpp"

namespace betapack {

struct DominationSolveResult {
    std::size_t value = 0;
    VertexSet witness;
    Rational alpha;
    Method method = Method::branch_and_bound;
};

// Every v outside S has den * |N(v) & S| >= num * |N(v)|. S = V qualifies.
bool satisfies_alpha_domination(const Graph& g, const VertexSet& s, const Rational& alpha);

// Minimum alpha-dominating set; S = V is allowed, so a solution always
// exists. Witness is the lexicographically smallest of minimum size.
DominationSolveResult alpha_domination_number(const Graph& g, const Rational& alpha,
                                              Method method = Method::branch_and_bound,
                                              const SearchLimits& limits = {});

enum class Verdict { less, equal, greater };

std::string_view to_string(Verdict v);

// Verdict orders beta-pack relative to gamma: `less` means pack < gamma.
struct Comparison {
    Rational value;
    DominationSolveResult domination;
    PackingSolveResult packing;
    Verdict verdict = Verdict::equal;
};

Comparison compare_parameters(const Graph& g, const Rational& value,
                              Method method = Method::branch_and_bound,
                              const SearchLimits& limits = {});

}  // namespace betapack
