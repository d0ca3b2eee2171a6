#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "betapack/rational.hpp"

namespace betapack {

enum class Formula { path, cycle, complete_bipartite, multipartite_beta1 };

std::string_view to_string(Formula f);

// `value` is meaningful only when `applicable`; outside the hypotheses under
// which a formula is known, the evaluator declines rather than guesses.
struct ClosedFormResult {
    std::size_t value = 0;
    Formula formula = Formula::path;
    bool applicable = false;
};

// beta must lie in (0, 1]; other values throw InputError.
ClosedFormResult path_formula(std::size_t n, const Rational& beta);
ClosedFormResult cycle_formula(std::size_t n, const Rational& beta);
ClosedFormResult complete_bipartite_formula(std::size_t m, std::size_t n, const Rational& beta);
ClosedFormResult multipartite_beta1_formula(std::span<const std::size_t> parts);

// Sum of floor(beta * part): what the bipartite formula would give if it
// carried over to more parts. It does not in general.
std::size_t naive_multipartite_floor_sum(std::span<const std::size_t> parts, const Rational& beta);

}  // namespace betapack
