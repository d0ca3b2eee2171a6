#include "betapack/closed_forms.hpp"

#include <numeric>

#include "search_common.hpp"

namespace betapack {

std::string_view to_string(Formula f) {
    switch (f) {
        case Formula::path: return "path";
        case Formula::cycle: return "cycle";
        case Formula::complete_bipartite: return "complete_bipartite";
        case Formula::multipartite_beta1: return "multipartite_beta1";
    }
    return "?";
}

namespace {

// 0 below 1/2, n - 2 on [1/2, 1), n - 1 at 1.
std::size_t path_like(std::size_t n, const Rational& beta) {
    if (beta.is_one()) return n - 1;
    if (beta < Rational(1, 2)) return 0;
    return n - 2;
}

}  // namespace

ClosedFormResult path_formula(std::size_t n, const Rational& beta) {
    detail::require_unit_interval(beta, "beta");
    if (n < 2) return {0, Formula::path, false};
    return {path_like(n, beta), Formula::path, true};
}

ClosedFormResult cycle_formula(std::size_t n, const Rational& beta) {
    detail::require_unit_interval(beta, "beta");
    if (n < 3) return {0, Formula::cycle, false};
    return {path_like(n, beta), Formula::cycle, true};
}

ClosedFormResult complete_bipartite_formula(std::size_t m, std::size_t n, const Rational& beta) {
    detail::require_unit_interval(beta, "beta");
    if (m == 0 || n == 0) return {0, Formula::complete_bipartite, false};
    if (beta.is_one()) return {m + n - 1, Formula::complete_bipartite, true};
    return {beta.floor_times(m) + beta.floor_times(n), Formula::complete_bipartite, true};
}

ClosedFormResult multipartite_beta1_formula(std::span<const std::size_t> parts) {
    if (parts.size() < 2) return {0, Formula::multipartite_beta1, false};
    for (auto p : parts) {
        if (p == 0) return {0, Formula::multipartite_beta1, false};
    }
    return {std::accumulate(parts.begin(), parts.end(), std::size_t{0}) - 1, Formula::multipartite_beta1, true};
}

std::size_t naive_multipartite_floor_sum(std::span<const std::size_t> parts, const Rational& beta) {
    std::size_t total = 0;
    for (auto p : parts) total += beta.floor_times(p);
    return total;
}

}  // namespace betapack
