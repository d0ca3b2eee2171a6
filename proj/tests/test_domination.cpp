#include <doctest.h>

#include <random>

#include "betapack/domination.hpp"
#include "betapack/error.hpp"
#include "betapack/generators.hpp"
#include "support/random_graphs.hpp"
#include "support/reference.hpp"

using namespace betapack;

TEST_SUITE("domination") {
TEST_CASE("alpha-domination property") {
    CHECK(satisfies_alpha_domination(star_graph(10), VertexSet(11, {0}), Rational(1, 2)));
    CHECK(satisfies_alpha_domination(path_graph(5), VertexSet::full(5), Rational(1)));
    CHECK_FALSE(satisfies_alpha_domination(path_graph(3), VertexSet(3), Rational(1, 2)));
    CHECK(satisfies_alpha_domination(Graph(3), VertexSet(3), Rational(1)));
    CHECK_THROWS_AS(satisfies_alpha_domination(path_graph(3), VertexSet(3), Rational(0)), InputError);
}

TEST_CASE("closed forms for paths and complete bipartite graphs") {
    for (std::size_t n = 3; n <= 12; ++n) {
        CHECK(alpha_domination_number(path_graph(n), Rational(1, 3)).value == (n + 2) / 3);
    }
    for (std::size_t m = 1; m <= 5; ++m) {
        for (std::size_t n = m; n <= 5; ++n) {
            for (const auto& a : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
                const auto expect = std::min(a.ceil_times(m) + a.ceil_times(n), m);
                CHECK(alpha_domination_number(complete_bipartite_graph(m, n), a).value == expect);
            }
        }
    }
    const auto star = alpha_domination_number(star_graph(10), Rational(1, 2));
    CHECK(star.value == 1);
    CHECK(star.witness == VertexSet(11, {0}));
}

TEST_CASE("K_3 at alpha 1 needs two vertices") {
    // Brute-force oracle value.
    const auto r = alpha_domination_number(complete_graph(3), Rational(1), Method::brute_force);
    CHECK(r.value == 2);
    CHECK(r.witness == VertexSet(3, {0, 1}));
}

TEST_CASE("edge cases") {
    CHECK(alpha_domination_number(Graph(1), Rational(1)).value == 0);
    CHECK(alpha_domination_number(Graph(4), Rational(1, 2)).value == 0);
    CHECK_THROWS_AS(alpha_domination_number(Graph(0), Rational(1)), InputError);
    CHECK_THROWS_AS(alpha_domination_number(path_graph(30), Rational(1)), CapExceeded);
}

TEST_CASE("methods agree with the reference") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 10);
        const auto g = testing::random_graph(n, 0.4, rng);
        for (const auto& a : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)}) {
            const auto expect = testing::ref_gamma(g, a);
            CHECK(alpha_domination_number(g, a, Method::brute_force).witness == expect);
            CHECK(alpha_domination_number(g, a, Method::branch_and_bound).witness == expect);
        }
    }
}

TEST_CASE("upward closure and alpha monotonicity") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        const auto g = testing::random_graph(n, 0.5, rng);
        const Rational alpha(1 + static_cast<std::uint64_t>(trial % 4), 4);
        const auto subsets = testing::all_subsets(n);
        for (const auto& s : subsets) {
            if (!satisfies_alpha_domination(g, s, alpha)) continue;
            for (const auto& t : subsets) {
                if (s.is_subset_of(t)) CHECK(satisfies_alpha_domination(g, t, alpha));
            }
        }
        std::size_t previous = 0;
        for (std::uint64_t k = 1; k <= 12; ++k) {
            const auto value = alpha_domination_number(g, Rational(k, 12)).value;
            CHECK(value >= previous);
            CHECK(value <= n);
            previous = value;
        }
    }
}

TEST_CASE("comparison verdicts") {
    const auto star = compare_parameters(star_graph(10), Rational(1, 2));
    CHECK(star.domination.value == 1);
    CHECK(star.packing.value == 5);
    CHECK(star.verdict == Verdict::greater);

    const auto p9 = compare_parameters(path_graph(9), Rational(1, 3));
    CHECK(p9.domination.value == 3);
    CHECK(p9.packing.value == 0);
    CHECK(p9.verdict == Verdict::less);

    const auto k2 = compare_parameters(complete_graph(2), Rational(1));
    CHECK(k2.domination.value == 1);
    CHECK(k2.packing.value == 1);
    CHECK(k2.verdict == Verdict::equal);

    // C_4 at 1/2, frozen from the brute-force oracle: both are 2.
    const auto c4 = compare_parameters(cycle_graph(4), Rational(1, 2));
    CHECK(c4.domination.value == 2);
    CHECK(c4.packing.value == 2);
    CHECK(c4.verdict == Verdict::equal);
    CHECK(to_string(Verdict::less) == "less");
}
}
