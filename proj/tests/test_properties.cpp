#include <doctest.h>

#include <random>

#include "betapack/domination.hpp"
#include "betapack/packing.hpp"
#include "support/random_graphs.hpp"
#include "support/reference.hpp"

using namespace betapack;

namespace {

const std::vector<Graph>& corpus() {
    static const auto graphs = testing::property_corpus();
    return graphs;
}

// Every breakpoint plus the midpoints between consecutive ones and 1.
std::vector<Rational> probe_betas(const Graph& g) {
    auto betas = interesting_betas(g);
    std::vector<Rational> out;
    Rational prev(0);
    for (const auto& b : betas) {
        out.push_back(midpoint(prev, b));
        out.push_back(b);
        prev = b;
    }
    return out;
}

}  // namespace

TEST_SUITE("properties") {
TEST_CASE("value is monotone in beta") {
    for (const auto& g : corpus()) {
        std::size_t prev = 0;
        for (const auto& b : probe_betas(g)) {
            const auto v = beta_pack_number(g, b).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("maximal sets have connected complements") {
    for (const auto& g : corpus()) {
        for (const auto& b : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
            for (const auto& s : enumerate_maximal_packings(g, b)) CHECK(is_connected_induced(g, s.complement()));
        }
    }
}

TEST_CASE("value vanishes below 1/max degree") {
    for (const auto& g : corpus()) {
        const Rational cutoff(1, max_degree(g));
        CHECK(beta_pack_number(g, midpoint(Rational(0), cutoff)).value == 0);
        CHECK(beta_pack_number(g, Rational(1, max_degree(g) + 1)).value == 0);
    }
}

TEST_CASE("n - 1 at beta = 1 and less below") {
    for (const auto& g : corpus()) {
        CHECK(beta_pack_number(g, Rational(1)).value == g.order() - 1);
        const auto betas = interesting_betas(g);
        for (const auto& b : betas) {
            if (!b.is_one()) CHECK(beta_pack_number(g, b).value < g.order() - 1);
        }
        CHECK(beta_pack_number(g, Rational(99, 100)).value < g.order() - 1);
    }
}

TEST_CASE("the optimum witness is itself maximal") {
    for (std::size_t i = 0; i < corpus().size(); i += 4) {
        const auto& g = corpus()[i];
        for (const auto& b : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
            const auto r = beta_pack_number(g, b);
            CHECK(is_packing_set(g, r.witness, b));
            const auto family = enumerate_maximal_packings(g, b);
            REQUIRE(!family.empty());
            CHECK(family.front().size() == r.value);
        }
    }
}

TEST_CASE("domination is upward closed and monotone in alpha") {
    std::mt19937_64 rng(7);
    for (std::size_t i = 0; i < 100; ++i) {
        const auto g = testing::random_graph(2 + i % 8, 0.4, rng);
        const Rational alphas[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(1)};
        std::size_t prev = 0;
        for (const auto& a : alphas) {
            const auto r = alpha_domination_number(g, a);
            CHECK(r.value >= prev);
            CHECK(r.value <= g.order());
            prev = r.value;
            auto grown = r.witness;
            for (Vertex v = 0; v < g.order(); ++v) {
                grown.insert(v);
                CHECK(satisfies_alpha_domination(g, grown, a));
            }
        }
    }
}

TEST_CASE("profile agrees with direct solves") {
    std::mt19937_64 rng(11);
    for (std::size_t i = 0; i < 50; ++i) {
        const auto g = testing::random_graph(1 + i % 9, 0.45, rng);
        const auto profile = packing_profile(g);
        const auto betas = interesting_betas(g);
        for (const auto& b : profile.breakpoints) {
            if (b.is_zero()) continue;
            CHECK(std::find(betas.begin(), betas.end(), b) != betas.end());
        }
        for (const auto& b : probe_betas(g)) CHECK(profile.value_at(b) == beta_pack_number(g, b).value);
    }
}
}
