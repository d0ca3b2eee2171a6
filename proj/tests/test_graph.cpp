#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "betapack/error.hpp"
#include "betapack/generators.hpp"
#include "betapack/graph.hpp"
#include "betapack/graph_io.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

using namespace betapack;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string data_path(const std::string& name) { return std::string(BETAPACK_TEST_DATA) + "/" + name; }

std::string error_of(auto&& fn) {
    try {
        fn();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("graph") {
TEST_CASE("edge list basics") {
    const auto p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(2, 1));
    CHECK_FALSE(p3.adjacent(0, 2));

    const auto empty5 = parse_edge_list("5\n");
    CHECK(empty5.order() == 5);
    CHECK(empty5.edge_count() == 0);

    const auto k2 = parse_edge_list("0 1\n1 0\n0 1");
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);

    const auto commented = parse_edge_list("# comment\n\n4\n0 3\n  # another\n");
    CHECK(commented.order() == 4);
    CHECK(commented.edge_count() == 1);
    CHECK(parse_edge_list("").order() == 0);
}

TEST_CASE("edge list errors name the line") {
    CHECK(error_of([] { (void)parse_edge_list("0 1\n2 2\n"); }).find("line 2") != std::string::npos);
    CHECK(error_of([] { (void)parse_edge_list("3\n0 1\n1 3\n"); }).find("line 3") != std::string::npos);
    CHECK(error_of([] { (void)parse_edge_list("0 x\n"); }).find("line 1") != std::string::npos);
    CHECK_THROWS_AS((void)parse_edge_list("0 1 2\n"), InputError);
    CHECK_THROWS_AS((void)parse_edge_list("0 -1\n"), InputError);
}

TEST_CASE("graph6 decodes agree with the reference decoder") {
    // Expected edges from networkx.from_graph6_bytes (tests/oracle/oracle.py).
    const auto k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edges() == std::vector<Edge>{{0, 1}});
    CHECK(parse_graph6("D??").order() == 5);
    CHECK(parse_graph6("D??").edge_count() == 0);
    CHECK(parse_graph6("B?").order() == 3);
    CHECK(parse_graph6("B?").edge_count() == 0);
    CHECK(parse_graph6("Bw").edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(parse_graph6("DQw").edges() == std::vector<Edge>{{0, 2}, {0, 4}, {1, 3}, {1, 4}, {2, 4}});
    CHECK(parse_graph6("Ch").edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(parse_graph6(">>graph6<<A_\n") == k2);
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 rejects bad input") {
    CHECK_THROWS_AS((void)parse_graph6("A "), InputError);   // space is below 63
    CHECK_THROWS_AS((void)parse_graph6("D?"), InputError);   // needs 2 payload chars
    CHECK_THROWS_AS((void)parse_graph6("A__"), InputError);  // trailing data
    CHECK_THROWS_AS((void)parse_graph6(":Fa@x^"), InputError);
    CHECK_THROWS_AS((void)parse_graph6(""), InputError);
    CHECK_THROWS_AS((void)parse_graph6("~?"), InputError);
}

TEST_CASE("graph6 handles the long order prefix") {
    const auto g = path_graph(70);
    const auto text = to_graph6(g);
    CHECK(text.front() == '~');
    CHECK(parse_graph6(text) == g);
}

TEST_CASE("serialization round trips on random graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto g = testing::random_graph(static_cast<std::size_t>(i % 17), 0.35, rng);
        CHECK(parse_graph6(to_graph6(g)) == g);
        const auto again = parse_edge_list(to_edge_list(g));
        CHECK(again == g);
    }
}

TEST_CASE("graph6 fixtures agree with their edge lists") {
    std::istringstream pairs(read_file(data_path("pairs.tsv")));
    int checked = 0;
    for (std::string line; std::getline(pairs, line);) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string name, g6, file;
        row >> name >> g6 >> file;
        CAPTURE(name);
        CHECK(parse_graph6(g6) == parse_edge_list(read_file(data_path(file))));
        ++checked;
    }
    CHECK(checked == 6);
    CHECK(parse_edge_list(read_file(data_path("house.txt"))) == testing::house_graph());
}

TEST_CASE("generators") {
    const auto p6 = generate(GraphClassSpec::parse("path:6"));
    CHECK(p6.order() == 6);
    CHECK(p6.edge_count() == 5);
    const std::vector<std::size_t> p6_degrees{1, 2, 2, 2, 2, 1};
    for (Vertex v = 0; v < 6; ++v) CHECK(p6.degree(v) == p6_degrees[v]);

    const auto k45 = generate(GraphClassSpec::parse("complete_bipartite:4,5"));
    CHECK(k45.edge_count() == 20);
    for (Vertex v = 0; v < 4; ++v) CHECK(k45.degree(v) == 5);
    for (Vertex v = 4; v < 9; ++v) CHECK(k45.degree(v) == 4);

    const auto k3333 = generate(GraphClassSpec::parse("complete_multipartite:3,3,3,3"));
    CHECK(k3333.order() == 12);
    for (Vertex v = 0; v < 12; ++v) CHECK(k3333.degree(v) == 9);
    CHECK_FALSE(k3333.adjacent(0, 2));
    CHECK(k3333.adjacent(2, 3));

    const auto star = generate(GraphClassSpec::parse("star:10"));
    CHECK(star.order() == 11);
    CHECK(star.degree(0) == 10);
    CHECK(generate(GraphClassSpec::parse("complete:5")).edge_count() == 10);
    CHECK(GraphClassSpec::parse("complete_multipartite:3,3,3,3").str() == "complete_multipartite:3,3,3,3");
}

TEST_CASE("generator edge counts and validity across orders") {
    for (std::size_t n = 1; n <= 15; ++n) {
        const auto p = path_graph(n);
        validate(p);
        CHECK(p.edge_count() == n - 1);
        if (n >= 3) {
            const auto c = cycle_graph(n);
            validate(c);
            CHECK(c.edge_count() == n);
        }
    }
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto k = complete_bipartite_graph(m, n);
            validate(k);
            CHECK(k.edge_count() == m * n);
        }
    }
    validate(complete_multipartite_graph({2, 3, 4}));
}

TEST_CASE("generator parameter errors") {
    CHECK_THROWS_AS(GraphClassSpec::parse("cycle:2"), InputError);
    CHECK_THROWS_AS(GraphClassSpec::parse("path:0"), InputError);
    CHECK_THROWS_AS(GraphClassSpec::parse("complete_bipartite:3"), InputError);
    CHECK_THROWS_AS(GraphClassSpec::parse("complete_bipartite:0,3"), InputError);
    CHECK_THROWS_AS(GraphClassSpec::parse("complete_multipartite:4"), InputError);
    CHECK_THROWS_AS(GraphClassSpec::parse("wheel:5"), InputError);
    CHECK_THROWS_AS(GraphClassSpec::parse("path"), InputError);
    CHECK_THROWS_AS(GraphClassSpec::parse("path:x"), InputError);
}

TEST_CASE("graph factory rejects loops and range errors") {
    const Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS((void)Graph::from_edges(3, loop), InputError);
    const Edge far[] = {{0, 3}};
    CHECK_THROWS_AS((void)Graph::from_edges(3, far), InputError);
}

TEST_CASE("induced connectivity") {
    const auto p4 = path_graph(4);
    CHECK(is_connected_induced(p4, VertexSet(4, {0, 1})));
    CHECK_FALSE(is_connected_induced(p4, VertexSet(4, {0, 2})));
    CHECK(is_connected_induced(p4, VertexSet(4)));
    CHECK(is_connected_induced(p4, VertexSet(4, {3})));
    CHECK(is_connected_induced(p4, VertexSet::full(4)));
    CHECK_THROWS_AS(is_connected_induced(p4, VertexSet(5, {4})), InputError);
    CHECK_THROWS_AS(VertexSet(4, {4}), InputError);
}

TEST_CASE("degree queries") {
    CHECK(max_degree(path_graph(6)) == 2);
    CHECK(distinct_degrees(path_graph(6)) == std::vector<std::size_t>{1, 2});
    CHECK(max_degree(complete_bipartite_graph(4, 5)) == 5);
    CHECK(distinct_degrees(complete_bipartite_graph(4, 5)) == std::vector<std::size_t>{4, 5});
    CHECK(distinct_degrees(cycle_graph(5)) == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(max_degree(Graph(0)), InputError);
    CHECK_THROWS_AS(distinct_degrees(Graph(0)), InputError);
}

TEST_CASE("vertex set algebra and ordering") {
    const VertexSet a(6, {0, 2, 4});
    const VertexSet b(6, {2, 3});
    CHECK(a.united(b) == VertexSet(6, {0, 2, 3, 4}));
    CHECK(a.minus(b) == VertexSet(6, {0, 4}));
    CHECK(a.complement() == VertexSet(6, {1, 3, 5}));
    CHECK(VertexSet(6, {2}).is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(VertexSet(6, {0, 1, 3}) < VertexSet(6, {0, 2, 3}));
    CHECK(VertexSet(6, {0, 5}) < VertexSet(6, {1, 2}));
    CHECK(VertexSet::full(70).size() == 70);
    CHECK(VertexSet::full(70).complement().empty());
}
}
