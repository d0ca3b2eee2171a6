#include "betapack/generators.hpp"

#include <array>
#include <charconv>
#include <numeric>
#include <utility>

#include "betapack/error.hpp"

namespace betapack {

namespace {

constexpr std::array<std::pair<std::string_view, GraphClass>, 6> kClassNames{{
    {"path", GraphClass::path},
    {"cycle", GraphClass::cycle},
    {"complete", GraphClass::complete},
    {"star", GraphClass::star},
    {"complete_bipartite", GraphClass::complete_bipartite},
    {"complete_multipartite", GraphClass::complete_multipartite},
}};

std::string_view class_name(GraphClass kind) {
    for (const auto& [name, k] : kClassNames) {
        if (k == kind) return name;
    }
    return "?";
}

std::size_t expected_params(GraphClass kind) {
    switch (kind) {
        case GraphClass::complete_bipartite: return 2;
        case GraphClass::complete_multipartite: return 0;  // variadic
        default: return 1;
    }
}

}  // namespace

GraphClassSpec GraphClassSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InputError("generator '" + std::string(text) + "' needs the form kind:params");
    const auto name = text.substr(0, colon);
    GraphClassSpec spec;
    bool known = false;
    for (const auto& [n, k] : kClassNames) {
        if (n == name) {
            spec.kind = k;
            known = true;
        }
    }
    if (!known) throw InputError("unknown graph class '" + std::string(name) + "'");
    auto rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        const auto token = rest.substr(0, comma);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InputError("generator '" + std::string(text) + "': '" + std::string(token) + "' is not a positive integer");
        }
        spec.parts.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    validate(spec);
    return spec;
}

std::string GraphClassSpec::str() const {
    std::string out(class_name(kind));
    out += ':';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

void validate(const GraphClassSpec& spec) {
    const auto name = std::string(class_name(spec.kind));
    const auto want = expected_params(spec.kind);
    if (want != 0 && spec.parts.size() != want) {
        throw InputError(name + " takes " + std::to_string(want) + " parameter(s)");
    }
    for (auto p : spec.parts) {
        if (p == 0) throw InputError(name + " parameters must be positive");
    }
    switch (spec.kind) {
        case GraphClass::cycle:
            if (spec.parts[0] < 3) throw InputError("cycle order must be at least 3");
            break;
        case GraphClass::complete_multipartite:
            if (spec.parts.size() < 2) throw InputError("complete_multipartite needs at least 2 parts");
            break;
        default: break;
    }
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("cycle order must be at least 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) { return complete_bipartite_graph(1, leaves); }

Graph complete_bipartite_graph(std::size_t m, std::size_t n) { return complete_multipartite_graph({m, n}); }

Graph complete_multipartite_graph(const std::vector<std::size_t>& parts) {
    const std::size_t order = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    std::vector<std::size_t> part_of;
    part_of.reserve(order);
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < order; ++u) {
        for (Vertex v = u + 1; v < order; ++v) {
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(order, edges);
}

Graph generate(const GraphClassSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case GraphClass::path: return path_graph(spec.parts[0]);
        case GraphClass::cycle: return cycle_graph(spec.parts[0]);
        case GraphClass::complete: return complete_graph(spec.parts[0]);
        case GraphClass::star: return star_graph(spec.parts[0]);
        case GraphClass::complete_bipartite: return complete_bipartite_graph(spec.parts[0], spec.parts[1]);
        case GraphClass::complete_multipartite: return complete_multipartite_graph(spec.parts);
    }
    throw InputError("unknown graph class");
}

}  // namespace betapack
