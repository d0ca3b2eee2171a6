#include "betapack/report.hpp"

#include <sstream>

#include "betapack/error.hpp"

namespace betapack {

namespace {

using json = nlohmann::ordered_json;

std::string set_text(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.members()) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

json rationals_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& r : values) out.push_back(r.str());
    return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
    if (text == "json") return OutputFormat::json;
    if (text == "table") return OutputFormat::table;
    if (text == "dot") return OutputFormat::dot;
    throw InputError("unknown format '" + std::string(text) + "'; use json, table or dot");
}

json witness_json(const VertexSet& s) { return json(s.members()); }

json to_json(const Graph& g, const PackingSolveResult& r) {
    return {{"n", g.order()},
            {"beta", r.beta.str()},
            {"value", r.value},
            {"witness", witness_json(r.witness)},
            {"method", to_string(r.method)}};
}

json to_json(const Graph& g, const DominationSolveResult& r) {
    return {{"n", g.order()},
            {"alpha", r.alpha.str()},
            {"value", r.value},
            {"witness", witness_json(r.witness)},
            {"method", to_string(r.method)}};
}

json to_json(const Graph& g, const Comparison& c) {
    return {{"n", g.order()},
            {"m", g.edge_count()},
            {"value", c.value.str()},
            {"gamma", c.domination.value},
            {"pack", c.packing.value},
            {"verdict", to_string(c.verdict)},
            {"gamma_witness", witness_json(c.domination.witness)},
            {"pack_witness", witness_json(c.packing.witness)}};
}

json profile_json(const Graph& g, const PackingProfile& p, const std::vector<Rational>& candidates) {
    return {{"n", g.order()},
            {"breakpoints", rationals_json(p.breakpoints)},
            {"values", p.values},
            {"interesting_betas", rationals_json(candidates)}};
}

json maximal_json(const Graph& g, const Rational& beta, const std::vector<VertexSet>& sets) {
    json listed = json::array();
    for (const auto& s : sets) listed.push_back(witness_json(s));
    return {{"n", g.order()}, {"beta", beta.str()}, {"count", sets.size()}, {"sets", listed}};
}

std::string to_table(const Graph& g, const PackingSolveResult& r) {
    std::ostringstream os;
    os << "n        " << g.order() << "\n"
       << "beta     " << r.beta << "\n"
       << "value    " << r.value << "\n"
       << "witness  " << set_text(r.witness) << "\n"
       << "method   " << to_string(r.method) << "\n";
    return os.str();
}

std::string to_table(const Graph& g, const DominationSolveResult& r) {
    std::ostringstream os;
    os << "n        " << g.order() << "\n"
       << "alpha    " << r.alpha << "\n"
       << "value    " << r.value << "\n"
       << "witness  " << set_text(r.witness) << "\n"
       << "method   " << to_string(r.method) << "\n";
    return os.str();
}

std::string to_table(const Graph& g, const Comparison& c) {
    std::ostringstream os;
    os << "n              " << g.order() << "\n"
       << "value          " << c.value << "\n"
       << "gamma          " << c.domination.value << "  " << set_text(c.domination.witness) << "\n"
       << "pack           " << c.packing.value << "  " << set_text(c.packing.witness) << "\n"
       << "verdict        pack " << (c.verdict == Verdict::less ? "<" : c.verdict == Verdict::equal ? "=" : ">")
       << " gamma\n";
    return os.str();
}

std::string profile_table(const PackingProfile& p, const std::vector<Rational>& candidates) {
    std::ostringstream os;
    os << "breakpoint  value\n";
    for (std::size_t i = 0; i < p.breakpoints.size(); ++i) {
        const auto b = p.breakpoints[i].str();
        os << b << std::string(b.size() < 12 ? 12 - b.size() : 1, ' ') << p.values[i] << "\n";
    }
    os << "candidates ";
    for (const auto& r : candidates) os << ' ' << r;
    os << "\n";
    return os.str();
}

std::string maximal_table(const Rational& beta, const std::vector<VertexSet>& sets) {
    std::ostringstream os;
    os << "beta " << beta << ", " << sets.size() << " maximal packing set(s)\n";
    for (const auto& s : sets) os << s.size() << "  " << set_text(s) << "\n";
    return os.str();
}

std::string to_dot(const Graph& g, const VertexSet& highlighted, std::string_view name) {
    if (highlighted.universe() != g.order()) throw InputError("vertex set universe does not match the graph");
    std::ostringstream os;
    os << "graph " << name << " {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (highlighted.contains(v)) {
            os << " [label=\"" << v << "\", style=filled, fillcolor=black, fontcolor=white];\n";
            continue;
        }
        std::size_t inside = 0;
        for (Vertex u : g.neighbors(v)) inside += highlighted.contains(u) ? 1 : 0;
        std::string ratio = "-";
        if (g.degree(v) > 0) {
            const Rational r(inside, g.degree(v));
            ratio = r.den() == 1 ? std::to_string(r.num()) : r.str();
        }
        os << " [label=\"" << v << "\", xlabel=\"" << ratio << "\"];\n";
    }
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace betapack
