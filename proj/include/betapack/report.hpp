#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "betapack/domination.hpp"
#include "betapack/graph.hpp"
#include "betapack/packing.hpp"

namespace betapack {

enum class OutputFormat { json, table, dot };

OutputFormat parse_output_format(std::string_view text);

nlohmann::ordered_json witness_json(const VertexSet& s);

nlohmann::ordered_json to_json(const Graph& g, const PackingSolveResult& r);
nlohmann::ordered_json to_json(const Graph& g, const DominationSolveResult& r);
nlohmann::ordered_json to_json(const Graph& g, const Comparison& c);
nlohmann::ordered_json profile_json(const Graph& g, const PackingProfile& p,
                            const std::vector<Rational>& candidates);
nlohmann::ordered_json maximal_json(const Graph& g, const Rational& beta, const std::vector<VertexSet>& sets);

std::string to_table(const Graph& g, const PackingSolveResult& r);
std::string to_table(const Graph& g, const DominationSolveResult& r);
std::string to_table(const Graph& g, const Comparison& c);
std::string profile_table(const PackingProfile& p, const std::vector<Rational>& candidates);
std::string maximal_table(const Rational& beta, const std::vector<VertexSet>& sets);

/// Graphviz rendering of a vertex subset: members filled black, every other
/// vertex labeled with its ratio |N(v) & S| / |N(v)| ("-" when isolated).
std::string to_dot(const Graph& g, const VertexSet& highlighted, std::string_view name = "G");

}  // namespace betapack
