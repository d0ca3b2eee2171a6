#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "betapack/domination.hpp"
#include "betapack/packing.hpp"
#include "betapack/rational.hpp"

namespace betapack {

struct SurveyRecord {
    std::string graph_id;
    std::size_t n = 0;
    std::size_t m = 0;
    Rational value;
    std::size_t gamma_alpha = 0;
    std::size_t beta_pack = 0;
    Verdict verdict = Verdict::equal;
    VertexSet gamma_witness;
    VertexSet pack_witness;
};

nlohmann::ordered_json to_json(const SurveyRecord& r);

struct SurveyExtreme {
    std::string graph_id;
    Rational value;
    std::size_t difference = 0;
};

struct SurveySummary {
    std::size_t graphs = 0;
    std::size_t records = 0;
    std::size_t skipped = 0;
    std::size_t less = 0;
    std::size_t equal = 0;
    std::size_t greater = 0;
    // Largest pack - gamma and largest gamma - pack seen, first occurrence wins.
    std::optional<SurveyExtreme> max_pack_over_gamma;
    std::optional<SurveyExtreme> max_gamma_over_pack;
};

nlohmann::ordered_json to_json(const SurveySummary& s);

struct SurveyOptions {
    SearchLimits limits;
    Method method = Method::branch_and_bound;
    std::size_t jobs = 1;
};

/// Reads graph6 lines from `in` and appends one JSON line per (graph, value)
/// to `jsonl`, in input order then value order. A line that fails to parse or
/// exceeds the cap yields a single {"id", "error"} line and is counted as
/// skipped. Blank lines and ">>graph6<<" headers carry no graph and are
/// ignored.
SurveySummary run_survey(std::istream& in, const std::vector<Rational>& values, std::ostream& jsonl,
                         const SurveyOptions& options = {});

}  // namespace betapack
