#include "betapack/survey.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <thread>
#include <variant>

#include "betapack/error.hpp"
#include "betapack/graph_io.hpp"

namespace betapack {

using json = nlohmann::ordered_json;

json to_json(const SurveyRecord& r) {
    // Field order is fixed by the JSONL schema.
    json out = json::object();
    out["id"] = r.graph_id;
    out["n"] = r.n;
    out["m"] = r.m;
    out["value"] = r.value.str();
    out["gamma"] = r.gamma_alpha;
    out["pack"] = r.beta_pack;
    out["verdict"] = to_string(r.verdict);
    out["gamma_witness"] = r.gamma_witness.members();
    out["pack_witness"] = r.pack_witness.members();
    return out;
}

namespace {

json extreme_json(const std::optional<SurveyExtreme>& e) {
    if (!e) return nullptr;
    return {{"id", e->graph_id}, {"value", e->value.str()}, {"difference", e->difference}};
}

struct Failure {
    std::string message;
};

using LineOutcome = std::variant<std::vector<SurveyRecord>, Failure>;

LineOutcome evaluate_line(const std::string& id, const std::vector<Rational>& values, const SurveyOptions& options) {
    try {
        const Graph g = parse_graph6(id);
        std::vector<SurveyRecord> records;
        for (const auto& value : values) {
            const auto c = compare_parameters(g, value, options.method, options.limits);
            records.push_back({id, g.order(), g.edge_count(), value, c.domination.value, c.packing.value, c.verdict,
                               c.domination.witness, c.packing.witness});
        }
        return records;
    } catch (const InputError& e) {
        return Failure{e.what()};
    } catch (const CapExceeded& e) {
        return Failure{e.what()};
    }
}

std::string trimmed(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    return line;
}

}  // namespace

json to_json(const SurveySummary& s) {
    json out = json::object();
    out["graphs"] = s.graphs;
    out["records"] = s.records;
    out["skipped"] = s.skipped;
    out["verdicts"] = {{"less", s.less}, {"equal", s.equal}, {"greater", s.greater}};
    out["max_pack_minus_gamma"] = extreme_json(s.max_pack_over_gamma);
    out["max_gamma_minus_pack"] = extreme_json(s.max_gamma_over_pack);
    return out;
}

SurveySummary run_survey(std::istream& in, const std::vector<Rational>& values, std::ostream& jsonl,
                         const SurveyOptions& options) {
    for (const auto& v : values) {
        if (!v.in_unit_interval()) throw InputError("survey value must lie in (0, 1], got " + v.str());
    }
    std::vector<std::string> ids;
    for (std::string line; std::getline(in, line);) {
        line = trimmed(std::move(line));
        if (line.empty() || line == ">>graph6<<") continue;
        ids.push_back(std::move(line));
    }

    std::vector<LineOutcome> outcomes(ids.size());
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, ids.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) outcomes[i] = evaluate_line(ids[i], values, options);
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < ids.size(); i += jobs) outcomes[i] = evaluate_line(ids[i], values, options);
            });
        }
    }

    SurveySummary summary;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (const auto* failure = std::get_if<Failure>(&outcomes[i])) {
            ++summary.skipped;
            json err = json::object();
            err["id"] = ids[i];
            err["error"] = failure->message;
            jsonl << err.dump() << '\n';
            continue;
        }
        ++summary.graphs;
        for (const auto& r : std::get<std::vector<SurveyRecord>>(outcomes[i])) {
            ++summary.records;
            switch (r.verdict) {
                case Verdict::less: ++summary.less; break;
                case Verdict::equal: ++summary.equal; break;
                case Verdict::greater: ++summary.greater; break;
            }
            if (r.beta_pack > r.gamma_alpha) {
                const auto diff = r.beta_pack - r.gamma_alpha;
                if (!summary.max_pack_over_gamma || diff > summary.max_pack_over_gamma->difference) {
                    summary.max_pack_over_gamma = SurveyExtreme{r.graph_id, r.value, diff};
                }
            } else if (r.gamma_alpha > r.beta_pack) {
                const auto diff = r.gamma_alpha - r.beta_pack;
                if (!summary.max_gamma_over_pack || diff > summary.max_gamma_over_pack->difference) {
                    summary.max_gamma_over_pack = SurveyExtreme{r.graph_id, r.value, diff};
                }
            }
            jsonl << to_json(r).dump() << '\n';
        }
    }
    return summary;
}

}  // namespace betapack
