#include "betapack/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betapack/domination.hpp"
#include "betapack/error.hpp"
#include "betapack/generators.hpp"
#include "betapack/graph_io.hpp"
#include "betapack/survey.hpp"

namespace betapack {

RunConfig RunConfig::from_environment() {
    RunConfig cfg;
    if (const char* env = std::getenv("BETAPACK_CAP")) {
        try {
            const auto cap = std::stoul(env);
            if (cap < 1) throw InputError("BETAPACK_CAP must be at least 1");
            cfg.exhaustive_cap = cap;
        } catch (const std::logic_error&) {
            throw InputError(std::string("BETAPACK_CAP is not a positive integer: '") + env + "'");
        }
    }
    return cfg;
}

namespace {

struct GraphSource {
    std::string gen;
    std::string edges;
    std::string graph6;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option("--gen", gen, "generator spec, e.g. path:6 or complete_bipartite:4,5");
        auto* e = cmd->add_option("--edges", edges, "edge-list file");
        auto* s = cmd->add_option("--graph6", graph6, "graph6 record");
        g->excludes(e)->excludes(s);
        e->excludes(s);
    }

    Graph load() const {
        if (!gen.empty()) return generate(GraphClassSpec::parse(gen));
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!edges.empty()) {
            std::ifstream in(edges);
            if (!in) throw InputError("cannot read edge list '" + edges + "'");
            std::ostringstream text;
            text << in.rdbuf();
            return parse_edge_list(text.str());
        }
        throw InputError("no graph given; use --gen, --edges or --graph6");
    }
};

struct Options {
    GraphSource source;
    std::string fraction = "";
    std::string method = "branch_and_bound";
    std::string format = "table";
    std::size_t cap = 0;
    std::string input = "-";
    std::string output;
    std::string values = "1/2";
    std::size_t jobs = 1;
    bool append = false;
};

SearchLimits limits_of(const RunConfig& cfg) { return SearchLimits{cfg.exhaustive_cap}; }

void check_packing(const Graph& g, const PackingSolveResult& r) {
    if (r.witness.size() != r.value || !r.witness.is_proper() || !satisfies_packing(g, r.witness, r.beta)) {
        throw InvariantViolation("beta-pack witness failed verification");
    }
}

void check_domination(const Graph& g, const DominationSolveResult& r) {
    if (r.witness.size() != r.value || !satisfies_alpha_domination(g, r.witness, r.alpha)) {
        throw InvariantViolation("alpha-domination witness failed verification");
    }
}

std::vector<Rational> parse_value_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(Rational::parse(item));
    if (out.empty()) throw InputError("empty value list");
    return out;
}

void cmd_pack(const Options& o, const RunConfig& cfg, std::ostream& out) {
    const Graph g = o.source.load();
    const auto r = beta_pack_number(g, Rational::parse(o.fraction), cfg.method, limits_of(cfg));
    check_packing(g, r);
    switch (cfg.output_format) {
        case OutputFormat::json: out << to_json(g, r).dump() << '\n'; break;
        case OutputFormat::table: out << to_table(g, r); break;
        case OutputFormat::dot: out << to_dot(g, r.witness, "pack"); break;
    }
}

void cmd_dominate(const Options& o, const RunConfig& cfg, std::ostream& out) {
    const Graph g = o.source.load();
    const auto r = alpha_domination_number(g, Rational::parse(o.fraction), cfg.method, limits_of(cfg));
    check_domination(g, r);
    switch (cfg.output_format) {
        case OutputFormat::json: out << to_json(g, r).dump() << '\n'; break;
        case OutputFormat::table: out << to_table(g, r); break;
        case OutputFormat::dot: out << to_dot(g, r.witness, "dominate"); break;
    }
}

void cmd_compare(const Options& o, const RunConfig& cfg, std::ostream& out) {
    const Graph g = o.source.load();
    const auto c = compare_parameters(g, Rational::parse(o.fraction), cfg.method, limits_of(cfg));
    check_packing(g, c.packing);
    check_domination(g, c.domination);
    switch (cfg.output_format) {
        case OutputFormat::json: out << to_json(g, c).dump() << '\n'; break;
        case OutputFormat::table: out << to_table(g, c); break;
        case OutputFormat::dot:
            out << to_dot(g, c.domination.witness, "gamma") << to_dot(g, c.packing.witness, "pack");
            break;
    }
}

void cmd_profile(const Options& o, const RunConfig& cfg, std::ostream& out) {
    const Graph g = o.source.load();
    const auto profile = packing_profile(g, limits_of(cfg));
    const auto candidates = interesting_betas(g);
    switch (cfg.output_format) {
        case OutputFormat::json: out << profile_json(g, profile, candidates).dump() << '\n'; break;
        case OutputFormat::table: out << profile_table(profile, candidates); break;
        case OutputFormat::dot: throw InputError("profile has no dot rendering; use json or table");
    }
}

void cmd_maximal(const Options& o, const RunConfig& cfg, std::ostream& out) {
    const Graph g = o.source.load();
    const auto beta = Rational::parse(o.fraction);
    const auto sets = enumerate_maximal_packings(g, beta, limits_of(cfg));
    switch (cfg.output_format) {
        case OutputFormat::json: out << maximal_json(g, beta, sets).dump() << '\n'; break;
        case OutputFormat::table: out << maximal_table(beta, sets); break;
        case OutputFormat::dot:
            for (std::size_t i = 0; i < sets.size(); ++i) out << to_dot(g, sets[i], "maximal_" + std::to_string(i));
            break;
    }
}

void cmd_survey(const Options& o, const RunConfig& cfg, std::ostream& out) {
    const auto values = parse_value_list(o.values);
    SurveyOptions options{limits_of(cfg), cfg.method, o.jobs};

    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (o.input != "-") {
        file_in.open(o.input);
        if (!file_in) throw InputError("cannot read survey input '" + o.input + "'");
        in = &file_in;
    }
    std::ofstream file_out;
    std::ostringstream discard;
    std::ostream* jsonl = &discard;
    if (!o.output.empty()) {
        file_out.open(o.output, o.append ? std::ios::app : std::ios::trunc);
        if (!file_out) throw InputError("cannot write survey output '" + o.output + "'");
        jsonl = &file_out;
    }
    const auto summary = run_survey(*in, values, *jsonl, options);
    if (cfg.output_format == OutputFormat::table) {
        out << "graphs   " << summary.graphs << "\nrecords  " << summary.records << "\nskipped  " << summary.skipped
            << "\nless     " << summary.less << "\nequal    " << summary.equal << "\ngreater  " << summary.greater
            << "\n";
        if (summary.max_pack_over_gamma) {
            out << "max pack-gamma  " << summary.max_pack_over_gamma->difference << "  "
                << summary.max_pack_over_gamma->graph_id << " @ " << summary.max_pack_over_gamma->value << "\n";
        }
        if (summary.max_gamma_over_pack) {
            out << "max gamma-pack  " << summary.max_gamma_over_pack->difference << "  "
                << summary.max_gamma_over_pack->graph_id << " @ " << summary.max_gamma_over_pack->value << "\n";
        }
    } else {
        out << to_json(summary).dump() << '\n';
    }
}

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    err << j.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact beta-packing and alpha-domination solver"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--cap", o.cap, "exhaustive search vertex cap (default 20, env BETAPACK_CAP)")
        ->check(CLI::Range(std::size_t{1}, SearchLimits::kHardCap));

    auto add_common = [&](CLI::App* cmd, bool dot_allowed) {
        o.source.attach(cmd);
        cmd->add_option("--method", o.method, "brute_force | branch_and_bound");
        cmd->add_option("--format", o.format, dot_allowed ? "json | table | dot" : "json | table");
    };

    auto* pack = app.add_subcommand("pack", "maximum beta-packing set");
    add_common(pack, true);
    pack->add_option("--beta", o.fraction, "beta as p/q")->required();

    auto* profile = app.add_subcommand("profile", "beta-pack as a step function of beta");
    add_common(profile, false);

    auto* maximal = app.add_subcommand("maximal", "all maximal beta-packing sets");
    add_common(maximal, true);
    maximal->add_option("--beta", o.fraction, "beta as p/q")->required();

    auto* dominate = app.add_subcommand("dominate", "minimum alpha-dominating set");
    add_common(dominate, true);
    dominate->add_option("--alpha", o.fraction, "alpha as p/q")->required();

    auto* compare = app.add_subcommand("compare", "gamma_alpha against beta-pack at alpha = beta");
    add_common(compare, true);
    compare->add_option("--value", o.fraction, "shared alpha = beta as p/q")->required();

    auto* survey = app.add_subcommand("survey", "compare both parameters over a graph6 stream");
    survey->add_option("--input", o.input, "graph6 file, '-' for stdin");
    survey->add_option("--values", o.values, "comma-separated fractions");
    survey->add_option("--output", o.output, "JSONL record file");
    survey->add_flag("--append", o.append, "append to the JSONL file instead of replacing it");
    survey->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    survey->add_option("--method", o.method, "brute_force | branch_and_bound");
    survey->add_option("--format", o.format, "json | table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        report_error(err, "input", e.what());
        return kExitInput;
    }

    try {
        RunConfig cfg = RunConfig::from_environment();
        if (o.cap != 0) cfg.exhaustive_cap = o.cap;
        cfg.method = parse_method(o.method);
        cfg.output_format = parse_output_format(o.format);
        if (*pack) cmd_pack(o, cfg, out);
        else if (*profile) cmd_profile(o, cfg, out);
        else if (*maximal) cmd_maximal(o, cfg, out);
        else if (*dominate) cmd_dominate(o, cfg, out);
        else if (*compare) cmd_compare(o, cfg, out);
        else if (*survey) cmd_survey(o, cfg, out);
        return kExitOk;
    } catch (const InputError& e) {
        report_error(err, "input", e.what());
        return kExitInput;
    } catch (const CapExceeded& e) {
        report_error(err, "cap", e.what());
        return kExitCap;
    } catch (const InvariantViolation& e) {
        report_error(err, "internal", e.what());
        return kExitInternal;
    }
}

}  // namespace betapack
