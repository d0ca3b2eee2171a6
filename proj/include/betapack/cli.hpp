#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>

#include "betapack/packing.hpp"
#include "betapack/report.hpp"

namespace betapack {

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitCap = 3, kExitInternal = 4 };

struct RunConfig {
    std::size_t exhaustive_cap = SearchLimits::kDefaultCap;
    Method method = Method::branch_and_bound;
    OutputFormat output_format = OutputFormat::table;

    // Applies BETAPACK_CAP from the environment; an explicit flag wins.
    static RunConfig from_environment();
};

// Full command-line entry point. Results go to `out`; failures are written to
// `err` as one JSON object and mapped to ExitCode values.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betapack
