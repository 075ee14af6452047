#pragma once

// Run configuration and command dispatch shared by the shared-library API and
// the command-line tool. A run is one command plus its parameters; the result
// is a CSV table written to a file or to stdout, plus a process exit status.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/numeric.hpp"

namespace gcdsum {

struct RunConfig {
    // verify-identity | error-term | mean-square | constants | tabulate
    std::string command;

    unsigned r = 1;
    unsigned s = 1;
    std::optional<Real> a;
    std::string f = "id";    // arithmetic-function selector (verify-identity, tabulate)
    std::string theorem;     // model selector (error-term, mean-square)
    std::string kind;        // series-constant selector (constants)
    std::string h = "mu";    // weight selector for the h-parameterized models
    unsigned q = 2;          // xi_q parameter
    Real x_max = 100.0L;
    std::vector<Real> t_list;
    std::uint64_t table_limit = 100;
    std::uint64_t series_n = 100000;
    std::string output;      // CSV destination; empty means stdout
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;  // verify-identity: 0 = every x in 1..x_max
    std::uint64_t budget = 100000000ULL;  // inner-loop cap for the s-power sums

    // Applies one "key=value" assignment. Unknown keys and unparsable values
    // throw config_error.
    void apply_kv(const std::string& key, const std::string& value);

    // Applies a config file of key=value lines over the current values.
    // Blank lines and text after '#' are ignored.
    void load_file(const std::string& path);

    static RunConfig from_file(const std::string& path);
};

// Executes the configured command. Returns the process exit status: 0 on
// success, 1 on configuration or resource errors, 2 on a hard invariant
// violation (an identity check that fails beyond roundoff). Diagnostics go to
// stderr; the CSV is still flushed on status 2 so the failing rows are
// inspectable.
int run(const RunConfig& cfg);

}  // namespace gcdsum
