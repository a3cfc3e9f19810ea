#pragma once

#include <string>
#include <vector>

#include "pawclock/cli/config.hpp"
#include "pawclock/cli/output.hpp"

namespace pawclock::cli {

/// Every runnable check, in the order `all` executes them.
const std::vector<std::string>& subcommands();

/// Runs one subcommand (not `all`). Numerical-domain errors inside a check
/// are caught and reported as a failed assertion.
ExperimentResult run_experiment(const std::string& name, const ExperimentConfig& cfg);

/// Summary row per subcommand; passes iff every subcommand passes.
ExperimentResult summarize_all(const std::vector<ExperimentResult>& results);

/// Progress lines on standard error (on by default).
void set_progress(bool enabled);
void progress(const std::string& line);

}  // namespace pawclock::cli
