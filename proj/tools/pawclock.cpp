// Command-line runner for the clock checks.
//
//   pawclock <subcommand> [--config PATH] [--out DIR] [--jobs N] [--seed N]
//            [--tol-override KEY=VAL]... [--set KEY=VAL]... [grid flags]
//
// Exit status: 0 all assertions pass, 1 an assertion failed, 2 bad configuration.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pawclock/cli/config.hpp"
#include "pawclock/cli/experiments.hpp"
#include "pawclock/cli/output.hpp"
#include "pawclock/kernels.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Flag {
  const char* option;
  const char* key;
  const char* help;
};

const Flag kGridFlags[] = {
    {"--algebra", "algebra", "su2 | h4 | su11"},
    {"--j", "j", "clock spin"},
    {"--ncut", "ncut", "Fock cutoff (h4, su11)"},
    {"--rho", "rho", "clock coherent radius"},
    {"--phi", "phi", "clock coherent angle"},
    {"--step", "h", "finite-difference step in phi"},
    {"--rho-max", "rho_max", "upper end of rho grids"},
    {"--n-rho", "n_rho", "rho grid points"},
    {"--n-phi", "n_phi", "phi grid points"},
    {"--profile", "profile", "gaussian | equal | random"},
    {"--width", "width", "Gaussian profile width (units of epsilon)"},
    {"--system-levels", "system_levels", "comma-separated system spectrum (units of epsilon)"},
    {"--sweep-j", "sweep_j", "comma-separated su2 sweep sizes"},
    {"--sweep-ncut", "sweep_ncut", "comma-separated h4 sweep sizes"},
    {"--run-id", "run_id", "output subdirectory name (default: UTC timestamp)"},
};

}  // namespace

int main(int argc, char** argv) {
  namespace cli = pawclock::cli;

  CLI::App app{"Timeless-clock checks: coherent-state clocks, emergent dynamics and classical limits."};
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::string> seed;
  std::optional<int> jobs;
  std::vector<std::string> tol_overrides;
  std::vector<std::string> sets;
  bool quiet = false;
  app.add_option("--config", config_path, "flat key = value config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output root (overrides PAWCLOCK_OUT_DIR)");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "seed for random coefficient profiles");
  app.add_option("--tol-override", tol_overrides, "KEY=VAL tolerance override (repeatable)");
  app.add_option("--set", sets, "KEY=VAL for any config key (repeatable)");
  app.add_flag("--quiet", quiet, "no progress lines on stderr");

  std::vector<std::string> grid_storage(std::size(kGridFlags));
  std::vector<CLI::Option*> grid_opts;
  for (std::size_t i = 0; i < std::size(kGridFlags); ++i)
    grid_opts.push_back(app.add_option(kGridFlags[i].option, grid_storage[i], kGridFlags[i].help));

  for (const auto& name : cli::subcommands()) app.add_subcommand(name, "run the " + name + " check");
  app.add_subcommand("all", "run every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  const std::string sub = app.get_subcommands().front()->get_name();
  cli::set_progress(!quiet);

  cli::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) cfg.load_file(config_path);
    if (const char* env = std::getenv("PAWCLOCK_OUT_DIR"); env && *env) cfg.set("out", env);
    for (const auto& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw cli::ConfigError("--set expects KEY=VAL, got '" + s + "'");
      cfg.set(s.substr(0, eq), s.substr(eq + 1));
    }
    for (std::size_t i = 0; i < grid_opts.size(); ++i)
      if (grid_opts[i]->count() > 0) cfg.set(kGridFlags[i].key, grid_storage[i]);
    if (out_dir) cfg.set("out", *out_dir);
    if (seed) cfg.set("seed", *seed);
    if (jobs) cfg.set("jobs", std::to_string(*jobs));
    for (const auto& t : tol_overrides) cfg.set_tolerance_override(t);
    cfg.validate();
  } catch (const cli::ConfigError& e) {
    std::cerr << "pawclock: " << e.what() << '\n';
    return kExitConfig;
  }

  pawclock::kernels::set_num_threads(cfg.integer("jobs"));

  std::vector<cli::ExperimentResult> results;
  try {
    if (sub == "all") {
      for (const auto& name : cli::subcommands()) results.push_back(cli::run_experiment(name, cfg));
      results.push_back(cli::summarize_all(results));
    } else {
      results.push_back(cli::run_experiment(sub, cfg));
    }
  } catch (const std::exception& e) {
    std::cerr << "pawclock: " << sub << ": " << e.what() << '\n';
    return kExitConfig;
  }

  const std::string run_id = cfg.text("run_id").empty() ? cli::timestamp_run_id() : cfg.text("run_id");
  bool pass = true;
  for (const auto& r : results) {
    const auto dir = cli::write_artifacts(cfg.text("out"), run_id, r, cfg);
    std::cout << r.subcommand << ": " << (r.pass ? "PASS" : "FAIL") << "  " << dir.string() << '\n';
    for (const auto& f : r.failures) std::cout << "  failed: " << f << '\n';
    pass = pass && r.pass;
  }
  return pass ? 0 : kExitFail;
}
