#include "landau/experiment.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>

namespace {

// Flags shared by every subcommand; optional so that only explicitly
// given flags override the JSON config.
struct CommonFlags {
  std::optional<std::string> config;
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;
  std::optional<double> delta;
  std::optional<double> alpha;
  std::optional<double> t_end;
  std::optional<int> grid_n;
  std::optional<double> grid_rmax;
  std::optional<double> dt;
  bool unchecked = false;
};

void add_common(CLI::App* cmd, CommonFlags& fl) {
  cmd->add_option("--config", fl.config, "JSON experiment configuration");
  cmd->add_option("--output", fl.output, "output directory (default: out)");
  cmd->add_option("--seed", fl.seed, "seed for randomized checks (default: 1)");
  cmd->add_option("--delta", fl.delta,
                  "initial bump temperature, in (0, 1/2) (default: 0.1)");
  cmd->add_option("--alpha", fl.alpha,
                  "bump amplitude exponent, in (1/4, 1/2) (default: 0.4)");
  cmd->add_option("--t-end", fl.t_end, "final time (default: 0.5)");
  cmd->add_option("--grid-n", fl.grid_n, "number of radial cells (default: 512)");
  cmd->add_option("--grid-rmax", fl.grid_rmax, "domain radius (default: 8)");
  cmd->add_option("--dt", fl.dt, "time step (default: 1e-4)");
  cmd->add_flag("--unchecked", fl.unchecked,
                "skip the parameter-range preconditions");
}

int build_spec(const CommonFlags& fl, const std::string& mode,
               landau::ExperimentSpec& spec) {
  if (fl.config) {
    std::ifstream in(*fl.config);
    if (!in) {
      std::fprintf(stderr, "cannot read config: %s\n", fl.config->c_str());
      return landau::kExitValidation;
    }
    nlohmann::json j;
    try {
      in >> j;
      spec = landau::ExperimentSpec::from_json(j);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "malformed config: %s\n", e.what());
      return landau::kExitValidation;
    }
  }
  spec.mode = mode;
  if (fl.output) spec.output_dir = *fl.output;
  if (fl.seed) spec.seed = *fl.seed;
  if (fl.delta) spec.solver.delta = *fl.delta;
  if (fl.alpha) spec.solver.alpha = *fl.alpha;
  if (fl.t_end) spec.solver.t_end = *fl.t_end;
  if (fl.grid_n) spec.solver.n_cells = *fl.grid_n;
  if (fl.grid_rmax) spec.solver.r_max = *fl.grid_rmax;
  if (fl.dt) spec.solver.dt = *fl.dt;
  if (fl.unchecked) spec.solver.unchecked = true;
  return landau::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Radially symmetric Landau-Coulomb solver and verification harness"};
  app.require_subcommand(1);

  CommonFlags flags;
  const char* modes[] = {"simulate", "sweep", "verify-lemmas", "profile-tables"};
  const char* descriptions[] = {
      "integrate one configuration and export diagnostics",
      "parallel delta-sweep with log-log slope fit at t* = 1/2",
      "run the structural-identity and scaling check suite",
      "closed-form L^p tables of the core profile with quadrature cross-check"};
  std::vector<double> sweep_deltas;
  for (int i = 0; i < 4; ++i) {
    auto* cmd = app.add_subcommand(modes[i], descriptions[i]);
    add_common(cmd, flags);
    if (std::string(modes[i]) == "sweep")
      cmd->add_option("--deltas", sweep_deltas,
                      "delta values to sweep (at least 3)");
  }

  CLI11_PARSE(app, argc, argv);

  const std::string mode = app.get_subcommands().front()->get_name();
  landau::ExperimentSpec spec;
  if (int rc = build_spec(flags, mode, spec); rc != landau::kExitOk) return rc;
  if (!sweep_deltas.empty()) spec.sweep_deltas = sweep_deltas;

  try {
    return landau::run_experiment(spec);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return landau::kExitSolver;
  }
}
