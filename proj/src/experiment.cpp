#include "landau/experiment.hpp"

#include "landau/lemma_lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <stdexcept>

namespace landau {

namespace {

nlohmann::json solver_to_json(const SolverConfig& c) {
  return {{"delta", c.delta},
          {"alpha", c.alpha},
          {"r_max", c.r_max},
          {"n_cells", c.n_cells},
          {"grading", c.grading},
          {"dt", c.dt},
          {"t_end", c.t_end},
          {"snapshot_every", c.snapshot_every},
          {"scheme", c.scheme == Scheme::semi_implicit ? "semi_implicit"
                                                       : "explicit_euler"},
          {"picard_iterations", c.picard_iterations},
          {"adaptive_dt", c.adaptive_dt},
          {"unchecked", c.unchecked}};
}

SolverConfig solver_from_json(const nlohmann::json& j) {
  SolverConfig c;
  c.delta = j.value("delta", c.delta);
  c.alpha = j.value("alpha", c.alpha);
  c.r_max = j.value("r_max", c.r_max);
  c.n_cells = j.value("n_cells", c.n_cells);
  c.grading = j.value("grading", c.grading);
  c.dt = j.value("dt", c.dt);
  c.t_end = j.value("t_end", c.t_end);
  c.snapshot_every = j.value("snapshot_every", c.snapshot_every);
  const std::string scheme = j.value("scheme", std::string("semi_implicit"));
  if (scheme == "semi_implicit") {
    c.scheme = Scheme::semi_implicit;
  } else if (scheme == "explicit_euler") {
    c.scheme = Scheme::explicit_euler;
  } else {
    throw std::invalid_argument("unknown scheme: " + scheme);
  }
  c.picard_iterations = j.value("picard_iterations", c.picard_iterations);
  c.adaptive_dt = j.value("adaptive_dt", c.adaptive_dt);
  c.unchecked = j.value("unchecked", c.unchecked);
  return c;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// ||F - reference Gaussian||_{L2_M} for the final state of a run.
double distance_to_gaussian(const RadialField& f, const GaussianParams& g) {
  const auto ref = eval_profile(g, f.grid);
  return l2_maxwellian_norm(RadialField(f.grid, f.values - ref.values));
}

void write_run_artifacts(const std::filesystem::path& dir, const RunResult& res,
                         const SolverConfig& cfg, const std::string& hash,
                         double wall_seconds) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < res.snapshots.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "snapshot_%04zu.csv", i);
    io::write_field_csv(dir / name, res.snapshots[i].f, hash);
  }
  io::write_diagnostics_csv(dir / "diagnostics.csv", res.diagnostics, hash);

  nlohmann::json meta = {{"spec_hash", hash},
                         {"solver", solver_to_json(cfg)},
                         {"version", "landau_blowdown 1.0.0"},
                         {"wall_seconds", wall_seconds},
                         {"failed", res.failed},
                         {"error", res.error}};
  if (!res.snapshots.empty()) {
    meta["final_time"] = res.snapshots.back().t;
    meta["clipped_mass"] = res.snapshots.back().clipped_mass;
  }
  io::write_json(dir / "metadata.json", meta);
}

}  // namespace

nlohmann::json ExperimentSpec::to_json() const {
  return {{"mode", mode},
          {"solver", solver_to_json(solver)},
          {"sweep_deltas", sweep_deltas},
          {"output_dir", output_dir.string()},
          {"seed", seed}};
}

ExperimentSpec ExperimentSpec::from_json(const nlohmann::json& j) {
  ExperimentSpec s;
  s.mode = j.value("mode", s.mode);
  if (j.contains("solver")) s.solver = solver_from_json(j.at("solver"));
  s.sweep_deltas = j.value("sweep_deltas", s.sweep_deltas);
  s.output_dir = j.value("output_dir", s.output_dir.string());
  s.seed = j.value("seed", s.seed);
  return s;
}

std::string ExperimentSpec::canonical() const {
  // The hash identifies the scientific content of a run, so the output
  // location must not perturb it.
  nlohmann::json j = to_json();
  j.erase("output_dir");
  return j.dump();
}

std::string ExperimentSpec::spec_hash() const {
  return io::hash_hex(io::fnv1a(canonical()));
}

void ExperimentSpec::validate() const {
  if (mode != "simulate" && mode != "sweep" && mode != "verify-lemmas" &&
      mode != "profile-tables")
    throw std::invalid_argument("unknown mode: " + mode);
  if (mode == "simulate" || mode == "sweep") solver.validate();
  if (mode == "sweep") {
    if (sweep_deltas.size() < 3)
      throw std::invalid_argument("sweep requires at least 3 delta values");
    for (double d : sweep_deltas) {
      SolverConfig c = solver;
      c.delta = d;
      c.validate();
    }
  }
  std::filesystem::create_directories(output_dir);
}

int cmd_simulate(const ExperimentSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto hash = spec.spec_hash();
  const RunResult res = run(spec.solver);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const auto dir = spec.output_dir / ("run_" + hash);
  write_run_artifacts(dir, res, spec.solver, hash, wall);

  if (res.failed) {
    std::fprintf(stderr, "solver failed: %s (partial artifacts in %s)\n",
                 res.error.c_str(), dir.string().c_str());
    return kExitSolver;
  }

  const auto& d = res.diagnostics;
  const double mass_drift =
      std::abs(d.back().mass - d.front().mass) / d.front().mass;
  bool entropy_ok = true;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i].entropy > d[i - 1].entropy + 1e-8) entropy_ok = false;

  const auto& final_state = res.snapshots.back();
  const double dist_m =
      distance_to_gaussian(final_state.f, GaussianParams(1.0, 1.0));

  std::printf("run %s: t_end=%g steps=%ld\n", hash.c_str(), final_state.t,
              final_state.step_count);
  std::printf("  mass drift (relative): %.3e\n", mass_drift);
  std::printf("  entropy: %.8f -> %.8f  H-theorem: %s\n", d.front().entropy,
              d.back().entropy, entropy_ok ? "PASS" : "FAIL");
  std::printf("  ||F(t_end) - M||_{L2_M} = %.6e\n", dist_m);
  std::printf("  ||F(t_end) - M_eq||_{L2_M} = %.6e\n", d.back().dist_to_meq);
  return kExitOk;
}

int cmd_sweep(const ExperimentSpec& spec, SweepResult* result) {
  const auto hash = spec.spec_hash();

  // descending delta so "nonincreasing as delta decreases" reads in order
  std::vector<double> deltas = spec.sweep_deltas;
  std::sort(deltas.rbegin(), deltas.rend());

  struct PerRun {
    RunResult res;
    SolverConfig cfg;
    double wall = 0.0;
  };
  std::vector<std::future<PerRun>> futures;
  for (double d : deltas) {
    SolverConfig cfg = spec.solver;
    cfg.delta = d;
    cfg.t_end = 0.5;  // headline measurement time t*
    futures.push_back(std::async(std::launch::async, [cfg]() {
      const auto t0 = std::chrono::steady_clock::now();
      PerRun pr;
      pr.cfg = cfg;
      pr.res = run(cfg);
      pr.wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      return pr;
    }));
  }

  SweepResult sweep;
  sweep.expected_lower_bound = spec.solver.alpha - 0.25;
  bool any_failed = false;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    PerRun pr = futures[i].get();
    char dname[64];
    std::snprintf(dname, sizeof(dname), "sweep_delta_%g", deltas[i]);
    write_run_artifacts(spec.output_dir / dname, pr.res, pr.cfg, hash, pr.wall);
    if (pr.res.failed) {
      std::fprintf(stderr, "sweep run delta=%g failed: %s\n", deltas[i],
                   pr.res.error.c_str());
      any_failed = true;
      continue;
    }
    const auto& f = pr.res.snapshots.back().f;
    sweep.deltas.push_back(deltas[i]);
    sweep.norm_vs_maxwellian.push_back(
        distance_to_gaussian(f, GaussianParams(1.0, 1.0)));
    sweep.norm_vs_equilibrium.push_back(distance_to_gaussian(
        f, equilibrium(deltas[i], pr.cfg.alpha, pr.cfg.unchecked)));
  }
  if (any_failed) return kExitSolver;

  sweep.fitted_slope = loglog_slope(sweep.deltas, sweep.norm_vs_maxwellian);
  bool monotone = true;
  for (std::size_t i = 1; i < sweep.deltas.size(); ++i)
    if (sweep.norm_vs_maxwellian[i] > sweep.norm_vs_maxwellian[i - 1])
      monotone = false;
  sweep.pass =
      monotone && sweep.fitted_slope >= sweep.expected_lower_bound - 0.05;

  nlohmann::json j = {{"spec_hash", hash},
                      {"deltas", sweep.deltas},
                      {"norm_vs_maxwellian", sweep.norm_vs_maxwellian},
                      {"norm_vs_equilibrium", sweep.norm_vs_equilibrium},
                      {"fitted_slope", sweep.fitted_slope},
                      {"expected_lower_bound", sweep.expected_lower_bound},
                      {"pass", sweep.pass}};
  io::write_json(spec.output_dir / "sweep.json", j);

  {
    std::ofstream out(spec.output_dir / "sweep.csv");
    out << "# spec_hash=" << hash << "\n";
    out << "delta,norm_vs_maxwellian,norm_vs_equilibrium\n";
    for (std::size_t i = 0; i < sweep.deltas.size(); ++i)
      out << io::format_double(sweep.deltas[i]) << ','
          << io::format_double(sweep.norm_vs_maxwellian[i]) << ','
          << io::format_double(sweep.norm_vs_equilibrium[i]) << '\n';
  }

  std::printf("sweep: slope=%.4f (lower bound %.4f) monotone=%s -> %s\n",
              sweep.fitted_slope, sweep.expected_lower_bound - 0.05,
              monotone ? "yes" : "no", sweep.pass ? "PASS" : "FAIL");
  if (result) *result = sweep;
  return kExitOk;
}

int cmd_verify_lemmas(const ExperimentSpec& spec) {
  const auto reports = run_all_lemma_checks(spec.seed);

  nlohmann::json arr = nlohmann::json::array();
  bool all_pass = true;
  std::printf("%-26s %-6s %s\n", "lemma", "status", "details");
  for (const auto& r : reports) {
    arr.push_back(io::to_json(r));
    all_pass = all_pass && r.pass;
    std::printf("%-26s %-6s %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL",
                r.details.c_str());
  }
  io::write_json(spec.output_dir / "lemma_reports.json",
                 {{"spec_hash", spec.spec_hash()}, {"reports", arr}});

  if (!all_pass) {
    std::fprintf(stderr, "failed lemma checks:");
    for (const auto& r : reports)
      if (!r.pass) std::fprintf(stderr, " %s", r.id.c_str());
    std::fprintf(stderr, "\n");
    return kExitLemma;
  }
  return kExitOk;
}

int cmd_profile_tables(const ExperimentSpec& spec) {
  const auto hash = spec.spec_hash();
  const BlowdownProfile b(spec.solver.delta, spec.solver.alpha,
                          spec.solver.unchecked);
  const double exponents[6] = {1.0, 1.2, 1.5, 2.0, 3.0,
                               std::numeric_limits<double>::infinity()};
  const auto grid = make_grid(spec.solver.r_max, 2048, 1.01);

  std::filesystem::create_directories(spec.output_dir);
  std::ofstream out(spec.output_dir / "profile_tables.csv");
  out << "# spec_hash=" << hash << "\n";
  out << "t,p,closed_form,quadrature,rel_error\n";
  for (int k = 0; k <= 10; ++k) {
    const double t = 0.1 * k;
    const auto params = profile_E(b, t);
    const auto e = eval_profile(params, grid);
    for (double p : exponents) {
      const double closed = gaussian_lp_norm(params, p);
      double quad;
      if (std::isinf(p)) {
        quad = e.values.maxCoeff();
      } else {
        quad = std::pow(
            integrate_3d(RadialField(grid, e.values.pow(p))), 1.0 / p);
      }
      const double rel = std::abs(quad - closed) / closed;
      out << io::format_double(t) << ','
          << (std::isinf(p) ? std::string("inf") : io::format_double(p)) << ','
          << io::format_double(closed) << ',' << io::format_double(quad) << ','
          << io::format_double(rel) << '\n';
    }
  }
  return kExitOk;
}

int run_experiment(const ExperimentSpec& spec) {
  try {
    spec.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitValidation;
  }
  if (spec.mode == "simulate") return cmd_simulate(spec);
  if (spec.mode == "sweep") return cmd_sweep(spec);
  if (spec.mode == "verify-lemmas") return cmd_verify_lemmas(spec);
  return cmd_profile_tables(spec);
}

}  // namespace landau
