#pragma once

#include "landau/io.hpp"
#include "landau/solver.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace landau {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitLemma = 3;

/// Single JSON document driving one CLI invocation.
struct ExperimentSpec {
  std::string mode = "simulate";  // simulate | sweep | verify-lemmas | profile-tables
  SolverConfig solver;
  std::vector<double> sweep_deltas;
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 1;

  nlohmann::json to_json() const;
  static ExperimentSpec from_json(const nlohmann::json& j);

  /// Canonical serialized form; its FNV-1a hash stamps every artifact.
  std::string canonical() const;
  std::string spec_hash() const;

  /// Throws std::invalid_argument if the mode's required fields are
  /// missing or out of range.
  void validate() const;
};

/// Per-delta headline measurements at t* = 1/2 and the fitted slope.
struct SweepResult {
  std::vector<double> deltas;
  std::vector<double> norm_vs_maxwellian;   // ||F(t*) - M||_{L2_M}
  std::vector<double> norm_vs_equilibrium;  // ||F(t*) - M_eq||_{L2_M}
  double fitted_slope = 0.0;
  double expected_lower_bound = 0.0;  // alpha - 1/4
  bool pass = false;
};

int cmd_simulate(const ExperimentSpec& spec);
int cmd_sweep(const ExperimentSpec& spec, SweepResult* result = nullptr);
int cmd_verify_lemmas(const ExperimentSpec& spec);
int cmd_profile_tables(const ExperimentSpec& spec);

/// Dispatches on spec.mode.
int run_experiment(const ExperimentSpec& spec);

}  // namespace landau
