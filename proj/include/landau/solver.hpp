#pragma once

#include "landau/collision.hpp"
#include "landau/functionals.hpp"
#include "landau/gaussian.hpp"
#include "landau/grid.hpp"

#include <string>
#include <vector>

namespace landau {

enum class Scheme { semi_implicit, explicit_euler };

/// Single source of experiment truth for one run.
struct SolverConfig {
  double delta = 0.1;
  double alpha = 0.4;
  double r_max = 8.0;
  int n_cells = 512;
  double grading = 1.015;
  double dt = 1e-4;
  double t_end = 0.5;
  double snapshot_every = 0.05;
  Scheme scheme = Scheme::semi_implicit;
  int picard_iterations = 1;
  bool adaptive_dt = false;
  bool unchecked = false;

  void validate() const;
  GridPtr build_grid() const;
};

struct SolverState {
  double t = 0.0;
  RadialField f;               // nonnegative distribution F
  CollisionCoefficients coeffs;
  long step_count = 0;
  double clipped_mass = 0.0;   // cumulative mass removed by positivity clipping
};

/// F(0) = M + delta^alpha M_delta on the configured grid. Throws if the
/// grid does not place at least 10 nodes inside r < sqrt(delta).
SolverState initial_condition(const SolverConfig& cfg);

/// One time step of the conservative flux scheme
///   dF/dt = (1/r^2) d/dr ( r^2 [ lambda1[F] dF/dr - a'[F] F ] )
/// with coefficients frozen from the current F (optionally refreshed by
/// Picard iterations), exponential-fitting interface fluxes (positivity
/// preserving, Maxwellians are discrete equilibria), and zero flux at both
/// boundaries (mass exactly conserved).
void step(SolverState& state, double dt, const SolverConfig& cfg);

struct RunResult {
  std::vector<SolverState> snapshots;
  std::vector<DiagnosticsRecord> diagnostics;
  bool failed = false;
  std::string error;
};

/// Integrates to t_end, emitting snapshots and diagnostics at the
/// configured cadence. The diagnostics compare F against M + E(t) with
/// E from the closed form.
RunResult run(const SolverConfig& cfg);

/// Integrates the linear core equation dE/dt = c0 Laplace(E) + 2 M(0) E
/// with the same spatial discretization and implicit stepping; used to
/// validate the discretization against the closed-form profile.
RadialField linear_E_solver(const SolverConfig& cfg, double t_end);

/// Discrete right-hand side of the flux scheme at the given field
/// (coefficients computed from the field itself). Used for equilibrium
/// residual studies.
RadialField discrete_rhs(const RadialField& f);

}  // namespace landau
