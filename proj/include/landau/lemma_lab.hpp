#pragma once

#include "landau/collision.hpp"
#include "landau/gaussian.hpp"
#include "landau/grid.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace landau {

/// Outcome of one scaling estimate: measured log-log exponent against the
/// expected one, with the sampled (parameter, lhs, rhs_bound) triples.
struct ScalingSample {
  double parameter = 0.0;
  double lhs = 0.0;
  double rhs_bound = 0.0;
};

struct ScalingReport {
  std::string lemma_id;
  double measured_exponent = 0.0;
  double expected_exponent = 0.0;
  double tolerance = 0.0;
  std::vector<ScalingSample> samples;
  bool pass = false;
  std::string details;
};

enum class TestFunctionKind { gaussian_bump, polynomial_times_mu, random_smooth };

/// Deterministic family of radial test functions decaying at least as fast
/// as mu_T.
struct TestFunctionFamily {
  TestFunctionKind kind = TestFunctionKind::gaussian_bump;
  double temperature = 1.0;
  std::uint64_t seed = 1;

  RadialField draw(const GridPtr& grid, std::mt19937_64& rng) const;
};

/// Residuals of the structural identities: the trace potential satisfies
/// Delta a[f] = -f, and the radial divergence of the diffusion matrix
/// equals grad a[f]. Both converge at second order under refinement.
struct IdentityReport {
  double laplacian_residual = 0.0;
  double divergence_residual = 0.0;
};
IdentityReport check_identities(const RadialField& f);

/// Quadratic form of the Maxwellian-linearized collision operator,
/// int L_M(g) g M^{-1} dv; nonpositive, zero on the kernel span {M, r^2 M}.
double check_coercivity_sign(const RadialField& g);

/// Same sign check for the core-linearized operator L_E with E = m M_T,
/// int L_E(h) h mu_T^{-1} dv <= 0.
double check_LE_sign(const RadialField& h, double T, double m);

/// T-scaling of the source term || S_E ||_{L2_mu} / m; the bound is
/// C T^{-1/2}, so the fitted exponent must stay >= -0.55. Also checks the
/// quadratic flatness |lambda1[M](r) - lambda1[M](0)| <= C r^2 for r <= 1.
ScalingReport check_SE_scaling(const BlowdownProfile& b,
                               const std::vector<double>& times,
                               const GridPtr& grid);

/// T-scaling of five pointwise diffusion-matrix bounds for unit-norm
/// near-field bumps; expected exponents {2, 1, 3/2, 1, 3/2}.
std::vector<ScalingReport> check_Ah_bounds(const TestFunctionFamily& family,
                                           const std::vector<double>& T_values,
                                           const GridPtr& grid);

/// Finite-difference verification of the Gaussian-weight calculus:
/// grad mu^{-1} = (v/T) mu^{-1}, |grad mu^{-1/2}|^2 = (|v|^2/(4T^2)) mu^{-1},
/// and d/dt mu^{-1} = -c0 (3/T + |v|^2/T^2) mu^{-1}.
struct MuCalculusReport {
  double max_gradient_error = 0.0;
  double max_sqrt_gradient_error = 0.0;
  double max_time_error = 0.0;
  bool pass = false;
};
MuCalculusReport check_mu_calculus(const std::vector<double>& T_values);

/// Node-wise monotonicity of the Maxwellian eigenvalues and agreement of
/// the derivative formula lambda1'(rho) = -(1/rho^4) int_0^rho M s^4 ds
/// with finite differences.
struct EvMonotonicityReport {
  bool lambda1_monotone = false;
  bool lambda2_monotone = false;
  double derivative_rel_error = 0.0;
  double trace_residual = 0.0;
  bool pass = false;
};
EvMonotonicityReport check_ev_monotonicity(const GridPtr& grid);

/// One line of the lemma-suite summary.
struct LemmaReport {
  std::string id;
  bool pass = false;
  std::string details;
};

/// Runs the whole verification suite on a deterministic seed.
std::vector<LemmaReport> run_all_lemma_checks(std::uint64_t seed);

/// Test hook: multiplies lambda1 by the given factor inside the suite's
/// coefficient computations. Used by fault-injection tests; 1.0 in
/// production.
void set_lambda1_fault_scale(double scale);
double lambda1_fault_scale();

}  // namespace landau
