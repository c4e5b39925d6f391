#pragma once

#include "landau/gaussian.hpp"
#include "landau/grid.hpp"

#include <utility>

namespace landau {

/// Per-snapshot functional values emitted along a run.
struct DiagnosticsRecord {
  double time = 0.0;
  double mass = 0.0;
  double energy = 0.0;   // int |v|^2 F
  double entropy = 0.0;  // int F log F
  double fisher = 0.0;   // int |grad F|^2 / F
  double norm_l2m_of_f = 0.0;   // ||F - M - E(t)||_{L2_M}
  double norm_l2mu_of_f = 0.0;  // ||F - M - E(t)||_{L2_mu_T(t)}
  double dist_to_meq = 0.0;     // ||F - M_eq||_{L2_M}
};

/// sqrt( int f^2 * weight_inverse dv ). Rejects nonpositive weights.
double weighted_l2_norm(const RadialField& f, const RadialField& weight_inverse);

/// Near-field norm ||f||_{L2_{mu_T}} with the Gaussian weight evaluated
/// analytically and the quadrature truncated where exp(-r^2/(2T)) drops
/// below 1e-30 (the true integrand is long gone; far-tail rounding noise
/// amplified by mu^{-1} must not enter).
double weighted_l2_norm_mu(const RadialField& f, double T);

/// L2_M norm with the exact Maxwellian weight M^{-1}.
double l2_maxwellian_norm(const RadialField& f);

/// int F log F dv with the convention 0 log 0 = 0. Requires F >= 0.
double entropy(const RadialField& F);

/// 4 pi int r^2 F'(r)^2 / F(r) dr; nodes with F below 1e-30 * max F are
/// skipped so far-tail quadrature noise cannot pollute the value.
double fisher_information(const RadialField& F);

/// D_M(g) = int ( <v>^{-1} g^2 + <v>^{-3} |grad g|^2 ) M^{-1} dv with
/// <v> = sqrt(1 + r^2). Throws if the integrand grows over the last 10%
/// of the grid (non-integrable input).
double dissipation_DM(const RadialField& g);

/// Projection of a radial field onto the kernel span {M, |v|^2 M} in the
/// L2_M inner product. Returns (a_coef, c_coef) and the remainder,
/// orthogonal to both basis fields. Throws if the Gram system has
/// condition number above 1e8.
struct KernelProjection {
  double a_coef = 0.0;
  double c_coef = 0.0;
  RadialField remainder;
  double gram_condition = 0.0;
};
KernelProjection project_kernel(const RadialField& g);

}  // namespace landau
