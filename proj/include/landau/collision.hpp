#pragma once

#include "landau/grid.hpp"

#include <utility>

namespace landau {

/// Collision coefficients of a radial profile f:
///   a      — trace of the diffusion matrix, a[f](r) = (1/r) int_0^r s^2 f ds
///            + int_r^inf s f ds
///   a_prime— d/dr a[f](r) = -(1/r^2) int_0^r s^2 f ds
///   lambda1— eigenvalue of A[f] along the radial direction
///   lambda2— double eigenvalue orthogonal to it, (a - lambda1)/2
///
/// The trace identity lambda1 + 2 lambda2 = a holds by construction.
struct CollisionCoefficients {
  RadialField a;
  RadialField a_prime;
  RadialField lambda1;
  RadialField lambda2;
  double tail_mass = 0.0;  // estimated mass of f beyond R_max
};

/// Trace a[f] via O(N) prefix/suffix sums (cubic segment interpolation
/// with Gauss quadrature, fourth order). a(0) = int_0^inf s f ds.
RadialField compute_a(const RadialField& f);

/// d/dr a[f]; zero at the origin by the limit.
RadialField compute_a_prime(const RadialField& f);

/// Full coefficient set: lambda1(rho) = (1/(3 rho^3)) int_0^rho s^4 f ds
/// + (1/3) int_rho^inf s f ds, lambda2 = (a - lambda1)/2.
CollisionCoefficients compute_lambdas(const RadialField& f);

/// Direct 2D quadrature of the diffusion-matrix convolution
/// (1/8pi) int Pi(v-w)/|v-w| f(|w|) dw at |v| = r. The angular integral is
/// reduced in closed form, the radial integral by per-segment Gauss rules.
/// Slow; used as an independent oracle in tests. Returns (lambda1, lambda2).
std::pair<double, double> oracle_A_matrix(const RadialField& f, double r);

/// Max over interior nodes of |Delta_r a[f] + f| with the radial Laplacian
/// formed by finite differences of compute_a; converges at second order.
double check_laplacian_identity(const RadialField& f);

}  // namespace landau
