#pragma once

#include "landau/grid.hpp"

namespace landau {

/// Peak value of the unit Maxwellian, (2pi)^{-3/2}.
double maxwellian_peak();

/// Diffusivity of the core-spreading equation, (3 (2pi)^{3/2})^{-1}.
/// Equals the eigenvalue of the diffusion matrix of the unit Maxwellian
/// at the origin; kept as the exact expression, never a rounded decimal.
double core_diffusivity();

/// Isotropic Gaussian m * M_T: amplitude (total mass) and temperature.
struct GaussianParams {
  double amplitude = 1.0;
  double temperature = 1.0;

  GaussianParams() = default;
  GaussianParams(double m, double T);

  /// Pointwise value m (2 pi T)^{-3/2} exp(-r^2 / (2T)).
  double eval(double r) const;

  /// Second moment int |v|^2 m M_T dv = 3 m T.
  double second_moment() const { return 3.0 * amplitude * temperature; }
};

/// Samples the Gaussian on a grid; the result is nonnegative and its
/// 3D quadrature approximates the amplitude.
RadialField eval_profile(const GaussianParams& p, const GridPtr& grid);

/// m1 M_{T1} * m2 M_{T2} = (m1 m2) M_{T1+T2} (amplitudes multiply,
/// temperatures add).
GaussianParams convolve_gaussians(const GaussianParams& p, const GaussianParams& q);

/// Maxwellian with the same mass and second moment as M + delta^alpha M_delta:
/// amplitude 1 + delta^alpha, temperature (1 + delta^{1+alpha})/(1 + delta^alpha).
GaussianParams equilibrium(double delta, double alpha, bool unchecked = false);

/// L^p norm of the Gaussian, closed form
///   m (2 pi T)^{-(3/2)(1 - 1/p)} p^{-3/(2p)};
/// exponent = infinity gives the peak value. Rejects exponent < 1.
double gaussian_lp_norm(const GaussianParams& p, double exponent);

/// The explicit core profile E(t) = m(t) M_{T(t)} with
///   T(t) = delta + 2 c0 t,  m(t) = delta^alpha exp(2 (2pi)^{-3/2} t).
class BlowdownProfile {
 public:
  BlowdownProfile(double delta, double alpha, bool unchecked = false);

  double delta() const { return delta_; }
  double alpha() const { return alpha_; }
  double c0() const;

  double temperature_at(double t) const;
  double mass_at(double t) const;
  GaussianParams at(double t) const;

 private:
  double delta_;
  double alpha_;
};

/// Parameters of E at time t (amplitude m(t), temperature T(t)).
GaussianParams profile_E(const BlowdownProfile& b, double t);

/// Gaussian weight mu_T(r) = T^{3/2} exp(-r^2/(2T)).
struct WeightMu {
  double temperature;

  explicit WeightMu(double T);
  double eval(double r) const;
  double eval_inverse(double r) const;
};

}  // namespace landau
