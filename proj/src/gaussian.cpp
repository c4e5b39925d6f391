#include "landau/gaussian.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace landau {

namespace {
const double kTwoPi = 2.0 * std::numbers::pi;
}

double maxwellian_peak() { return std::pow(kTwoPi, -1.5); }

double core_diffusivity() { return 1.0 / (3.0 * std::pow(kTwoPi, 1.5)); }

GaussianParams::GaussianParams(double m, double T) : amplitude(m), temperature(T) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("GaussianParams: temperature must be > 0");
  if (!(m >= 0.0) || !std::isfinite(m))
    throw std::invalid_argument("GaussianParams: amplitude must be >= 0");
}

double GaussianParams::eval(double r) const {
  return amplitude * std::pow(kTwoPi * temperature, -1.5) *
         std::exp(-r * r / (2.0 * temperature));
}

RadialField eval_profile(const GaussianParams& p, const GridPtr& grid) {
  return sample_field(grid, [&](double r) { return p.eval(r); });
}

GaussianParams convolve_gaussians(const GaussianParams& p, const GaussianParams& q) {
  return GaussianParams(p.amplitude * q.amplitude, p.temperature + q.temperature);
}

GaussianParams equilibrium(double delta, double alpha, bool unchecked) {
  if (!unchecked) {
    if (!(delta > 0.0 && delta < 0.5))
      throw std::invalid_argument("equilibrium: delta must lie in (0, 1/2)");
    if (!(alpha > 0.25 && alpha < 0.5))
      throw std::invalid_argument("equilibrium: alpha must lie in (1/4, 1/2)");
  }
  const double mass = 1.0 + std::pow(delta, alpha);
  const double temp = (1.0 + std::pow(delta, 1.0 + alpha)) / mass;
  return GaussianParams(mass, temp);
}

double gaussian_lp_norm(const GaussianParams& p, double exponent) {
  if (!(exponent >= 1.0))
    throw std::invalid_argument("gaussian_lp_norm: exponent must be >= 1");
  if (std::isinf(exponent))
    return p.amplitude * std::pow(kTwoPi * p.temperature, -1.5);
  return p.amplitude *
         std::pow(kTwoPi * p.temperature, -1.5 * (1.0 - 1.0 / exponent)) *
         std::pow(exponent, -1.5 / exponent);
}

BlowdownProfile::BlowdownProfile(double delta, double alpha, bool unchecked)
    : delta_(delta), alpha_(alpha) {
  if (!std::isfinite(delta) || !std::isfinite(alpha))
    throw std::invalid_argument("BlowdownProfile: non-finite parameter");
  if (!unchecked) {
    if (!(delta > 0.0 && delta < 0.5))
      throw std::invalid_argument("BlowdownProfile: delta must lie in (0, 1/2)");
    if (!(alpha > 0.25 && alpha < 0.5))
      throw std::invalid_argument("BlowdownProfile: alpha must lie in (1/4, 1/2)");
  } else if (!(delta > 0.0)) {
    throw std::invalid_argument("BlowdownProfile: delta must be > 0");
  }
}

double BlowdownProfile::c0() const { return core_diffusivity(); }

double BlowdownProfile::temperature_at(double t) const {
  return delta_ + 2.0 * core_diffusivity() * t;
}

double BlowdownProfile::mass_at(double t) const {
  return std::pow(delta_, alpha_) * std::exp(2.0 * maxwellian_peak() * t);
}

GaussianParams BlowdownProfile::at(double t) const {
  return GaussianParams(mass_at(t), temperature_at(t));
}

GaussianParams profile_E(const BlowdownProfile& b, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("profile_E: t must be >= 0");
  return b.at(t);
}

WeightMu::WeightMu(double T) : temperature(T) {
  if (!(T > 0.0)) throw std::invalid_argument("WeightMu: temperature must be > 0");
}

double WeightMu::eval(double r) const {
  return std::pow(temperature, 1.5) * std::exp(-r * r / (2.0 * temperature));
}

double WeightMu::eval_inverse(double r) const {
  return std::pow(temperature, -1.5) * std::exp(r * r / (2.0 * temperature));
}

}  // namespace landau
