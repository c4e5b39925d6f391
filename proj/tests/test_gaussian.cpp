#include "landau/gaussian.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

using namespace landau;

namespace {
const double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("pinned constants") {
  // (2 pi)^{-3/2}, frozen to its decimal expansion
  CHECK(maxwellian_peak() == doctest::Approx(0.063493635934240969).epsilon(1e-15));
  // (3 (2 pi)^{3/2})^{-1} = maxwellian_peak() / 3
  CHECK(core_diffusivity() ==
        doctest::Approx(maxwellian_peak() / 3.0).epsilon(1e-15));
  CHECK(core_diffusivity() == doctest::Approx(0.021164545311413656).epsilon(1e-12));
}

TEST_CASE("GaussianParams") {
  const GaussianParams p(2.0, 0.3);
  CHECK(p.eval(0.0) ==
        doctest::Approx(2.0 * std::pow(kTwoPi * 0.3, -1.5)).epsilon(1e-14));
  CHECK(p.eval(1.0) == doctest::Approx(p.eval(0.0) * std::exp(-1.0 / 0.6))
                           .epsilon(1e-14));
  CHECK(p.second_moment() == doctest::Approx(3.0 * 2.0 * 0.3).epsilon(1e-15));
}

TEST_CASE("eval_profile integrates to the amplitude") {
  const auto grid = make_grid(8.0, 512, 1.01);
  for (double T : {1.0, 0.25, 0.05}) {
    const auto f = eval_profile(GaussianParams(0.7, T), grid);
    CHECK(integrate_3d(f) == doctest::Approx(0.7).epsilon(1e-4));
    CHECK(f.values.minCoeff() >= 0.0);
  }
}

TEST_CASE("convolution of Gaussians") {
  const GaussianParams p(2.0, 0.3), q(0.5, 0.45);
  const auto pq = convolve_gaussians(p, q);
  CHECK(pq.amplitude == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pq.temperature == doctest::Approx(0.75).epsilon(1e-14));

  // commutativity
  const auto qp = convolve_gaussians(q, p);
  CHECK(pq.amplitude == qp.amplitude);
  CHECK(pq.temperature == qp.temperature);
}

TEST_CASE("equilibrium matches mass and second moment of the initial data") {
  const double delta = 0.1, alpha = 0.4;
  const auto meq = equilibrium(delta, alpha);
  CHECK(meq.amplitude == doctest::Approx(1.0 + std::pow(delta, alpha)).epsilon(1e-14));
  CHECK(meq.temperature ==
        doctest::Approx((1.0 + std::pow(delta, 1.0 + alpha)) /
                        (1.0 + std::pow(delta, alpha)))
            .epsilon(1e-14));

  // independent quadrature oracle: integrate M + delta^alpha M_delta on a
  // fine uniform grid (the dual-cell rule is cleanest without grading)
  const auto grid = make_grid(8.0, 4096, 1.0);
  const auto background = eval_profile(GaussianParams(1.0, 1.0), grid);
  const auto bump = eval_profile(GaussianParams(std::pow(delta, alpha), delta), grid);
  const RadialField f_in(grid, background.values + bump.values);
  const RadialField r2f(grid, grid->nodes.square() * f_in.values);
  CHECK(integrate_3d(f_in) == doctest::Approx(meq.amplitude).epsilon(1e-5));
  CHECK(integrate_3d(r2f) == doctest::Approx(meq.second_moment()).epsilon(1e-5));

  CHECK_THROWS_AS(equilibrium(0.6, 0.4), std::invalid_argument);
  CHECK_NOTHROW(equilibrium(0.6, 0.4, /*unchecked=*/true));
}

TEST_CASE("gaussian_lp_norm") {
  SUBCASE("p = 1 returns the mass, p = inf the peak") {
    const GaussianParams g(0.7, 0.2);
    CHECK(gaussian_lp_norm(g, 1.0) == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(gaussian_lp_norm(g, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(g.eval(0.0)).epsilon(1e-14));
  }

  SUBCASE("closed form at p = 2 matches the direct expression") {
    // delta = 0.04, alpha = 0.4 at the initial time:
    // m (4 pi T)^{-3/4} with m = 0.04^{0.4}, T = 0.04
    const double m = std::pow(0.04, 0.4);
    const GaussianParams g(m, 0.04);
    const double direct = m * std::pow(4.0 * std::numbers::pi * 0.04, -0.75);
    CHECK(gaussian_lp_norm(g, 2.0) == doctest::Approx(direct).epsilon(1e-10));
  }

  SUBCASE("quadrature oracle across p") {
    const GaussianParams g(0.5, 0.3);
    const auto grid = make_grid(8.0, 2048, 1.005);
    const auto f = eval_profile(g, grid);
    for (double p : {1.0, 1.2, 1.5, 2.0, 3.0}) {
      const double quad =
          std::pow(integrate_3d(RadialField(grid, f.values.pow(p))), 1.0 / p);
      CHECK(gaussian_lp_norm(g, p) == doctest::Approx(quad).epsilon(1e-4));
    }
  }

  SUBCASE("rejects p < 1") {
    CHECK_THROWS_AS(gaussian_lp_norm(GaussianParams(1.0, 1.0), 0.5),
                    std::invalid_argument);
  }
}

TEST_CASE("BlowdownProfile") {
  const BlowdownProfile b(0.1, 0.4);
  CHECK(b.c0() == doctest::Approx(core_diffusivity()).epsilon(1e-15));
  CHECK(b.temperature_at(0.0) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(b.mass_at(0.0) == doctest::Approx(std::pow(0.1, 0.4)).epsilon(1e-14));

  // linear temperature growth at rate 2 c0
  CHECK(b.temperature_at(1.0) - b.temperature_at(0.0) ==
        doctest::Approx(2.0 * core_diffusivity()).epsilon(1e-12));

  // exponential mass growth at rate 2 (2 pi)^{-3/2}
  CHECK(b.mass_at(1.0) / b.mass_at(0.0) ==
        doctest::Approx(std::exp(2.0 * maxwellian_peak())).epsilon(1e-12));

  const auto e_params = profile_E(b, 0.25);
  CHECK(e_params.amplitude == doctest::Approx(b.mass_at(0.25)).epsilon(1e-14));
  CHECK(e_params.temperature ==
        doctest::Approx(b.temperature_at(0.25)).epsilon(1e-14));

  SUBCASE("parameter domain") {
    CHECK_THROWS_AS(BlowdownProfile(0.5, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(BlowdownProfile(0.1, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(BlowdownProfile(0.1, 0.5), std::invalid_argument);
    CHECK_NOTHROW(BlowdownProfile(0.5, 0.6, /*unchecked=*/true));
  }
}

TEST_CASE("WeightMu") {
  const WeightMu mu(0.3);
  CHECK(mu.eval(0.0) == doctest::Approx(std::pow(0.3, 1.5)).epsilon(1e-14));
  for (double r : {0.0, 0.5, 1.7})
    CHECK(mu.eval(r) * mu.eval_inverse(r) == doctest::Approx(1.0).epsilon(1e-13));
}
