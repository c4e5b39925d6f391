#include "landau/lemma_lab.hpp"

#include "landau/functionals.hpp"

#include <doctest.h>

#include <cmath>

using namespace landau;

namespace {

GridPtr standard_grid() { return make_grid(8.0, 512, 1.01); }

}  // namespace

TEST_CASE("structural identities for the Maxwellian") {
  const auto grid = standard_grid();
  const auto m = eval_profile(GaussianParams(1.0, 1.0), grid);
  const auto rep = check_identities(m);
  CHECK(rep.laplacian_residual < 1e-2);
  CHECK(rep.divergence_residual < 1e-4);
}

TEST_CASE("coercivity sign on kernel elements and generic fields") {
  const auto grid = standard_grid();
  const auto m = eval_profile(GaussianParams(1.0, 1.0), grid);

  SUBCASE("kernel elements give zero") {
    CHECK(std::abs(check_coercivity_sign(m)) < 1e-5);
    const RadialField r2m(grid, grid->nodes.square() * m.values);
    CHECK(std::abs(check_coercivity_sign(r2m)) <
          1e-5 * l2_maxwellian_norm(r2m) * l2_maxwellian_norm(r2m));
  }

  SUBCASE("generic Gaussian gives a strictly negative value off the kernel") {
    const auto g = eval_profile(GaussianParams(1.0, 0.5), grid);
    const auto proj = project_kernel(g);
    const double value = check_coercivity_sign(proj.remainder);
    CHECK(value < 0.0);
    // the measured coercivity ratio against the dissipation functional
    CHECK(-value / dissipation_DM(proj.remainder) > 0.0);
  }
}

TEST_CASE("core-linearized sign") {
  const auto grid = standard_grid();
  const double T = 0.2, m_amp = 0.3;

  SUBCASE("the core profile itself is annihilated") {
    const auto e = eval_profile(GaussianParams(m_amp, T), grid);
    const double n = weighted_l2_norm_mu(e, T);
    CHECK(std::abs(check_LE_sign(e, T, m_amp)) < 2e-5 * n * n);
  }

  SUBCASE("zero input gives zero") {
    const RadialField z(grid, Eigen::ArrayXd::Zero(grid->n_nodes()));
    CHECK(check_LE_sign(z, T, m_amp) == 0.0);
  }

  SUBCASE("random draws stay nonpositive within quadrature slack") {
    std::mt19937_64 rng(7);
    for (auto kind : {TestFunctionKind::gaussian_bump,
                      TestFunctionKind::polynomial_times_mu,
                      TestFunctionKind::random_smooth}) {
      TestFunctionFamily fam{kind, T, 7};
      for (int d = 0; d < 20; ++d) {
        const auto h = fam.draw(grid, rng);
        const double n = weighted_l2_norm_mu(h, T);
        CHECK(check_LE_sign(h, T, m_amp) <= 1e-8 * n * n);
      }
    }
  }
}

TEST_CASE("test function families are deterministic and mu-integrable") {
  const auto grid = standard_grid();
  for (auto kind : {TestFunctionKind::gaussian_bump,
                    TestFunctionKind::polynomial_times_mu,
                    TestFunctionKind::random_smooth}) {
    TestFunctionFamily fam{kind, 0.4, 99};
    std::mt19937_64 a(42), b(42);
    const auto h1 = fam.draw(grid, a);
    const auto h2 = fam.draw(grid, b);
    CHECK((h1.values - h2.values).abs().maxCoeff() == 0.0);
    CHECK(std::isfinite(weighted_l2_norm_mu(h1, 0.4)));
  }
}

TEST_CASE("source scaling reports the measured exponent honestly") {
  const BlowdownProfile b(0.05, 0.4);
  const auto rep =
      check_SE_scaling(b, {0.0, 0.05, 0.1, 0.2, 0.4}, standard_grid());
  CHECK(rep.samples.size() == 5);
  CHECK(rep.expected_exponent == -0.5);
  // The norm of the source is dominated by the diffusion-matrix curvature
  // term, which carries no T factor relative to the core profile, so the
  // measured slope sits at -3/2 rather than the -1/2 target; the report
  // must say FAIL rather than hide it. The T^{-3/2} constant is pinned as
  // a regression value: lhs/m -> M(0)^2 * 10.01 * T^{-3/2} as T -> 0.
  CHECK(rep.measured_exponent == doctest::Approx(-1.5).epsilon(0.1));
  CHECK(!rep.pass);
  const double peak = maxwellian_peak();
  const auto& last = rep.samples.front();  // earliest time = smallest T
  const double predicted = peak * peak * 10.01 * std::pow(last.parameter, -1.5);
  CHECK(last.lhs == doctest::Approx(predicted).epsilon(0.15));
}

TEST_CASE("bump matrix bounds fit their exponents") {
  TestFunctionFamily fam{TestFunctionKind::gaussian_bump, 1.0, 1};
  const auto reps = check_Ah_bounds(fam, {0.4, 0.2, 0.1, 0.05}, standard_grid());
  REQUIRE(reps.size() == 5);
  const double expected[5] = {2.0, 1.0, 1.5, 1.0, 1.5};
  for (int i = 0; i < 5; ++i) {
    CHECK(reps[i].expected_exponent == expected[i]);
    CHECK(reps[i].measured_exponent >= expected[i] - 0.15);
    CHECK(reps[i].pass);
  }
}

TEST_CASE("weight calculus") {
  const auto rep = check_mu_calculus({0.5, 0.3, 0.1});
  CHECK(rep.pass);
  CHECK(rep.max_gradient_error < 1e-4);
  CHECK(rep.max_sqrt_gradient_error < 1e-3);
  CHECK(rep.max_time_error < 1e-3);
}

TEST_CASE("eigenvalue monotonicity") {
  const auto rep = check_ev_monotonicity(standard_grid());
  CHECK(rep.pass);
  CHECK(rep.lambda1_monotone);
  CHECK(rep.lambda2_monotone);
  CHECK(rep.derivative_rel_error < 1e-3);
  CHECK(rep.trace_residual < 1e-10);
}

TEST_CASE("full suite on the deterministic seed") {
  const auto reports = run_all_lemma_checks(1);
  CHECK(reports.size() >= 8);
  int failures = 0;
  for (const auto& r : reports)
    if (!r.pass) {
      ++failures;
      // the one known-red check; see the scaling test above
      CHECK(r.id == "source_scaling");
    }
  CHECK(failures == 1);
}

TEST_CASE("fault injection is detected") {
  set_lambda1_fault_scale(1.1);
  const auto rep = check_ev_monotonicity(standard_grid());
  set_lambda1_fault_scale(1.0);
  // a 10% eigenvalue corruption must break the trace identity and the
  // derivative formula
  CHECK(rep.trace_residual > 1e-3);
  CHECK(!rep.pass);
}
