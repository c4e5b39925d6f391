#include "landau/functionals.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace landau;

namespace {

const double kTwoPi = 2.0 * std::numbers::pi;

GridPtr standard_grid() { return make_grid(8.0, 512, 1.01); }

}  // namespace

TEST_CASE("l2_maxwellian_norm closed forms") {
  const auto grid = standard_grid();

  SUBCASE("||M||_{L2_M} = 1") {
    const auto m = eval_profile(GaussianParams(1.0, 1.0), grid);
    CHECK(l2_maxwellian_norm(m) == doctest::Approx(1.0).epsilon(1e-4));
  }

  SUBCASE("||m M_T||_{L2_M} closed form") {
    // int (m M_T)^2 M^{-1} = m^2 T^{-3} T_e^{3/2} with 1/T_e = 2/T - 1,
    // valid for T < 2 (the 2 pi factors cancel exactly)
    const double m = 0.7, T = 0.4;
    const double te = 1.0 / (2.0 / T - 1.0);
    const double expected = m * std::pow(T, -1.5) * std::pow(te, 0.75);
    const auto f = eval_profile(GaussianParams(m, T), grid);
    CHECK(l2_maxwellian_norm(f) == doctest::Approx(expected).epsilon(1e-4));
  }

  SUBCASE("homogeneity") {
    const auto f = eval_profile(GaussianParams(1.0, 0.5), grid);
    const RadialField scaled(grid, -2.5 * f.values);
    CHECK(l2_maxwellian_norm(scaled) ==
          doctest::Approx(2.5 * l2_maxwellian_norm(f)).epsilon(1e-12));
  }
}

TEST_CASE("weighted_l2_norm_mu closed forms") {
  const auto grid = standard_grid();

  SUBCASE("Gaussian against its own-temperature weight") {
    // ||m M_T||_{L2_mu_T} = m (2 pi T)^{-3/4} T^{-3/4}
    const double m = 0.3, T = 0.2;
    const auto f = eval_profile(GaussianParams(m, T), grid);
    const double expected = m * std::pow(kTwoPi * T, -0.75) * std::pow(T, -0.75);
    CHECK(weighted_l2_norm_mu(f, T) == doctest::Approx(expected).epsilon(1e-4));
  }

  SUBCASE("the weight itself") {
    // ||mu_T||_{L2_mu_T}^2 = int mu_T = (2 pi)^{3/2} T^3
    const double T = 0.3;
    const WeightMu mu(T);
    const auto f = sample_field(grid, [&](double r) { return mu.eval(r); });
    const double expected = std::pow(kTwoPi, 0.75) * std::pow(T, 1.5);
    CHECK(weighted_l2_norm_mu(f, T) == doctest::Approx(expected).epsilon(1e-4));
  }
}

TEST_CASE("weighted_l2_norm validates the weight") {
  const auto grid = standard_grid();
  const auto f = eval_profile(GaussianParams(1.0, 0.5), grid);
  const RadialField bad(grid, Eigen::ArrayXd::Zero(grid->n_nodes()));
  CHECK_THROWS_AS(weighted_l2_norm(f, bad), std::invalid_argument);
}

TEST_CASE("entropy") {
  const auto grid = standard_grid();

  SUBCASE("Gaussian closed form: m log(m (2 pi T)^{-3/2}) - 3m/2") {
    for (double T : {1.0, 0.4}) {
      const double m = 0.8;
      const auto f = eval_profile(GaussianParams(m, T), grid);
      const double expected =
          m * std::log(m * std::pow(kTwoPi * T, -1.5)) - 1.5 * m;
      CHECK(entropy(f) == doctest::Approx(expected).epsilon(1e-4));
    }
  }

  SUBCASE("zero field has zero entropy (0 log 0 = 0)") {
    const RadialField z(grid, Eigen::ArrayXd::Zero(grid->n_nodes()));
    CHECK(entropy(z) == 0.0);
  }

  SUBCASE("negative values rejected") {
    RadialField f = eval_profile(GaussianParams(1.0, 1.0), grid);
    f.values[10] = -1e-3;
    CHECK_THROWS_AS(entropy(f), std::invalid_argument);
  }
}

TEST_CASE("fisher_information of a Gaussian is 3m/T") {
  const auto grid = standard_grid();
  for (double T : {1.0, 0.25}) {
    const double m = 1.3;
    const auto f = eval_profile(GaussianParams(m, T), grid);
    CHECK(fisher_information(f) == doctest::Approx(3.0 * m / T).epsilon(1e-3));
  }
}

TEST_CASE("dissipation_DM") {
  const auto grid = standard_grid();

  SUBCASE("positive on integrable input") {
    const auto g = eval_profile(GaussianParams(1.0, 0.5), grid);
    CHECK(dissipation_DM(g) > 0.0);
  }

  SUBCASE("rejects non-integrable input") {
    // a constant does not decay; g^2 M^{-1} grows toward the boundary
    const auto one = sample_field(grid, [](double) { return 1.0; });
    CHECK_THROWS_AS(dissipation_DM(one), std::domain_error);
  }
}

TEST_CASE("project_kernel") {
  const auto grid = standard_grid();
  const auto m = eval_profile(GaussianParams(1.0, 1.0), grid);

  SUBCASE("recovers exact kernel coefficients") {
    const RadialField g(grid, 2.0 * m.values +
                                  0.5 * grid->nodes.square() * m.values);
    const auto proj = project_kernel(g);
    CHECK(proj.a_coef == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(proj.c_coef == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(l2_maxwellian_norm(proj.remainder) < 1e-8);
    CHECK(proj.gram_condition < 1e8);
  }

  SUBCASE("remainder is orthogonal to the kernel") {
    const auto g = eval_profile(GaussianParams(1.0, 0.5), grid);
    const auto proj = project_kernel(g);
    // inner products <remainder, M>_{L2_M} and <remainder, r^2 M>_{L2_M}
    const double c = std::pow(kTwoPi, 1.5);
    double ip0 = 0.0, ip2 = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      const double minv = c * std::exp(0.5 * grid->nodes[i] * grid->nodes[i]);
      ip0 += grid->node_volumes[i] * proj.remainder.values[i] * m.values[i] * minv;
      ip2 += grid->node_volumes[i] * proj.remainder.values[i] *
             grid->nodes[i] * grid->nodes[i] * m.values[i] * minv;
    }
    CHECK(std::abs(ip0) < 1e-10);
    CHECK(std::abs(ip2) < 1e-10);
  }
}
