#include "landau/functionals.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landau {

double weighted_l2_norm(const RadialField& f, const RadialField& weight_inverse) {
  if ((weight_inverse.values <= 0.0).any() ||
      !weight_inverse.values.isFinite().all())
    throw std::invalid_argument("weighted_l2_norm: weight_inverse must be positive and finite");
  const RadialField integrand(f.grid, f.values.square() * weight_inverse.values);
  return std::sqrt(integrate_3d(integrand));
}

double weighted_l2_norm_mu(const RadialField& f, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("weighted_l2_norm_mu: T must be > 0");
  const auto& r = f.grid->nodes;
  const auto& vol = f.grid->node_volumes;
  const double t32 = std::pow(T, -1.5);
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const double e = r[i] * r[i] / (2.0 * T);
    if (e > 69.0) break;  // exp(-e) < 1e-30: true integrand is negligible
    const double v = f.values[i];
    acc += vol[i] * v * v * t32 * std::exp(e);
  }
  return std::sqrt(acc);
}

double l2_maxwellian_norm(const RadialField& f) {
  const double c = std::pow(2.0 * std::numbers::pi, 1.5);
  const auto& r = f.grid->nodes;
  const auto& vol = f.grid->node_volumes;
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const double v = f.values[i];
    acc += vol[i] * v * v * c * std::exp(0.5 * r[i] * r[i]);
  }
  return std::sqrt(acc);
}

double entropy(const RadialField& F) {
  const auto& vol = F.grid->node_volumes;
  double acc = 0.0;
  for (int i = 0; i < F.size(); ++i) {
    const double v = F.values[i];
    if (v < 0.0) throw std::invalid_argument("entropy: field must be nonnegative");
    if (v > 0.0) acc += vol[i] * v * std::log(v);
  }
  return acc;
}

double fisher_information(const RadialField& F) {
  const auto d = radial_derivative(F);
  const auto& vol = F.grid->node_volumes;
  const double floor = 1e-30 * F.values.maxCoeff();
  double acc = 0.0;
  for (int i = 0; i < F.size(); ++i) {
    if (F.values[i] <= floor) continue;
    acc += vol[i] * d.values[i] * d.values[i] / F.values[i];
  }
  return acc;
}

double dissipation_DM(const RadialField& g) {
  const auto d = radial_derivative(g);
  const auto& r = g.grid->nodes;
  const auto& vol = g.grid->node_volumes;
  const double c = std::pow(2.0 * std::numbers::pi, 1.5);
  const int n = g.size();
  Eigen::ArrayXd integrand(n);
  for (int i = 0; i < n; ++i) {
    const double br = std::sqrt(1.0 + r[i] * r[i]);
    const double minv = c * std::exp(0.5 * r[i] * r[i]);
    integrand[i] = (g.values[i] * g.values[i] / br +
                    d.values[i] * d.values[i] / (br * br * br)) *
                   minv;
  }
  // non-integrable growth: integrand rising across the last 10% of the grid
  const int i90 = (9 * (n - 1)) / 10;
  const double peak = integrand.maxCoeff();
  if (peak > 0.0 && integrand[n - 1] > integrand[i90] &&
      integrand[n - 1] > 1e-12 * peak)
    throw std::domain_error("dissipation_DM: integrand grows toward R_max (non-integrable input)");
  return (vol * integrand).sum();
}

KernelProjection project_kernel(const RadialField& g) {
  const auto& grid = g.grid;
  const GaussianParams unit(1.0, 1.0);
  const auto m = eval_profile(unit, grid);
  const RadialField r2m(grid, grid->nodes.square() * m.values);

  const double c = std::pow(2.0 * std::numbers::pi, 1.5);
  auto inner = [&](const RadialField& u, const RadialField& v) {
    double acc = 0.0;
    for (int i = 0; i < u.size(); ++i) {
      const double minv = c * std::exp(0.5 * grid->nodes[i] * grid->nodes[i]);
      acc += grid->node_volumes[i] * u.values[i] * v.values[i] * minv;
    }
    return acc;
  };

  Eigen::Matrix2d gram;
  gram << inner(m, m), inner(m, r2m), inner(m, r2m), inner(r2m, r2m);
  Eigen::Vector2d rhs(inner(g, m), inner(g, r2m));

  Eigen::JacobiSVD<Eigen::Matrix2d> svd(gram, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double cond = svd.singularValues()(0) / svd.singularValues()(1);
  if (cond > 1e8)
    throw std::runtime_error("project_kernel: Gram matrix condition number exceeds 1e8");
  const Eigen::Vector2d coef = svd.solve(rhs);

  KernelProjection proj;
  proj.a_coef = coef(0);
  proj.c_coef = coef(1);
  proj.gram_condition = cond;
  proj.remainder = RadialField(
      grid, g.values - coef(0) * m.values - coef(1) * r2m.values);
  return proj;
}

}  // namespace landau
