#include "landau/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landau {

namespace {
constexpr double kFourPiThirds = 4.0 * std::numbers::pi / 3.0;
}

GridPtr make_grid(double r_max, int n, double grading) {
  if (!std::isfinite(r_max) || r_max <= 0.0)
    throw std::invalid_argument("make_grid: R_max must be finite and > 0");
  if (n < 4) throw std::invalid_argument("make_grid: N must be >= 4");
  if (!std::isfinite(grading) || grading < 1.0)
    throw std::invalid_argument("make_grid: grading must be finite and >= 1");

  auto grid = std::make_shared<RadialGrid>();
  grid->r_max = r_max;
  grid->grading = grading;
  grid->n_cells = n;

  Eigen::ArrayXd nodes(n + 1);
  nodes[0] = 0.0;
  if (grading == 1.0) {
    for (int i = 1; i <= n; ++i) nodes[i] = r_max * double(i) / double(n);
  } else {
    // spacing_i = h0 * grading^i, sum over i = 0..n-1 equals r_max
    const double h0 = r_max * (grading - 1.0) / (std::pow(grading, n) - 1.0);
    double h = h0;
    for (int i = 1; i <= n; ++i) {
      nodes[i] = nodes[i - 1] + h;
      h *= grading;
    }
  }
  nodes[n] = r_max;  // kill accumulated rounding at the outer boundary

  Eigen::ArrayXd interfaces(n);
  for (int i = 0; i < n; ++i) interfaces[i] = 0.5 * (nodes[i] + nodes[i + 1]);

  Eigen::ArrayXd vols(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double lo = (i == 0) ? 0.0 : interfaces[i - 1];
    const double hi = (i == n) ? r_max : interfaces[i];
    vols[i] = kFourPiThirds * (hi * hi * hi - lo * lo * lo);
  }

  grid->nodes = std::move(nodes);
  grid->interfaces = std::move(interfaces);
  grid->node_volumes = std::move(vols);
  return grid;
}

RadialField::RadialField(GridPtr g, Eigen::ArrayXd v)
    : grid(std::move(g)), values(std::move(v)) {
  if (!grid) throw std::invalid_argument("RadialField: null grid");
  if (values.size() != grid->nodes.size())
    throw std::invalid_argument("RadialField: size mismatch with grid");
}

RadialField zero_field(const GridPtr& grid) {
  return RadialField(grid, Eigen::ArrayXd::Zero(grid->nodes.size()));
}

double integrate_3d(const RadialField& f) {
  if (!f.grid) throw std::invalid_argument("integrate_3d: empty field");
  return (f.grid->node_volumes * f.values).sum();
}

RadialField radial_derivative(const RadialField& f) {
  const auto& r = f.grid->nodes;
  const auto& y = f.values;
  const int n = f.size() - 1;
  if (n < 2) throw std::invalid_argument("radial_derivative: need N >= 3 nodes");
  Eigen::ArrayXd d(n + 1);
  d[0] = 0.0;  // radial symmetry: f'(0) = 0
  for (int i = 1; i < n; ++i) {
    const double hm = r[i] - r[i - 1];
    const double hp = r[i + 1] - r[i];
    d[i] = -hp / (hm * (hm + hp)) * y[i - 1] +
           (hp - hm) / (hm * hp) * y[i] +
           hm / (hp * (hm + hp)) * y[i + 1];
  }
  {
    // one-sided second-order stencil at the outer boundary
    const double h1 = r[n - 1] - r[n - 2];
    const double h2 = r[n] - r[n - 1];
    d[n] = h2 / (h1 * (h1 + h2)) * y[n - 2] -
           (h1 + h2) / (h1 * h2) * y[n - 1] +
           (h1 + 2.0 * h2) / (h2 * (h1 + h2)) * y[n];
  }
  return RadialField(f.grid, std::move(d));
}

RadialField radial_second_derivative(const RadialField& f) {
  const auto& r = f.grid->nodes;
  const auto& y = f.values;
  const int n = f.size() - 1;
  if (n < 2) throw std::invalid_argument("radial_second_derivative: need N >= 3 nodes");
  Eigen::ArrayXd d(n + 1);
  // even extension about r = 0
  d[0] = 2.0 * (y[1] - y[0]) / (r[1] * r[1]);
  for (int i = 1; i < n; ++i) {
    const double hm = r[i] - r[i - 1];
    const double hp = r[i + 1] - r[i];
    d[i] = 2.0 * (y[i - 1] / (hm * (hm + hp)) - y[i] / (hm * hp) +
                  y[i + 1] / (hp * (hm + hp)));
  }
  d[n] = d[n - 1];
  return RadialField(f.grid, std::move(d));
}

double interp_field(const RadialField& f, double r) {
  const auto& x = f.grid->nodes;
  const int n = f.size() - 1;
  if (r <= 0.0) return f.values[0];
  if (r >= x[n]) return f.values[n];
  int lo = 0, hi = n;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (x[mid] <= r) lo = mid; else hi = mid;
  }
  const double w = (r - x[lo]) / (x[hi] - x[lo]);
  return (1.0 - w) * f.values[lo] + w * f.values[hi];
}

}  // namespace landau
