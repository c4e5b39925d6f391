#pragma once

#include <Eigen/Core>
#include <memory>

namespace landau {

/// Graded 1D radial grid with finite-volume geometry.
///
/// Field values live at the nodes r_0 = 0 < r_1 < ... < r_N = R_max.
/// Each node owns a dual cell bounded by the midpoints between
/// neighbouring nodes (and by 0 / R_max at the ends), so the dual-cell
/// volumes sum exactly to (4pi/3) R_max^3.
struct RadialGrid {
  Eigen::ArrayXd nodes;         // size N+1
  Eigen::ArrayXd interfaces;    // size N, midpoints between adjacent nodes
  Eigen::ArrayXd node_volumes;  // size N+1, dual-cell volumes (3D measure)
  double r_max = 0.0;
  double grading = 1.0;
  int n_cells = 0;  // N

  int n_nodes() const { return static_cast<int>(nodes.size()); }
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Builds a grid on [0, R_max] with N cells. grading > 1 compresses
/// spacing geometrically toward the origin (spacing_i = h0 * grading^i);
/// grading = 1 gives uniform spacing. Throws std::invalid_argument on
/// non-finite or out-of-range parameters (R_max > 0, N >= 4, grading >= 1).
GridPtr make_grid(double r_max, int n, double grading = 1.0);

/// Radial profile f(|v|) sampled at the grid nodes.
struct RadialField {
  GridPtr grid;
  Eigen::ArrayXd values;

  RadialField() = default;
  RadialField(GridPtr g, Eigen::ArrayXd v);

  int size() const { return static_cast<int>(values.size()); }
  double operator()(int i) const { return values[i]; }
};

/// Zero field on the given grid.
RadialField zero_field(const GridPtr& grid);

/// Samples a scalar function of r at the grid nodes.
template <class F>
RadialField sample_field(const GridPtr& grid, F&& f) {
  Eigen::ArrayXd v(grid->nodes.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = f(grid->nodes[i]);
  return RadialField(grid, std::move(v));
}

/// 3D integral over R^3 of the radial profile: 4pi * int r^2 f(r) dr,
/// realized as the dual-cell (midpoint) quadrature. Exact for fields that
/// are piecewise constant on the dual cells.
double integrate_3d(const RadialField& f);

/// Second-order radial derivative with the symmetry condition f'(0) = 0
/// and a one-sided stencil at R_max.
RadialField radial_derivative(const RadialField& f);

/// Second derivative, using even symmetry about the origin at r = 0.
RadialField radial_second_derivative(const RadialField& f);

/// Linear interpolation of f at radius r (clamped to [0, R_max]).
double interp_field(const RadialField& f, double r);

}  // namespace landau
