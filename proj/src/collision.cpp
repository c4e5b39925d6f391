#include "landau/collision.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landau {

namespace {

// 5-point Gauss-Legendre on [-1, 1].
constexpr double kGx[5] = {-0.906179845938664, -0.538469310105683, 0.0,
                           0.538469310105683, 0.906179845938664};
constexpr double kGw[5] = {0.236926885056189, 0.478628670499366,
                           0.568888888888889, 0.478628670499366,
                           0.236926885056189};

// Cubic Lagrange interpolation of f through the four nodes bracketing
// segment [r_i, r_{i+1}] (clamped at the ends of the grid).
struct SegmentCubic {
  double x[4];
  double y[4];

  SegmentCubic(const Eigen::ArrayXd& r, const Eigen::ArrayXd& v, int seg) {
    const int n = static_cast<int>(r.size()) - 1;
    int base = seg - 1;
    if (base < 0) base = 0;
    if (base + 3 > n) base = n - 3;
    for (int j = 0; j < 4; ++j) {
      x[j] = r[base + j];
      y[j] = v[base + j];
    }
  }

  double operator()(double s) const {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) {
      double l = y[j];
      for (int m = 0; m < 4; ++m)
        if (m != j) l *= (s - x[m]) / (x[j] - x[m]);
      acc += l;
    }
    return acc;
  }
};

// int_{r_i}^{r_{i+1}} s^k f(s) ds with cubic interpolation of f and a
// 5-point Gauss rule (exact through degree 9), fourth-order accurate.
double segment_moment(const Eigen::ArrayXd& r, const Eigen::ArrayXd& v, int seg,
                      int k) {
  const SegmentCubic cubic(r, v, seg);
  const double a = r[seg], b = r[seg + 1];
  double acc = 0.0;
  for (int q = 0; q < 5; ++q) {
    const double s = 0.5 * (a + b) + 0.5 * (b - a) * kGx[q];
    acc += 0.5 * (b - a) * kGw[q] * std::pow(s, k) * cubic(s);
  }
  return acc;
}

// Prefix integrals P[i] = int_0^{r_i} s^k f ds at every node.
Eigen::ArrayXd prefix_moment(const RadialField& f, int k) {
  const auto& r = f.grid->nodes;
  const auto& y = f.values;
  Eigen::ArrayXd p(f.size());
  p[0] = 0.0;
  for (int i = 1; i < f.size(); ++i)
    p[i] = p[i - 1] + segment_moment(r, y, i - 1, k);
  return p;
}

// Suffix integrals S[i] = int_{r_i}^{R_max} s^k f ds.
Eigen::ArrayXd suffix_moment(const RadialField& f, int k) {
  const auto& r = f.grid->nodes;
  const auto& y = f.values;
  Eigen::ArrayXd s(f.size());
  const int n = f.size() - 1;
  s[n] = 0.0;
  for (int i = n - 1; i >= 0; --i) s[i] = s[i + 1] + segment_moment(r, y, i, k);
  return s;
}

double estimate_tail_mass(const RadialField& f) {
  const int n = f.size() - 1;
  const double fn = f.values[n];
  const double fm = f.values[n - 1];
  if (!(fn > 0.0) || !(fm > fn)) return 0.0;
  const double ell = (f.grid->nodes[n] - f.grid->nodes[n - 1]) / std::log(fm / fn);
  const double R = f.grid->r_max;
  // int_R^inf 4pi r^2 f_n e^{-(r-R)/ell} dr
  return 4.0 * std::numbers::pi * fn *
         (R * R * ell + 2.0 * R * ell * ell + 2.0 * ell * ell * ell);
}

}  // namespace

RadialField compute_a(const RadialField& f) {
  const auto p2 = prefix_moment(f, 2);
  const auto s1 = suffix_moment(f, 1);
  const auto& r = f.grid->nodes;
  Eigen::ArrayXd a(f.size());
  a[0] = s1[0];
  for (int i = 1; i < f.size(); ++i) a[i] = p2[i] / r[i] + s1[i];
  return RadialField(f.grid, std::move(a));
}

RadialField compute_a_prime(const RadialField& f) {
  const auto p2 = prefix_moment(f, 2);
  const auto& r = f.grid->nodes;
  Eigen::ArrayXd ap(f.size());
  ap[0] = 0.0;
  for (int i = 1; i < f.size(); ++i) ap[i] = -p2[i] / (r[i] * r[i]);
  return RadialField(f.grid, std::move(ap));
}

CollisionCoefficients compute_lambdas(const RadialField& f) {
  const auto p4 = prefix_moment(f, 4);
  const auto s1 = suffix_moment(f, 1);
  const auto& r = f.grid->nodes;

  CollisionCoefficients c;
  c.a = compute_a(f);
  c.a_prime = compute_a_prime(f);
  Eigen::ArrayXd l1(f.size());
  l1[0] = s1[0] / 3.0;
  for (int i = 1; i < f.size(); ++i)
    l1[i] = p4[i] / (3.0 * r[i] * r[i] * r[i]) + s1[i] / 3.0;
  c.lambda1 = RadialField(f.grid, std::move(l1));
  c.lambda2 = RadialField(f.grid, 0.5 * (c.a.values - c.lambda1.values));
  c.tail_mass = estimate_tail_mass(f);
  return c;
}

namespace {

// Closed-form angular integrals over c = cos(theta) in [-1, 1], with
// d^2 = r^2 + s^2 - 2 r s c:
//   i0 = int dc / d
//   iz = int (r - s c)^2 / d^3 dc   (radial-radial component)
//   ix = int s^2 (1 - c^2) / (2 d^3) dc  (transverse, phi-averaged)
struct AngularIntegrals {
  double i0, iz, ix;
};

AngularIntegrals angular_integrals(double r, double s) {
  const double L = std::abs(r - s);
  const double U = r + s;
  const double B = 2.0 * r * s;
  const double K = r * r - s * s;
  const double A = r * r + s * s;
  const double invL = (L > 0.0) ? 1.0 / L : 0.0;
  const double k2_term = (L > 0.0) ? K * K * (invL - 1.0 / U) : 0.0;
  const double cubes = (U * U * U - L * L * L) / 3.0;

  AngularIntegrals g;
  g.i0 = 2.0 * (U - L) / B;
  g.iz = (k2_term + 2.0 * K * (U - L) + cubes) / (2.0 * r * r * B);
  g.ix = (-k2_term + 2.0 * A * (U - L) - cubes) * s * s / (B * B * B);
  return g;
}

}  // namespace

std::pair<double, double> oracle_A_matrix(const RadialField& f, double r) {
  const auto& x = f.grid->nodes;
  const auto& y = f.values;
  const int n = f.size() - 1;

  if (r == 0.0) {
    // isotropy: A[f](0) = (1/3) int_0^inf s f ds * Id
    double m1 = 0.0;
    for (int i = 0; i < n; ++i) {
      const SegmentCubic cubic(x, y, i);
      const double a = x[i], b = x[i + 1];
      for (int q = 0; q < 5; ++q) {
        const double s = 0.5 * (a + b) + 0.5 * (b - a) * kGx[q];
        const double w = 0.5 * (b - a) * kGw[q];
        m1 += w * s * cubic(s);
      }
    }
    const double lam = m1 / 3.0;
    return {lam, lam};
  }

  double lam1 = 0.0, lam2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const SegmentCubic cubic(x, y, i);
    // split the segment containing s = r (the integrand has a kink there)
    double breaks[3] = {x[i], x[i + 1], 0.0};
    int nb = 2;
    if (r > x[i] && r < x[i + 1]) {
      breaks[1] = r;
      breaks[2] = x[i + 1];
      nb = 3;
    }
    for (int b = 0; b + 1 < nb; ++b) {
      const double a0 = breaks[b], a1 = breaks[b + 1];
      for (int q = 0; q < 5; ++q) {
        const double s = 0.5 * (a0 + a1) + 0.5 * (a1 - a0) * kGx[q];
        const double w = 0.5 * (a1 - a0) * kGw[q];
        if (s <= 0.0) continue;
        const auto g = angular_integrals(r, s);
        const double fs = cubic(s);
        lam1 += w * fs * s * s * (g.i0 - g.iz) * 0.25;
        lam2 += w * fs * s * s * (g.i0 - g.ix) * 0.25;
      }
    }
  }
  return {lam1, lam2};
}

double check_laplacian_identity(const RadialField& f) {
  const auto a = compute_a(f);
  const auto a1 = radial_derivative(a);
  const auto a2 = radial_second_derivative(a);
  const auto& r = f.grid->nodes;
  double worst = 0.0;
  for (int i = 1; i + 1 < f.size(); ++i) {
    const double lap = a2.values[i] + 2.0 * a1.values[i] / r[i];
    worst = std::max(worst, std::abs(lap + f.values[i]));
  }
  return worst;
}

}  // namespace landau
