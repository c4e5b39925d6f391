#include "landau/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landau {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// x / (e^x - 1), stable near 0 and for large |x|.
double bernoulli(double x) {
  if (std::abs(x) < 1e-5) return 1.0 - 0.5 * x + x * x / 12.0;
  if (x > 700.0) return 0.0;
  if (x < -700.0) return -x;
  return x / std::expm1(x);
}

// Interface flux coefficients: J_k = cp[k] * F_{k+1} - cm[k] * F_k with
//   J = D F' + u F  resolved exactly on the interval (exponential fitting).
// Discrete equilibria satisfy F_{k+1}/F_k = exp(-u h / D), which matches
// the Maxwellian balance lambda1 F' = a' F.
struct InterfaceCoeffs {
  Eigen::ArrayXd cp, cm, area;
};

InterfaceCoeffs interface_coeffs(const GridPtr& grid, const Eigen::ArrayXd& lambda1,
                                 const Eigen::ArrayXd& a_prime) {
  const int n = grid->n_cells;
  InterfaceCoeffs c;
  c.cp.resize(n);
  c.cm.resize(n);
  c.area.resize(n);
  for (int k = 0; k < n; ++k) {
    const double h = grid->nodes[k + 1] - grid->nodes[k];
    const double D = 0.5 * (lambda1[k] + lambda1[k + 1]);
    const double u = -0.5 * (a_prime[k] + a_prime[k + 1]);
    c.area[k] = grid->interfaces[k] * grid->interfaces[k];
    if (D <= 0.0) {
      // vacuum limit: pure drift, upwinded
      c.cp[k] = (u > 0.0) ? u : 0.0;
      c.cm[k] = (u < 0.0) ? -u : 0.0;
      continue;
    }
    const double w = u * h / D;
    c.cp[k] = (D / h) * bernoulli(-w);
    c.cm[k] = (D / h) * bernoulli(w);
  }
  return c;
}

// Solves the implicit system (nu_i + dt * L) F = nu_i * rhs where L is the
// tridiagonal flux operator assembled from the interface coefficients.
Eigen::ArrayXd implicit_solve(const GridPtr& grid, const InterfaceCoeffs& c,
                              double dt, const Eigen::ArrayXd& f_old,
                              double reaction = 0.0) {
  const int nn = grid->n_nodes();
  const Eigen::ArrayXd nu = grid->node_volumes / kFourPi;  // r^2 dr measure

  Eigen::ArrayXd lo(nn), di(nn), up(nn), rhs(nn);
  for (int i = 0; i < nn; ++i) {
    double d = nu[i] * (1.0 - dt * reaction);
    double l = 0.0, u = 0.0;
    if (i < nn - 1) {  // right interface i
      d += dt * c.area[i] * c.cm[i];
      u = -dt * c.area[i] * c.cp[i];
    }
    if (i > 0) {  // left interface i-1
      d += dt * c.area[i - 1] * c.cp[i - 1];
      l = -dt * c.area[i - 1] * c.cm[i - 1];
    }
    lo[i] = l;
    di[i] = d;
    up[i] = u;
    rhs[i] = nu[i] * f_old[i];
  }

  // Thomas sweep; the system is an M-matrix (columnwise diagonally
  // dominant), so no pivoting is needed. Guard the dominance anyway.
  for (int i = 0; i < nn; ++i) {
    const double offdiag = std::abs(i > 0 ? up[i - 1] : 0.0) +
                           std::abs(i < nn - 1 ? lo[i + 1] : 0.0);
    if (di[i] <= offdiag - 1e-14 * di[i])
      throw std::runtime_error(
          "implicit_solve: tridiagonal system lost diagonal dominance; reduce dt");
  }

  Eigen::ArrayXd cprime(nn), dprime(nn);
  cprime[0] = up[0] / di[0];
  dprime[0] = rhs[0] / di[0];
  for (int i = 1; i < nn; ++i) {
    const double m = di[i] - lo[i] * cprime[i - 1];
    cprime[i] = up[i] / m;
    dprime[i] = (rhs[i] - lo[i] * dprime[i - 1]) / m;
  }
  Eigen::ArrayXd x(nn);
  x[nn - 1] = dprime[nn - 1];
  for (int i = nn - 2; i >= 0; --i) x[i] = dprime[i] - cprime[i] * x[i + 1];
  return x;
}

Eigen::ArrayXd explicit_rhs(const GridPtr& grid, const InterfaceCoeffs& c,
                            const Eigen::ArrayXd& f) {
  const int nn = grid->n_nodes();
  const Eigen::ArrayXd nu = grid->node_volumes / kFourPi;
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(nn);
  for (int k = 0; k < nn - 1; ++k) {
    const double J = c.area[k] * (c.cp[k] * f[k + 1] - c.cm[k] * f[k]);
    out[k] += J / nu[k];
    out[k + 1] -= J / nu[k + 1];
  }
  return out;
}

void enforce_positivity(SolverState& state) {
  auto& v = state.f.values;
  if (!v.allFinite())
    throw std::runtime_error("step: solution is no longer finite; reduce dt");
  const double peak = v.maxCoeff();
  const double worst = v.minCoeff();
  if (worst < -1e-13 * peak)
    throw std::runtime_error("step: positivity violated beyond tolerance");
  if (worst < 0.0) {
    for (int i = 0; i < v.size(); ++i) {
      if (v[i] < 0.0) {
        state.clipped_mass += -v[i] * state.f.grid->node_volumes[i];
        v[i] = 0.0;
      }
    }
  }
}

}  // namespace

void SolverConfig::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("SolverConfig: delta must be > 0");
  if (!unchecked) {
    if (!(delta < 0.5))
      throw std::invalid_argument("SolverConfig: delta must lie in (0, 1/2)");
    if (!(alpha > 0.25 && alpha < 0.5))
      throw std::invalid_argument("SolverConfig: alpha must lie in (1/4, 1/2)");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be > 0");
  if (!(t_end > 0.0)) throw std::invalid_argument("SolverConfig: t_end must be > 0");
  if (picard_iterations < 1)
    throw std::invalid_argument("SolverConfig: picard_iterations must be >= 1");
  if (!(snapshot_every > 0.0))
    throw std::invalid_argument("SolverConfig: snapshot_every must be > 0");
}

GridPtr SolverConfig::build_grid() const { return make_grid(r_max, n_cells, grading); }

SolverState initial_condition(const SolverConfig& cfg) {
  cfg.validate();
  const auto grid = cfg.build_grid();

  const double core = std::sqrt(cfg.delta);
  int inside = 0;
  for (int i = 0; i < grid->n_nodes(); ++i)
    if (grid->nodes[i] < core) ++inside;
  if (inside < 10)
    throw std::invalid_argument(
        "initial_condition: grid places fewer than 10 nodes inside r < sqrt(delta)");

  const GaussianParams background(1.0, 1.0);
  const GaussianParams bump(std::pow(cfg.delta, cfg.alpha), cfg.delta);
  SolverState state;
  state.t = 0.0;
  state.f = RadialField(
      grid, eval_profile(background, grid).values + eval_profile(bump, grid).values);
  state.coeffs = compute_lambdas(state.f);
  state.step_count = 0;
  return state;
}

void step(SolverState& state, double dt, const SolverConfig& cfg) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
  const auto& grid = state.f.grid;

  if (cfg.scheme == Scheme::explicit_euler) {
    const auto c = interface_coeffs(grid, state.coeffs.lambda1.values,
                                    state.coeffs.a_prime.values);
    state.f.values += dt * explicit_rhs(grid, c, state.f.values);
  } else {
    Eigen::ArrayXd f_new = state.f.values;
    CollisionCoefficients coeffs = state.coeffs;
    for (int it = 0; it < cfg.picard_iterations; ++it) {
      if (it > 0) coeffs = compute_lambdas(RadialField(grid, f_new));
      const auto c =
          interface_coeffs(grid, coeffs.lambda1.values, coeffs.a_prime.values);
      f_new = implicit_solve(grid, c, dt, state.f.values);
    }
    state.f.values = std::move(f_new);
  }

  enforce_positivity(state);
  state.coeffs = compute_lambdas(state.f);
  state.t += dt;
  ++state.step_count;
}

RunResult run(const SolverConfig& cfg) {
  RunResult result;
  try {
    SolverState state = initial_condition(cfg);
    const auto grid = state.f.grid;

    const long n_steps = std::lround(cfg.t_end / cfg.dt);
    const double dt = cfg.t_end / double(n_steps);
    const long cadence = std::max<long>(1, std::lround(cfg.snapshot_every / dt));

    const GaussianParams unit(1.0, 1.0);
    const auto m_field = eval_profile(unit, grid);
    const auto meq_field = eval_profile(equilibrium(cfg.delta, cfg.alpha, cfg.unchecked), grid);
    const BlowdownProfile blowdown(cfg.delta, cfg.alpha, cfg.unchecked);

    auto record = [&](const SolverState& s) {
      DiagnosticsRecord rec;
      rec.time = s.t;
      rec.mass = integrate_3d(s.f);
      rec.energy = integrate_3d(RadialField(grid, grid->nodes.square() * s.f.values));
      rec.entropy = entropy(s.f);
      rec.fisher = fisher_information(s.f);
      const auto e_params = profile_E(blowdown, s.t);
      const auto e_field = eval_profile(e_params, grid);
      const RadialField pert(grid, s.f.values - m_field.values - e_field.values);
      rec.norm_l2m_of_f = l2_maxwellian_norm(pert);
      rec.norm_l2mu_of_f = weighted_l2_norm_mu(pert, e_params.temperature);
      rec.dist_to_meq =
          l2_maxwellian_norm(RadialField(grid, s.f.values - meq_field.values));
      result.snapshots.push_back(s);
      result.diagnostics.push_back(rec);
    };

    record(state);
    for (long k = 0; k < n_steps; ++k) {
      double dt_k = dt;
      if (cfg.adaptive_dt) {
        // cap so the explicit-drift CFL number stays <= 0.5
        double cfl_dt = dt;
        for (int i = 0; i + 1 < grid->n_nodes(); ++i) {
          const double h = grid->nodes[i + 1] - grid->nodes[i];
          const double u = std::abs(state.coeffs.a_prime.values[i]);
          if (u > 0.0) cfl_dt = std::min(cfl_dt, 0.5 * h / u);
        }
        dt_k = cfl_dt;
      }
      step(state, dt_k, cfg);
      if ((k + 1) % cadence == 0 || k + 1 == n_steps) record(state);
    }
  } catch (const std::exception& e) {
    result.failed = true;
    result.error = e.what();
  }
  return result;
}

RadialField linear_E_solver(const SolverConfig& cfg, double t_end) {
  if (!(t_end >= 0.0)) throw std::invalid_argument("linear_E_solver: t_end must be >= 0");
  const auto grid = cfg.build_grid();
  const GaussianParams bump(std::pow(cfg.delta, cfg.alpha), cfg.delta);
  RadialField e = eval_profile(bump, grid);
  if (t_end == 0.0) return e;

  const double c0 = core_diffusivity();
  const double growth = 2.0 * maxwellian_peak();
  const Eigen::ArrayXd lambda1 = Eigen::ArrayXd::Constant(grid->n_nodes(), c0);
  const Eigen::ArrayXd a_prime = Eigen::ArrayXd::Zero(grid->n_nodes());
  const auto c = interface_coeffs(grid, lambda1, a_prime);

  const long n_steps = std::max<long>(1, std::lround(t_end / cfg.dt));
  const double dt = t_end / double(n_steps);
  for (long k = 0; k < n_steps; ++k)
    e.values = implicit_solve(grid, c, dt, e.values, growth);
  return e;
}

RadialField discrete_rhs(const RadialField& f) {
  const auto coeffs = compute_lambdas(f);
  const auto c =
      interface_coeffs(f.grid, coeffs.lambda1.values, coeffs.a_prime.values);
  return RadialField(f.grid, explicit_rhs(f.grid, c, f.values));
}

}  // namespace landau
