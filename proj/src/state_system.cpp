#include "fracdoe/state_system.hpp"

#include <cmath>
#include <stdexcept>

#include "fracdoe/detail/rk4.hpp"

namespace fracdoe {

namespace {

using Eigen::Matrix2d;
using Eigen::Matrix4d;
using Eigen::Vector4d;

Matrix2d a_matrix(double t, double hurst) {
  const double p2 = std::pow(t, 2.0 * hurst - 1.0);
  const double p4 = std::pow(t, 4.0 * hurst - 2.0);
  Matrix2d A;
  A << p2, 1.0, p4, p2;
  return A;
}

// Kronecker of a 2x2 block structure with A, materialized as 4x4.
Matrix4d kron2(const Matrix2d& left, const Matrix2d& A) {
  Matrix4d M;
  M.block<2, 2>(0, 0) = left(0, 0) * A;
  M.block<2, 2>(0, 2) = left(0, 1) * A;
  M.block<2, 2>(2, 0) = left(1, 0) * A;
  M.block<2, 2>(2, 2) = left(1, 1) * A;
  return M;
}

// Weight-clock step guard for physical grids: with H > 1/2 the first cells
// of a uniform-in-t grid are oversized in the theta clock.
void check_origin_refinement(const TimeGrid& grid, const SystemParams& p) {
  if (p.hurst <= 0.5 || grid.uniform_in == ClockUniform::weight_clock) return;
  const double theta_max = eval_wH(grid.back(), p.constants);
  const double first = eval_wH(grid.points[1], p.constants) -
                       eval_wH(grid.points[0], p.constants);
  if (first > 0.02 * theta_max)
    throw std::invalid_argument(
        "grid not refined near 0 for H > 1/2: first weight-clock step is " +
        std::to_string(first / theta_max) +
        " of the horizon; use a weight-clock or graded grid");
}

} // namespace

SystemParams make_params(double theta, double damping, double hurst) {
  SystemParams p{theta, damping, hurst, compute_constants(hurst)};
  validate_params(p);
  return p;
}

void validate_params(const SystemParams& p) {
  if (!(p.theta > 0.0)) throw std::domain_error("theta must be positive");
  if (!(p.damping > 0.0)) throw std::domain_error("damping k must be positive");
  if (!(p.hurst >= 0.5 && p.hurst < 1.0))
    throw std::domain_error("hurst must lie in [0.5, 1)");
  const HurstConstants c = compute_constants(p.hurst);
  if (std::abs(c.kappa - p.constants.kappa) > 1e-12 * c.kappa ||
      std::abs(c.lambda - p.constants.lambda) > 1e-12 * c.lambda)
    throw std::domain_error("params constants inconsistent with hurst");
}

SystemMatrices eval_system_matrices(double t, const SystemParams& p) {
  if (!(t > 0.0))
    throw std::domain_error("system matrices need t > 0 (powers of t are "
                            "defined at 0 only by limit)");
  SystemMatrices m;
  const double p2 = std::pow(t, 2.0 * p.hurst - 1.0);
  m.ell << p2, 1.0, 0.0, 0.0;
  m.A0 << 0.0, 1.0, -p.theta, -p.damping;
  m.A = a_matrix(t, p.hurst);
  m.b << 0.0, 0.0, 1.0, p2;
  return m;
}

Matrix4d drift_matrix(double t, const SystemParams& p) {
  Matrix2d A0;
  A0 << 0.0, 1.0, -p.theta, -p.damping;
  return p.constants.lambda * kron2(A0, a_matrix(t, p.hurst));
}

Matrix4d drift_matrix_dtheta(double t, const SystemParams& p) {
  Matrix2d dA0;
  dA0 << 0.0, 0.0, -1.0, 0.0;
  return p.constants.lambda * kron2(dA0, a_matrix(t, p.hurst));
}

Vector4d ell_vector(double t, const SystemParams& p) {
  Vector4d ell;
  ell << std::pow(t, 2.0 * p.hurst - 1.0), 1.0, 0.0, 0.0;
  return ell;
}

Vector4d b_vector(double t, const SystemParams& p) {
  Vector4d b;
  b << 0.0, 0.0, 1.0, std::pow(t, 2.0 * p.hurst - 1.0);
  return b;
}

StateTrajectory solve_zeta(const SystemParams& p, const ControlFunction& v,
                           const TimeGrid& grid, bool with_sensitivity,
                           const SolverOptions& opts) {
  validate_grid(grid);
  validate_params(p);
  check_origin_refinement(grid, p);
  const auto& c = p.constants;
  const std::size_t n = grid.size();

  StateTrajectory out;
  out.grid = grid;
  out.zeta.resize(n);
  if (with_sensitivity) out.dzeta_dtheta.emplace(n);

  using State = Eigen::Matrix<double, 8, 1>;
  const auto rhs = [&](double theta_clock, const State& y) -> State {
    const double t = inverse_wH(theta_clock, c);
    const Matrix4d M = drift_matrix(t, p);
    State dy;
    dy.head<4>() = M * y.head<4>() + b_vector(t, p) * v(t);
    dy.tail<4>() = drift_matrix_dtheta(t, p) * y.head<4>() + M * y.tail<4>();
    return dy;
  };

  State y = State::Zero();
  double theta0 = eval_wH(grid.front(), c);
  out.zeta[0] = y.head<4>();
  if (with_sensitivity) (*out.dzeta_dtheta)[0] = y.tail<4>();
  for (std::size_t i = 1; i < n; ++i) {
    const double theta1 = eval_wH(grid.points[i], c);
    const int m = detail::substeps_for(theta1 - theta0, opts.steps_per_theta,
                                       opts.min_substeps, opts.max_substeps);
    y = detail::rk4_advance(rhs, theta0, theta1, y, m);
    out.zeta[i] = y.head<4>();
    if (with_sensitivity) (*out.dzeta_dtheta)[i] = y.tail<4>();
    theta0 = theta1;
  }
  return out;
}

StateTrajectory solve_zeta(const SystemParams& p, const SampledControl& v,
                           const TimeGrid& grid, bool with_sensitivity,
                           const SolverOptions& opts) {
  if (v.clock != ControlClock::v_domain)
    throw std::invalid_argument("solve_zeta expects a v-domain control");
  return solve_zeta(p, control_function(v), grid, with_sensitivity, opts);
}

FundamentalMatrixPath solve_fundamental_matrix(const SystemParams& p,
                                               const TimeGrid& grid,
                                               const SolverOptions& opts) {
  validate_grid(grid);
  validate_params(p);
  check_origin_refinement(grid, p);
  const auto& c = p.constants;
  const std::size_t n = grid.size();

  FundamentalMatrixPath out;
  out.grid = grid;
  out.phi.resize(n);
  out.phi_inv.resize(n);

  using State = Eigen::Matrix<double, 4, 8>; // [phi | phi_inv^T is not needed; keep phi, phi_inv side by side]
  const auto rhs = [&](double theta_clock, const State& y) -> State {
    const double t = inverse_wH(theta_clock, c);
    const Matrix4d M = drift_matrix(t, p);
    State dy;
    dy.leftCols<4>() = M * y.leftCols<4>();
    dy.rightCols<4>() = -y.rightCols<4>() * M;
    return dy;
  };

  State y;
  y.leftCols<4>() = Matrix4d::Identity();
  y.rightCols<4>() = Matrix4d::Identity();
  double theta0 = eval_wH(grid.front(), c);
  out.phi[0] = Matrix4d::Identity();
  out.phi_inv[0] = Matrix4d::Identity();
  for (std::size_t i = 1; i < n; ++i) {
    const double theta1 = eval_wH(grid.points[i], c);
    const int m = detail::substeps_for(theta1 - theta0, opts.steps_per_theta,
                                       opts.min_substeps, opts.max_substeps);
    y = detail::rk4_advance(rhs, theta0, theta1, y, m);
    out.phi[i] = y.leftCols<4>();
    out.phi_inv[i] = y.rightCols<4>();
    const double cond = out.phi[i].cwiseAbs().maxCoeff() *
                        out.phi_inv[i].cwiseAbs().maxCoeff();
    if (cond > 1e12)
      throw std::runtime_error(
          "fundamental matrix ill-conditioned (cond > 1e12) at t = " +
          std::to_string(grid.points[i]) + "; shorten the horizon");
    theta0 = theta1;
  }
  return out;
}

PhysicalTrajectory solve_physical_x(const SystemParams& p,
                                    const ControlFunction& u,
                                    const TimeGrid& grid,
                                    bool with_sensitivity,
                                    const SolverOptions& opts) {
  validate_grid(grid);
  validate_params(p);
  const std::size_t n = grid.size();

  PhysicalTrajectory out;
  out.grid = grid;
  out.x.resize(n);
  out.x_integral.resize(n);
  if (with_sensitivity) out.dx_dtheta.emplace(n);

  // State: (x, x', dx, dx', \int x dt)
  using State = Eigen::Matrix<double, 5, 1>;
  const auto rhs = [&](double t, const State& y) -> State {
    State dy;
    dy[0] = y[1];
    dy[1] = u(t) - p.damping * y[1] - p.theta * y[0];
    dy[2] = y[3];
    dy[3] = -y[0] - p.damping * y[3] - p.theta * y[2];
    dy[4] = y[0];
    return dy;
  };

  State y = State::Zero();
  out.x[0] = 0.0;
  out.x_integral[0] = 0.0;
  if (with_sensitivity) (*out.dx_dtheta)[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double t0 = grid.points[i - 1];
    const double t1 = grid.points[i];
    const int m = detail::substeps_for(t1 - t0, opts.steps_per_theta,
                                       opts.min_substeps, opts.max_substeps);
    y = detail::rk4_advance(rhs, t0, t1, y, m);
    out.x[i] = y[0];
    out.x_integral[i] = y[4];
    if (with_sensitivity) (*out.dx_dtheta)[i] = y[2];
  }
  return out;
}

PhysicalTrajectory solve_physical_x(const SystemParams& p,
                                    const SampledControl& u,
                                    const TimeGrid& grid,
                                    bool with_sensitivity,
                                    const SolverOptions& opts) {
  if (u.clock != ControlClock::u_domain)
    throw std::invalid_argument("solve_physical_x expects a u-domain control");
  return solve_physical_x(p, control_function(u), grid, with_sensitivity, opts);
}

} // namespace fracdoe
