#ifndef FRACDOE_STATE_SYSTEM_HPP
#define FRACDOE_STATE_SYSTEM_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "fracdoe/control.hpp"
#include "fracdoe/grid.hpp"
#include "fracdoe/hurst.hpp"

namespace fracdoe {

struct SystemParams {
  double theta = 1.0;   // drift coefficient, > 0
  double damping = 1.0; // k, > 0
  double hurst = 0.5;
  HurstConstants constants{0.5, 1.0, 0.5};
};

SystemParams make_params(double theta, double damping, double hurst);
void validate_params(const SystemParams& p);

struct SystemMatrices {
  Eigen::Vector4d ell; // (t^{2H-1}, 1, 0, 0)
  Eigen::Matrix2d A0;  // [[0, 1], [-theta, -k]]
  Eigen::Matrix2d A;   // [[t^{2H-1}, 1], [t^{4H-2}, t^{2H-1}]]
  Eigen::Vector4d b;   // (0, 0, 1, t^{2H-1})
};

// Matrices of the transformed dynamics at time t > 0.
SystemMatrices eval_system_matrices(double t, const SystemParams& p);

// lambda * A0 (x) A(t) as an explicit 4x4; accepts t = 0 through the power
// limits (entries t^{2H-1}, t^{4H-2} -> 0 for H > 1/2, 1 at H = 1/2).
Eigen::Matrix4d drift_matrix(double t, const SystemParams& p);
// lambda * dA0/dtheta (x) A(t), dA0/dtheta = [[0,0],[-1,0]].
Eigen::Matrix4d drift_matrix_dtheta(double t, const SystemParams& p);
Eigen::Vector4d ell_vector(double t, const SystemParams& p);
Eigen::Vector4d b_vector(double t, const SystemParams& p);

struct SolverOptions {
  // Fixed-step RK4 in the w_H-clock; target number of steps per unit of
  // theta-time. Grid cells are subdivided to meet it.
  double steps_per_theta = 4096.0;
  int min_substeps = 1;
  int max_substeps = 1 << 20;
};

struct StateTrajectory {
  TimeGrid grid;
  std::vector<Eigen::Vector4d> zeta;
  std::optional<std::vector<Eigen::Vector4d>> dzeta_dtheta;
};

// Integrates d zeta / d<N>_t = lambda A0 (x) A(t) zeta + b(t) v(t) from
// zeta(0) = 0 in the weight clock; optionally co-integrates the theta
// sensitivity d(dzeta)/d<N> = lambda dA0 (x) A zeta + lambda A0 (x) A dzeta.
StateTrajectory solve_zeta(const SystemParams& p, const ControlFunction& v,
                           const TimeGrid& grid, bool with_sensitivity,
                           const SolverOptions& opts = {});
StateTrajectory solve_zeta(const SystemParams& p, const SampledControl& v,
                           const TimeGrid& grid, bool with_sensitivity,
                           const SolverOptions& opts = {});

struct FundamentalMatrixPath {
  TimeGrid grid;
  std::vector<Eigen::Matrix4d> phi;
  std::vector<Eigen::Matrix4d> phi_inv;
};

// d phi / d<N>_t = lambda A0 (x) A(t) phi, phi = Id at the grid origin;
// the inverse is co-integrated. Throws when the path becomes numerically
// ill-conditioned (cond > 1e12).
FundamentalMatrixPath solve_fundamental_matrix(const SystemParams& p,
                                               const TimeGrid& grid,
                                               const SolverOptions& opts = {});

struct PhysicalTrajectory {
  TimeGrid grid;
  std::vector<double> x;
  std::optional<std::vector<double>> dx_dtheta;
  std::vector<double> x_integral; // \int_0^t x ds, co-integrated
};

// Physical second-order system d^2x/dt^2 + k dx/dt + theta x = u(t) from
// rest; the sensitivity solves the same ODE forced by -x.
PhysicalTrajectory solve_physical_x(const SystemParams& p,
                                    const ControlFunction& u,
                                    const TimeGrid& grid,
                                    bool with_sensitivity,
                                    const SolverOptions& opts = {});
PhysicalTrajectory solve_physical_x(const SystemParams& p,
                                    const SampledControl& u,
                                    const TimeGrid& grid,
                                    bool with_sensitivity,
                                    const SolverOptions& opts = {});

} // namespace fracdoe

#endif
