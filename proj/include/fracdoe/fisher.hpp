#ifndef FRACDOE_FISHER_HPP
#define FRACDOE_FISHER_HPP

#include <span>
#include <utility>
#include <vector>

#include "fracdoe/control.hpp"
#include "fracdoe/state_system.hpp"

namespace fracdoe {

enum class FisherMode { fractional, brownian, asymptotic };

struct FisherReport {
  double total = 0.0;     // I_T
  double rate = 0.0;      // I_T / T
  double asymptote = 0.0; // closed-form limit for the regime of the params
  double horizon = 0.0;
  FisherMode mode = FisherMode::fractional;
};

// I_T(theta, v) = lambda^2 \int_0^T (dzeta/dtheta)^* ell ell^* (dzeta/dtheta) d<N>_t
FisherReport fisher_fractional(const SystemParams& p, const ControlFunction& v,
                               const TimeGrid& grid, const SolverOptions& opts = {});
FisherReport fisher_fractional(const SystemParams& p, const SampledControl& v,
                               const TimeGrid& grid, const SolverOptions& opts = {});

// Brownian reference model: I_T(theta, u) = \int_0^T (dx/dtheta)^2 dt
FisherReport fisher_brownian(const SystemParams& p, const ControlFunction& u,
                             const TimeGrid& grid, const SolverOptions& opts = {});
FisherReport fisher_brownian(const SystemParams& p, const SampledControl& u,
                             const TimeGrid& grid, const SolverOptions& opts = {});

// Closed-form rate: 1/theta^4 when k^2 >= 2 theta, else 16/(k^4-4k^2 theta)^2.
FisherReport asymptotic_fisher(const SystemParams& p);

// Exponent convention for the g function prefactor. The printed form uses
// t^{1/2}; the weighted form t^{1/2-H} is the one under which both the
// small-t Taylor order t^4 and the identity
//   I_T = (1/4) \int_0^T |dg/dtheta|^2 dt
// hold, and is the default.
enum class GExponent { weighted, printed };

struct GFunctionPath {
  TimeGrid grid;
  std::vector<double> g;
  std::vector<double> dg_dtheta;
};

// g(theta,t) = t^e ell(t)^* phi(theta,t) \int_0^t phi^{-1}(theta,s) b(s) s^{1/2-H} ds
// with d phi/dt = (A0/2) (x) A_H(t) phi, evaluated in the physical clock as
// one forced linear ODE together with its theta sensitivity.
GFunctionPath g_function(const SystemParams& p, const TimeGrid& grid,
                         GExponent exponent = GExponent::weighted,
                         const SolverOptions& opts = {});

struct IkConditionReport {
  double envelope_C = 0.0;
  double envelope_beta = 0.0;
  bool envelope_holds = false;
  bool info_divergence = false; // I_T increasing along a T ladder
  double info_ratio_bound = 0.0; // max/min of I_T over the compact
  std::vector<std::pair<double, double>> F_values; // (h, F(h))
};

// Numerical check of the Ibragimov-Khasminskii conditions for the case-1
// system: F(h) = \int_0^T |X_T(theta + h I^{-1/2}, t) - X_T(theta, t)|^2 d<N>_t
// evaluated on h_values, with a lower envelope C min(|h|^2, |h|^beta)
// fitted by least squares on the log-log values.
IkConditionReport ik_condition_check(const SystemParams& p, const TimeGrid& grid,
                                     std::span<const double> h_values,
                                     std::pair<double, double> compact,
                                     const SolverOptions& opts = {});

} // namespace fracdoe

#endif
