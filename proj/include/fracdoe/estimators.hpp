#ifndef FRACDOE_ESTIMATORS_HPP
#define FRACDOE_ESTIMATORS_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "fracdoe/path_sim.hpp"

namespace fracdoe {

enum class EstimatorMethod { mle, preliminary, two_stage };

struct EstimateReport {
  double estimate = 0.0;
  EstimatorMethod method = EstimatorMethod::mle;
  double fisher_used = 0.0;
  std::optional<double> standardized_error; // sqrt(I) (est - truth) when truth known
  std::optional<double> remainder;          // R diagnostic, two-stage only
  std::optional<double> tau;
  std::optional<double> stage_condition;    // tau^9 rho^2, preliminary only
  std::uint64_t seed = 0;
  std::pair<double, double> bracket{0.0, 0.0};
  bool boundary_warning = false;
};

// Log of the Girsanov density
//   log L = lambda \int ell^* zeta dZ - (lambda^2/2) \int (ell^* zeta)^2 d<N>
// with zeta recomputed at the queried theta and left-point sums against the
// record increments, matching the simulation discretization exactly.
double log_likelihood(double theta, const ObservationRecord& obs,
                      const ControlFunction& v, const SolverOptions& opts = {});
double log_likelihood(double theta, const ObservationRecord& obs,
                      const SampledControl& v, const SolverOptions& opts = {});

// Coarse 33-point scan of the bracket followed by golden-section refinement;
// ties resolve toward the smaller theta. Sets boundary_warning when the
// maximizer sits against a bracket edge.
EstimateReport mle(const ObservationRecord& obs, const ControlFunction& v,
                   std::pair<double, double> bracket,
                   const SolverOptions& opts = {});
EstimateReport mle(const ObservationRecord& obs, const SampledControl& v,
                   std::pair<double, double> bracket,
                   const SolverOptions& opts = {});

// MLE restricted to a short record [0, tau] generated under the amplified
// power-law input of scale rho; records tau and the condition value
// tau^9 rho^2 (boundary_warning when below the configured floor).
EstimateReport preliminary_estimate(const ObservationRecord& obs, double rho,
                                    std::pair<double, double> bracket,
                                    const SolverOptions& opts = {},
                                    double condition_floor = 1.0);

// One-step Newton correction on [tau, T]:
//   est = theta_bar + [\int_tau^T X' dZ - \int_tau^T X X' d<N>] / I_tau^T(theta_bar)
// where X(t,theta) = lambda ell^* zeta(t) under the composite control
// (stage-1 power law of scale rho on [0,tau], modulated profile at frequency
// sqrt(theta_bar - k^2/2) after). X'' for the remainder diagnostic comes
// from central differences; the diagnostic needs the true theta and stays
// unset otherwise.
EstimateReport newton_two_stage(const ObservationRecord& obs, double tau,
                                double theta_bar,
                                std::optional<double> true_theta = {},
                                const SolverOptions& opts = {});

// Composite two-stage control in the v domain.
ControlFunction two_stage_control(const SystemParams& p, double tau, double rho,
                                  double stage2_frequency);

// Partial Fisher information of the stage-2 system on [tau, T] by the same
// left-point sums the correction uses.
double partial_fisher(const SystemParams& p, const ControlFunction& v,
                      const TimeGrid& grid, double tau,
                      const SolverOptions& opts = {});

} // namespace fracdoe

#endif
