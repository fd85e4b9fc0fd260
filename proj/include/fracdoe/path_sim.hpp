#ifndef FRACDOE_PATH_SIM_HPP
#define FRACDOE_PATH_SIM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fracdoe/control.hpp"
#include "fracdoe/grid.hpp"
#include "fracdoe/state_system.hpp"

namespace fracdoe {

struct FbmPath {
  TimeGrid grid;
  std::vector<double> values; // V^H at the grid points, values[0] = 0
  double hurst = 0.5;
  std::uint64_t seed = 0;
};

// Stage-1 segment provenance for two-stage records: amplified power-law
// input of scale rho on [0, tau].
struct StitchInfo {
  double tau = 0.0;
  double rho = 0.0;
};

struct ObservationRecord {
  TimeGrid grid;
  std::vector<double> z; // fundamental semimartingale, z[0] = 0
  std::optional<std::vector<double>> y;
  ControlSpec control;
  SystemParams params;
  std::uint64_t seed = 0;
  std::optional<StitchInfo> stitch;
};

struct SimOptions {
  bool with_noise = true; // test hook: false integrates the drift only
  SolverOptions solver;
};

// Exact-in-distribution fBm on a uniform physical grid: circulant embedding
// of the increment covariance, dense Cholesky fallback for small grids.
FbmPath simulate_fbm(double hurst, const TimeGrid& grid, std::uint64_t seed);

// Independent N(0, w_H(t_{i+1}) - w_H(t_i)) increments.
std::vector<double> simulate_martingale_increments(const HurstConstants& c,
                                                   const TimeGrid& grid,
                                                   std::uint64_t seed);

// Direct simulation of dZ = lambda ell^* zeta d<N> + dN with left-point
// drift sums and exact martingale increments.
ObservationRecord simulate_observation(const SystemParams& params,
                                       const ControlSpec& v_spec,
                                       const TimeGrid& grid,
                                       std::uint64_t seed,
                                       const SimOptions& opts = {});
ObservationRecord simulate_observation(const SystemParams& params,
                                       const SampledControl& v,
                                       const TimeGrid& grid,
                                       std::uint64_t seed,
                                       const SimOptions& opts = {});

// Physical pipeline: solves the second-order ODE for x, sets
// Y_t = \int_0^t x ds + V^H_t and fills z by transform_Y_to_Z.
ObservationRecord simulate_Y_physical(const SystemParams& params,
                                      const ControlSpec& u_spec,
                                      const TimeGrid& grid,
                                      std::uint64_t seed,
                                      const SimOptions& opts = {});

// Z_t = \int_0^t k_H(t,s) dY_s by product integration of the singular
// kernel against the Y increments; the identity at H = 1/2.
ObservationRecord transform_Y_to_Z(const ObservationRecord& y_record,
                                   const HurstConstants& c);

} // namespace fracdoe

#endif
