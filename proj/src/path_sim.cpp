#include "fracdoe/path_sim.hpp"

#include <fftw3.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "fracdoe/rng.hpp"

namespace fracdoe {

namespace {

std::mutex fftw_mutex; // FFTW planning is not thread-safe

// fGn autocovariance over unit lag grid, scaled by dt^{2H}.
double fgn_gamma(int j, double hurst, double dt) {
  const double a = std::abs(static_cast<double>(j));
  const double v = 0.5 * (std::pow(a + 1.0, 2.0 * hurst) +
                          std::pow(std::abs(a - 1.0), 2.0 * hurst) -
                          2.0 * std::pow(a, 2.0 * hurst));
  return v * std::pow(dt, 2.0 * hurst);
}

// Davies-Harte: exact stationary Gaussian increments via the circulant
// embedding of the covariance. Falls back to dense Cholesky when the
// embedding is indefinite (not observed for fGn, but guarded).
std::vector<double> fgn_circulant(int m, double hurst, double dt,
                                  SplitMix64& rng) {
  const int M = 2 * m;
  std::vector<std::complex<double>> buf(M);
  for (int j = 0; j <= m; ++j) buf[j] = fgn_gamma(j, hurst, dt);
  for (int j = m + 1; j < M; ++j) buf[j] = buf[M - j];

  {
    std::vector<std::complex<double>> eig(M);
    std::scoped_lock lock(fftw_mutex);
    fftw_plan plan = fftw_plan_dft_1d(
        M, reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(eig.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    buf = std::move(eig);
  }

  double min_eig = 0.0, max_eig = 0.0;
  for (auto& e : buf) {
    min_eig = std::min(min_eig, e.real());
    max_eig = std::max(max_eig, e.real());
  }
  if (min_eig < -1e-9 * max_eig) return {}; // indefinite: caller falls back

  std::vector<std::complex<double>> spec(M);
  const double inv_m = 1.0 / static_cast<double>(M);
  spec[0] = std::sqrt(std::max(0.0, buf[0].real()) * inv_m) * rng.next_gaussian();
  spec[m] = std::sqrt(std::max(0.0, buf[m].real()) * inv_m) * rng.next_gaussian();
  for (int k = 1; k < m; ++k) {
    const double sd = std::sqrt(std::max(0.0, buf[k].real()) * inv_m * 0.5);
    const double re = sd * rng.next_gaussian();
    const double im = sd * rng.next_gaussian();
    spec[k] = {re, im};
    spec[M - k] = {re, -im};
  }

  std::vector<std::complex<double>> path(M);
  {
    std::scoped_lock lock(fftw_mutex);
    fftw_plan plan = fftw_plan_dft_1d(
        M, reinterpret_cast<fftw_complex*>(spec.data()),
        reinterpret_cast<fftw_complex*>(path.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }

  std::vector<double> incr(m);
  for (int j = 0; j < m; ++j) incr[j] = path[j].real();
  return incr;
}

std::vector<double> fgn_cholesky(int m, double hurst, double dt,
                                 SplitMix64& rng) {
  if (m > 2048)
    throw std::runtime_error(
        "fbm: circulant embedding indefinite and grid too large for the "
        "Cholesky fallback (n <= 2048)");
  Eigen::MatrixXd C(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = fgn_gamma(i - j, hurst, dt);
      C(i, j) = v;
      C(j, i) = v;
    }
  Eigen::LLT<Eigen::MatrixXd> llt(C);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("fbm: increment covariance not positive definite");
  Eigen::VectorXd g(m);
  for (int i = 0; i < m; ++i) g[i] = rng.next_gaussian();
  Eigen::VectorXd x = llt.matrixL() * g;
  return std::vector<double>(x.data(), x.data() + m);
}

void require_uniform_physical(const TimeGrid& grid, const char* who) {
  validate_grid(grid);
  const auto& p = grid.points;
  const double dt = p[1] - p[0];
  for (std::size_t i = 1; i < p.size(); ++i)
    if (std::abs((p[i] - p[i - 1]) - dt) > 1e-9 * dt)
      throw std::invalid_argument(std::string(who) +
                                  " requires a uniform physical grid");
}

} // namespace

FbmPath simulate_fbm(double hurst, const TimeGrid& grid, std::uint64_t seed) {
  if (!(hurst >= 0.5 && hurst < 1.0))
    throw std::domain_error("simulate_fbm: hurst must lie in [0.5, 1)");
  require_uniform_physical(grid, "simulate_fbm");
  if (grid.points.front() != 0.0)
    throw std::invalid_argument("simulate_fbm: grid must start at 0");
  const int m = static_cast<int>(grid.size()) - 1;
  const double dt = grid.points[1] - grid.points[0];

  SplitMix64 rng(seed);
  std::vector<double> incr = fgn_circulant(m, hurst, dt, rng);
  if (incr.empty()) {
    SplitMix64 rng2(seed);
    incr = fgn_cholesky(m, hurst, dt, rng2);
  }

  FbmPath out;
  out.grid = grid;
  out.hurst = hurst;
  out.seed = seed;
  out.values.resize(grid.size());
  out.values[0] = 0.0;
  for (int i = 0; i < m; ++i) out.values[i + 1] = out.values[i] + incr[i];
  return out;
}

std::vector<double> simulate_martingale_increments(const HurstConstants& c,
                                                   const TimeGrid& grid,
                                                   std::uint64_t seed) {
  validate_grid(grid);
  SplitMix64 rng(seed);
  std::vector<double> incr(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double dw = eval_wH(grid.points[i + 1], c) - eval_wH(grid.points[i], c);
    incr[i] = std::sqrt(dw) * rng.next_gaussian();
  }
  return incr;
}

namespace {

ObservationRecord simulate_observation_core(const SystemParams& params,
                                            const ControlFunction& vf,
                                            const ControlSpec& provenance,
                                            const TimeGrid& grid,
                                            std::uint64_t seed,
                                            const SimOptions& opts) {
  validate_grid(grid);
  StateTrajectory traj = solve_zeta(params, vf, grid, false, opts.solver);

  const auto& c = params.constants;
  ObservationRecord rec;
  rec.grid = grid;
  rec.params = params;
  rec.seed = seed;
  rec.control = provenance;

  const std::size_t n = grid.size();
  rec.z.resize(n);
  rec.z[0] = 0.0;
  std::vector<double> dN;
  if (opts.with_noise) dN = simulate_martingale_increments(c, grid, seed);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double m_left =
        c.lambda * ell_vector(grid.points[i], params).dot(traj.zeta[i]);
    const double dtheta =
        eval_wH(grid.points[i + 1], c) - eval_wH(grid.points[i], c);
    rec.z[i + 1] = rec.z[i] + m_left * dtheta + (opts.with_noise ? dN[i] : 0.0);
  }
  return rec;
}

} // namespace

ObservationRecord simulate_observation(const SystemParams& params,
                                       const ControlSpec& v_spec,
                                       const TimeGrid& grid,
                                       std::uint64_t seed,
                                       const SimOptions& opts) {
  return simulate_observation_core(params,
                                   control_function(v_spec, params.constants),
                                   v_spec, grid, seed, opts);
}

ObservationRecord simulate_observation(const SystemParams& params,
                                       const SampledControl& v,
                                       const TimeGrid& grid,
                                       std::uint64_t seed,
                                       const SimOptions& opts) {
  if (v.clock != ControlClock::v_domain)
    throw std::invalid_argument("simulate_observation expects a v-domain control");
  ControlSpec provenance;
  provenance.family = ControlFamily::custom_samples;
  provenance.hurst = params.hurst;
  return simulate_observation_core(params, control_function(v), provenance,
                                   grid, seed, opts);
}

ObservationRecord simulate_Y_physical(const SystemParams& params,
                                      const ControlSpec& u_spec,
                                      const TimeGrid& grid,
                                      std::uint64_t seed,
                                      const SimOptions& opts) {
  require_uniform_physical(grid, "simulate_Y_physical");
  const ControlFunction uf = control_function_u(u_spec, params.constants);
  PhysicalTrajectory traj = solve_physical_x(params, uf, grid, false, opts.solver);

  ObservationRecord rec;
  rec.grid = grid;
  rec.params = params;
  rec.seed = seed;
  rec.control = u_spec;

  std::vector<double> noise(grid.size(), 0.0);
  if (opts.with_noise) {
    FbmPath vh = simulate_fbm(params.hurst, grid, seed);
    noise = vh.values;
  }
  rec.y.emplace(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    (*rec.y)[i] = traj.x_integral[i] + noise[i];

  ObservationRecord z = transform_Y_to_Z(rec, params.constants);
  rec.z = std::move(z.z);
  return rec;
}

ObservationRecord transform_Y_to_Z(const ObservationRecord& y_record,
                                   const HurstConstants& c) {
  if (!y_record.y)
    throw std::invalid_argument("transform_Y_to_Z: record carries no y values");
  validate_grid(y_record.grid);
  const auto& ts = y_record.grid.points;
  const std::size_t n = ts.size();
  if (n < 8)
    throw std::invalid_argument("transform_Y_to_Z: grid too coarse near 0");

  ObservationRecord out = y_record;
  out.z.assign(n, 0.0);
  if (c.hurst == 0.5) { // kernel is identically 1
    for (std::size_t i = 0; i < n; ++i)
      out.z[i] = (*y_record.y)[i] - (*y_record.y)[0];
    return out;
  }

  const double e = 0.5 - c.hurst;
  const auto& y = *y_record.y;
  // Z(t_i) = sum_j (dY_j / ds_j) \int_{cell j} k_H(t_i, s) ds with the end
  // cells integrated through the power substitutions that absorb the
  // singular factors.
  constexpr int kG = 6;
  constexpr double gx[kG] = {-0.9324695142031521, -0.6612093864662645,
                             -0.2386191860831969, 0.2386191860831969,
                             0.6612093864662645,  0.9324695142031521};
  constexpr double gw[kG] = {0.1713244923791704, 0.3607615730481386,
                             0.4679139345726910, 0.4679139345726910,
                             0.3607615730481386, 0.1713244923791704};
  for (std::size_t i = 1; i < n; ++i) {
    const double t = ts[i];
    double z = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      const double s0 = ts[j], s1 = ts[j + 1];
      double cell = 0.0;
      if (j == 0 && s0 == 0.0) {
        // s^e singular: s = s1 x^{1/(1+e)}
        const double p = 1.0 / (1.0 + e);
        for (int q = 0; q < kG; ++q) {
          const double x = 0.5 * (gx[q] + 1.0);
          const double s = s1 * std::pow(x, p);
          cell += 0.5 * gw[q] * std::pow(t - s, e);
        }
        cell *= std::pow(s1, 1.0 + e) / (1.0 + e);
      } else if (j + 1 == i) {
        // (t-s)^e singular: t - s = d x^{1/(1+e)}
        const double d = t - s0;
        const double p = 1.0 / (1.0 + e);
        for (int q = 0; q < kG; ++q) {
          const double x = 0.5 * (gx[q] + 1.0);
          const double s = t - d * std::pow(x, p);
          cell += 0.5 * gw[q] * std::pow(s, e);
        }
        cell *= std::pow(d, 1.0 + e) / (1.0 + e);
      } else {
        const double c0 = 0.5 * (s0 + s1), c1 = 0.5 * (s1 - s0);
        for (int q = 0; q < kG; ++q) {
          const double s = c0 + c1 * gx[q];
          cell += gw[q] * std::pow(s, e) * std::pow(t - s, e);
        }
        cell *= c1;
      }
      z += cell / (s1 - s0) * (y[j + 1] - y[j]);
    }
    out.z[i] = z / c.kappa;
  }
  return out;
}

} // namespace fracdoe
