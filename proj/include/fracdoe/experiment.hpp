#ifndef FRACDOE_EXPERIMENT_HPP
#define FRACDOE_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fracdoe/estimators.hpp"

namespace fracdoe {

struct ExperimentConfig {
  double theta = 1.0;
  double damping = 1.0;
  double hurst = 0.5;
  double horizon = 100.0;   // T
  std::size_t steps = 8192; // weight-clock grid size
  int replications = 200;
  std::uint64_t base_seed = 1;
  EstimatorMethod method = EstimatorMethod::mle;
  double tau_epsilon = 0.05; // tau = T^{-epsilon}, two-stage only
  std::pair<double, double> bracket{0.2, 5.0};
  std::string output_path = "experiment";
  bool with_noise = true;
  double solver_steps_per_theta = 0.0; // 0: use the grid resolution as-is

  SystemParams params() const { return make_params(theta, damping, hurst); }
};

void validate_config(const ExperimentConfig& cfg);

// Flat "key = value" sections, canonical ordering; hash of the canonical
// serialization goes into report provenance.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);
std::uint64_t config_hash(const ExperimentConfig& cfg); // FNV-1a 64

struct ReplicationRow {
  int replication = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double standardized_error = 0.0;
  double remainder = 0.0; // NaN when not applicable
  double wall_ms = 0.0;
  bool ok = false;
};

struct MonteCarloSummary {
  int n = 0; // successful replications
  int failures = 0;
  double mean_bias = 0.0;
  double var_standardized = 0.0;
  double normality_p = 0.0;
  double fisher_rate = 0.0;
  double wall_time_s = 0.0;
};

// Designs the input for the configured regime, runs replications across a
// worker pool (FRACDOE_WORKERS caps it), writes <output>.csv and
// <output>.json, and aggregates deterministically by replication index.
// Throws when more than 10% of replications fail.
MonteCarloSummary run_experiment(const ExperimentConfig& cfg);

MonteCarloSummary summarize(std::span<const ReplicationRow> rows,
                            double true_theta, double fisher_rate);

std::string csv_header();
std::string csv_row(const ReplicationRow& row);

unsigned worker_count();

} // namespace fracdoe

#endif
