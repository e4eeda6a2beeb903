#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vgsec/simulator.hpp"

namespace vgsec {

struct EnsembleOptions {
  std::size_t runs = 100;
  Seed base_seed = 0;
  double window = 20.0;
  std::size_t n_windows = 15; ///< 0 disables window statistics
  std::size_t threads = 0;    ///< 0: hardware concurrency
};

struct RunSummary {
  Seed seed = 0;
  std::size_t event_count = 0;
  double steady_mean_ct = 0.0;
  std::vector<std::uint32_t> ct_samples;
};

/// Aggregate over independent runs. All reductions happen in run-index
/// order, so results do not depend on the thread count.
struct EnsembleResult {
  std::size_t node_count = 0;
  std::vector<double> sample_times;
  std::vector<double> mean_ct;           ///< mean C_t curve
  std::vector<RunSummary> runs;

  std::vector<double> q_i_mean;          ///< per node, from occupancy over [burn_in, horizon]
  std::vector<double> q_i_run_stddev;    ///< per node, across runs
  double q_bar = 0.0;

  double steady_mean_ct = 0.0;           ///< mean over runs of the time-averaged C_t
  double steady_mean_ct_se = 0.0;        ///< standard error of that mean

  std::size_t n_windows = 0;
  std::vector<double> window_mean;       ///< node-major, run-averaged window fractions
  std::vector<double> q_i_window_stddev; ///< per node, across the run-averaged windows
};

/// Seed of run `index` under `base_seed`.
Seed run_seed(Seed base_seed, std::size_t index);

EnsembleResult run_ensemble(const VulnerabilityGraph& graph, const SimConfig& config,
                            const EnsembleOptions& options);

} // namespace vgsec
