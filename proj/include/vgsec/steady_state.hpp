#pragma once

#include <cstddef>
#include <vector>

#include "vgsec/simulator.hpp"

namespace vgsec {

/// Per-node compromised-time fractions measured over consecutive windows
/// [burn_in + i w, burn_in + (i + 1) w), i < n_windows.
struct SteadyStateEstimate {
  std::size_t node_count = 0;
  std::size_t n_windows = 0;
  double window = 0.0;
  std::vector<double> interval_samples; ///< node-major: [v * n_windows + i]
  std::vector<double> q_i;              ///< mean over windows
  std::vector<double> q_i_stddev;       ///< sample std dev over windows
  double q_bar = 0.0;

  double sample(std::size_t node, std::size_t window_index) const {
    return interval_samples[node * n_windows + window_index];
  }
};

/// Requires a trajectory with recorded events and
/// burn_in + window * n_windows <= horizon.
SteadyStateEstimate estimate_steady_state(const Trajectory& trajectory, double window,
                                          std::size_t n_windows);

/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_stddev(const double* values, std::size_t count, std::size_t stride = 1);

} // namespace vgsec
