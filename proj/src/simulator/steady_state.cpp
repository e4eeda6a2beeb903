#include "vgsec/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vgsec/errors.hpp"

namespace vgsec {

double sample_stddev(const double* values, std::size_t count, std::size_t stride) {
  if (count < 2) return 0.0;
  double mean = 0.0;
  for (std::size_t i = 0; i < count; ++i) mean += values[i * stride];
  mean /= static_cast<double>(count);
  double ss = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double d = values[i * stride] - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(count - 1));
}

SteadyStateEstimate estimate_steady_state(const Trajectory& trajectory, double window,
                                          std::size_t n_windows) {
  if (!(window > 0.0) || n_windows == 0) throw InputError("need a positive window and n_windows >= 1");
  const double start = trajectory.burn_in;
  const double end = start + window * static_cast<double>(n_windows);
  if (end > trajectory.horizon * (1.0 + 1e-12))
    throw InputError("horizon " + std::to_string(trajectory.horizon) + " is shorter than burn-in + " +
                     std::to_string(n_windows) + " windows of " + std::to_string(window));
  if (trajectory.events.size() != trajectory.event_count)
    throw InputError("steady-state estimation needs a trajectory with recorded events");

  const std::size_t n = trajectory.node_count;
  SteadyStateEstimate est;
  est.node_count = n;
  est.n_windows = n_windows;
  est.window = window;
  est.interval_samples.assign(n * n_windows, 0.0);

  auto accrue = [&](NodeId v, double from, double to) {
    from = std::max(from, start);
    to = std::min(to, end);
    if (!(to > from)) return;
    auto first = static_cast<std::size_t>((from - start) / window);
    for (std::size_t i = std::min(first, n_windows - 1); i < n_windows; ++i) {
      const double w_lo = start + window * static_cast<double>(i);
      const double w_hi = w_lo + window;
      if (w_lo >= to) break;
      const double overlap = std::min(to, w_hi) - std::max(from, w_lo);
      if (overlap > 0.0) est.interval_samples[v * n_windows + i] += overlap;
    }
  };

  std::vector<double> since(n, -1.0);
  for (NodeId v : trajectory.initial_compromised) since[v] = 0.0;
  for (const auto& e : trajectory.events) {
    if (e.state == NodeState::Compromised) {
      since[e.node] = e.time;
    } else {
      accrue(e.node, since[e.node], e.time);
      since[e.node] = -1.0;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (since[v] >= 0.0) accrue(static_cast<NodeId>(v), since[v], trajectory.horizon);

  for (double& x : est.interval_samples) x /= window;
  est.q_i.resize(n);
  est.q_i_stddev.resize(n);
  double total = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const double* row = est.interval_samples.data() + v * n_windows;
    double s = 0.0;
    for (std::size_t i = 0; i < n_windows; ++i) s += row[i];
    est.q_i[v] = s / static_cast<double>(n_windows);
    est.q_i_stddev[v] = sample_stddev(row, n_windows);
    total += est.q_i[v];
  }
  est.q_bar = total / static_cast<double>(n);
  return est;
}

} // namespace vgsec
