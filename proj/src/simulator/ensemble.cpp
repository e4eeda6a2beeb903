#include "vgsec/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "vgsec/errors.hpp"
#include "vgsec/steady_state.hpp"

namespace vgsec {

Seed run_seed(Seed base_seed, std::size_t index) { return derive_seed(base_seed, index); }

namespace {

struct RunData {
  RunSummary summary;
  std::vector<double> occupancy_fraction;
  std::vector<double> window_samples;
};

RunData execute_run(const VulnerabilityGraph& graph, SimConfig config, const EnsembleOptions& options,
                    std::size_t index) {
  config.seed = run_seed(options.base_seed, index);
  config.record_events = options.n_windows > 0;
  Trajectory traj = simulate(graph, config);

  RunData out;
  out.summary.seed = config.seed;
  out.summary.event_count = traj.event_count;
  out.summary.steady_mean_ct = traj.steady_mean_ct();
  const double span = traj.horizon - traj.burn_in;
  out.occupancy_fraction.resize(traj.node_count);
  for (std::size_t v = 0; v < traj.node_count; ++v) out.occupancy_fraction[v] = traj.node_occupancy[v] / span;
  if (options.n_windows > 0)
    out.window_samples = estimate_steady_state(traj, options.window, options.n_windows).interval_samples;
  out.summary.ct_samples = std::move(traj.ct_samples);
  return out;
}

} // namespace

EnsembleResult run_ensemble(const VulnerabilityGraph& graph, const SimConfig& config,
                            const EnsembleOptions& options) {
  if (options.runs == 0) throw InputError("ensemble needs at least one run");
  const std::size_t n = graph.node_count();
  config.validate(n);
  if (options.n_windows > 0 &&
      config.burn_in + options.window * static_cast<double>(options.n_windows) > config.horizon * (1.0 + 1e-12))
    throw InputError("horizon too short for the requested measurement windows");

  std::vector<RunData> data(options.runs);
  std::size_t threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, options.runs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < options.runs;) {
      try {
        data[i] = execute_run(graph, config, options, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const double runs = static_cast<double>(options.runs);
  EnsembleResult out;
  out.node_count = n;
  const std::size_t samples = data.front().summary.ct_samples.size();
  out.sample_times.resize(samples);
  for (std::size_t k = 0; k < samples; ++k) out.sample_times[k] = static_cast<double>(k) * config.sample_interval;

  out.mean_ct.assign(samples, 0.0);
  out.q_i_mean.assign(n, 0.0);
  std::vector<double> steady(options.runs);
  for (std::size_t r = 0; r < options.runs; ++r) {
    const auto& d = data[r];
    for (std::size_t k = 0; k < samples; ++k) out.mean_ct[k] += d.summary.ct_samples[k];
    for (std::size_t v = 0; v < n; ++v) out.q_i_mean[v] += d.occupancy_fraction[v];
    steady[r] = d.summary.steady_mean_ct;
  }
  for (double& x : out.mean_ct) x /= runs;
  for (double& x : out.q_i_mean) x /= runs;

  out.q_i_run_stddev.assign(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    double ss = 0.0;
    for (const auto& d : data) {
      const double dv = d.occupancy_fraction[v] - out.q_i_mean[v];
      ss += dv * dv;
    }
    out.q_i_run_stddev[v] = options.runs > 1 ? std::sqrt(ss / (runs - 1.0)) : 0.0;
  }
  double total = 0.0;
  for (double x : out.q_i_mean) total += x;
  out.q_bar = total / static_cast<double>(n);

  for (double s : steady) out.steady_mean_ct += s;
  out.steady_mean_ct /= runs;
  out.steady_mean_ct_se = sample_stddev(steady.data(), steady.size()) / std::sqrt(runs);

  if (options.n_windows > 0) {
    out.n_windows = options.n_windows;
    out.window_mean.assign(n * options.n_windows, 0.0);
    for (const auto& d : data)
      for (std::size_t i = 0; i < out.window_mean.size(); ++i) out.window_mean[i] += d.window_samples[i];
    for (double& x : out.window_mean) x /= runs;
    out.q_i_window_stddev.resize(n);
    for (std::size_t v = 0; v < n; ++v)
      out.q_i_window_stddev[v] = sample_stddev(out.window_mean.data() + v * options.n_windows, options.n_windows);
  }

  out.runs.reserve(options.runs);
  for (auto& d : data) out.runs.push_back(std::move(d.summary));
  return out;
}

} // namespace vgsec
