#include "vgsec/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vgsec/errors.hpp"

namespace vgsec {

void SimConfig::validate(std::size_t n) const {
  params.validate_rates();
  if (!std::isfinite(horizon) || !(horizon > 0.0)) throw InputError("horizon must be finite and > 0");
  if (!(burn_in >= 0.0 && burn_in < horizon)) throw InputError("burn-in must lie in [0, horizon)");
  if (!std::isfinite(sample_interval) || !(sample_interval > 0.0))
    throw InputError("sample interval must be finite and > 0");
  for (NodeId v : initial_compromised)
    if (v >= n) throw InputError("initial compromised node " + std::to_string(v) + " out of range");
}

double Trajectory::steady_mean_ct() const {
  const double total = std::accumulate(node_occupancy.begin(), node_occupancy.end(), 0.0);
  return total / (horizon - burn_in);
}

namespace {

// Binary min-heap over node ids with a position index, so a node's pending
// time can be replaced in place. Ties are broken by the smaller node id.
class EventHeap {
public:
  explicit EventHeap(std::size_t n)
      : times_(n, std::numeric_limits<double>::infinity()), heap_(n), pos_(n) {
    std::iota(heap_.begin(), heap_.end(), NodeId{0});
    std::iota(pos_.begin(), pos_.end(), std::size_t{0});
  }

  NodeId top() const { return heap_.front(); }
  double top_time() const { return times_[heap_.front()]; }

  void set(NodeId v, double t) {
    const double old = times_[v];
    times_[v] = t;
    if (t < old)
      sift_up(pos_[v]);
    else
      sift_down(pos_[v]);
  }

private:
  bool before(NodeId a, NodeId b) const {
    return times_[a] < times_[b] || (times_[a] == times_[b] && a < b);
  }

  void place(std::size_t i, NodeId v) {
    heap_[i] = v;
    pos_[v] = i;
  }

  void sift_up(std::size_t i) {
    const NodeId v = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!before(v, heap_[parent])) break;
      place(i, heap_[parent]);
      i = parent;
    }
    place(i, v);
  }

  void sift_down(std::size_t i) {
    const NodeId v = heap_[i];
    const std::size_t n = heap_.size();
    while (true) {
      std::size_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], v)) break;
      place(i, heap_[child]);
      i = child;
    }
    place(i, v);
  }

  std::vector<double> times_;
  std::vector<NodeId> heap_;
  std::vector<std::size_t> pos_;
};

} // namespace

Trajectory simulate(const VulnerabilityGraph& graph, const SimConfig& config) {
  const std::size_t n = graph.node_count();
  config.validate(n);
  const Parameters& p = config.params;
  const double horizon = config.horizon;
  const double burn_in = config.burn_in;

  Trajectory traj;
  traj.node_count = n;
  traj.horizon = horizon;
  traj.burn_in = burn_in;
  traj.sample_interval = config.sample_interval;
  traj.initial_compromised = config.initial_compromised;
  std::sort(traj.initial_compromised.begin(), traj.initial_compromised.end());
  traj.initial_compromised.erase(
      std::unique(traj.initial_compromised.begin(), traj.initial_compromised.end()),
      traj.initial_compromised.end());
  traj.node_occupancy.assign(n, 0.0);

  std::vector<NodeState> state(n, NodeState::Secure);
  std::vector<std::uint32_t> infected_neighbors(n, 0);
  std::vector<double> since(n, 0.0);
  std::uint32_t compromised = 0;
  for (NodeId v : traj.initial_compromised) {
    state[v] = NodeState::Compromised;
    ++compromised;
    for (NodeId u : graph.neighbors(v)) ++infected_neighbors[u];
  }

  auto accrue = [&](NodeId v, double from, double to) {
    const double lo = std::max(from, burn_in);
    const double hi = std::min(to, horizon);
    if (hi > lo) traj.node_occupancy[v] += hi - lo;
  };

  Rng rng(config.seed);
  EventHeap heap(n);
  auto schedule = [&](NodeId v, double now) {
    const double rate = state[v] == NodeState::Secure
                            ? p.alpha + p.gamma * static_cast<double>(infected_neighbors[v])
                            : p.recovery_rate();
    heap.set(v, now + rng.exponential(rate));
  };
  for (std::size_t v = 0; v < n; ++v) schedule(static_cast<NodeId>(v), 0.0);

  const auto sample_count = static_cast<std::size_t>(std::floor(horizon / config.sample_interval + 1e-9)) + 1;
  traj.ct_samples.reserve(sample_count);
  const bool neighbors_matter = p.gamma != 0.0;

  while (true) {
    const double t = heap.top_time();
    if (!(t <= horizon)) break;
    const NodeId v = heap.top();
    while (traj.ct_samples.size() < sample_count && traj.sample_time(traj.ct_samples.size()) < t)
      traj.ct_samples.push_back(compromised);

    const bool becomes_compromised = state[v] == NodeState::Secure;
    if (becomes_compromised) {
      state[v] = NodeState::Compromised;
      since[v] = t;
      ++compromised;
    } else {
      state[v] = NodeState::Secure;
      accrue(v, since[v], t);
      --compromised;
    }
    ++traj.event_count;
    if (config.record_events) traj.events.push_back({t, v, state[v]});

    schedule(v, t);
    for (NodeId u : graph.neighbors(v)) {
      if (becomes_compromised)
        ++infected_neighbors[u];
      else
        --infected_neighbors[u];
      if (neighbors_matter && state[u] == NodeState::Secure) schedule(u, t);
    }
  }
  while (traj.ct_samples.size() < sample_count) traj.ct_samples.push_back(compromised);
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == NodeState::Compromised) accrue(static_cast<NodeId>(v), since[v], horizon);
  return traj;
}

} // namespace vgsec
