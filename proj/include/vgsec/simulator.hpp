#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vgsec/graph.hpp"
#include "vgsec/parameters.hpp"
#include "vgsec/rng.hpp"

namespace vgsec {

enum class NodeState : std::uint8_t { Secure = 0, Compromised = 1 };

struct SimConfig {
  Parameters params;            ///< alpha may be 0 here
  double horizon = 330.0;       ///< simulated time span [0, horizon]
  double sample_interval = 1.0; ///< C_t is sampled at multiples of this
  double burn_in = 30.0;        ///< occupancy is accounted over [burn_in, horizon]
  Seed seed = 0;
  std::vector<NodeId> initial_compromised; ///< empty: every node starts secure
  bool record_events = true;

  /// Throws InputError on invalid rates, times or initial ids.
  void validate(std::size_t n) const;
};

struct StateChange {
  double time;
  NodeId node;
  NodeState state;

  friend bool operator==(const StateChange&, const StateChange&) = default;
};

struct Trajectory {
  std::size_t node_count = 0;
  double horizon = 0.0;
  double burn_in = 0.0;
  double sample_interval = 1.0;
  std::vector<NodeId> initial_compromised; ///< sorted, unique
  std::vector<StateChange> events;         ///< empty unless recorded
  std::size_t event_count = 0;
  std::vector<std::uint32_t> ct_samples;   ///< C_t at t = k * sample_interval
  std::vector<double> node_occupancy;      ///< compromised time within [burn_in, horizon]

  /// Time-average of C_t over [burn_in, horizon].
  double steady_mean_ct() const;
  double sample_time(std::size_t k) const { return static_cast<double>(k) * sample_interval; }
};

/// One sample path of the continuous-time dynamics on `graph`.
///
/// Every node holds one pending transition in an indexed min-heap keyed by
/// (time, node id). A secure node fires at rate alpha + gamma * k, with k its
/// compromised neighbors; a compromised node fires at rate beta + eta. When k
/// changes the secure node's pending time is redrawn from the new rate, which
/// is exact because exponential clocks are memoryless.
Trajectory simulate(const VulnerabilityGraph& graph, const SimConfig& config);

} // namespace vgsec
