#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vgsec/graph.hpp"
#include "vgsec/rng.hpp"

namespace vgsec {

inline constexpr std::size_t kPairingAttempts = 100;

/// What a generator did on the way to its graph.
struct ConstructionReport {
  std::size_t attempts = 0;
  /// Degree sequence handed to the pairing step (empty for random graphs).
  std::vector<std::size_t> target_degrees;
  /// Node whose sampled degree was bumped by one to make the stub sum even.
  std::optional<NodeId> parity_adjusted;
  /// Stubs discarded because no simple partner could be found.
  std::size_t dropped_stubs = 0;
};

struct GeneratedGraph {
  VulnerabilityGraph graph;
  ConstructionReport report;
};

/// Random g-regular graph via stub pairing with rejection.
/// Throws ConstructionError when g > n - 1, n*g is odd, or pairing keeps failing.
GeneratedGraph generate_regular(std::size_t n, std::size_t degree, Seed seed);

/// G(n, r): each unordered pair independently with probability r.
GeneratedGraph generate_random(std::size_t n, double edge_prob, Seed seed);

/// I.i.d. degrees from the truncated power-law pmf, wired by stub pairing.
/// Stubs with no simple partner are dropped and counted in the report; an
/// attempt that drops more than 5% of stubs is retried.
GeneratedGraph generate_power_law(std::size_t n, std::size_t min_degree, double exponent, Seed seed);

/// Maximum-likelihood exponent for pmf(d) proportional to d^-(nu+1) on
/// [min_degree, max_degree], fitted to the degrees >= min_degree.
double fit_power_law_exponent(const std::vector<std::size_t>& degrees, std::size_t min_degree,
                              std::size_t max_degree);

} // namespace vgsec
