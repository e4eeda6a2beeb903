#pragma once

#include <cstddef>
#include <vector>

#include "vgsec/graph.hpp"
#include "vgsec/parameters.hpp"

namespace vgsec {

inline constexpr std::size_t kMaxExactNodes = 12;

/// Stationary law of the full 2^n-state chain. State bit v set means node v
/// is compromised.
struct StationaryDistribution {
  std::vector<double> pi;
  std::vector<double> marginals; ///< Pr[node v compromised]
};

/// Builds the generator and solves pi Q = 0, sum(pi) = 1.
/// Throws InputError for n > kMaxExactNodes and DomainError when every state
/// is absorbing (alpha = beta + eta = 0).
StationaryDistribution exact_stationary(const VulnerabilityGraph& graph, const Parameters& params);

} // namespace vgsec
