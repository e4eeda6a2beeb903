#include "vgsec/exact_ctmc.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "vgsec/errors.hpp"

namespace vgsec {

StationaryDistribution exact_stationary(const VulnerabilityGraph& graph, const Parameters& params) {
  const std::size_t n = graph.node_count();
  if (n > kMaxExactNodes)
    throw InputError("exact stationary solve supports at most " + std::to_string(kMaxExactNodes) +
                     " nodes, got " + std::to_string(n));
  params.validate_rates();
  const double recover = params.recovery_rate();
  const std::size_t states = std::size_t{1} << n;

  StationaryDistribution out;
  out.pi.assign(states, 0.0);
  out.marginals.assign(n, 0.0);

  if (recover == 0.0) {
    if (params.alpha == 0.0)
      throw DomainError("with alpha = beta + eta = 0 every state is absorbing");
    out.pi.back() = 1.0;
    out.marginals.assign(n, 1.0);
    return out;
  }

  std::vector<std::uint32_t> neighbor_mask(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (NodeId u : graph.neighbors(static_cast<NodeId>(v))) neighbor_mask[v] |= 1u << u;

  // Solve Q^T pi = 0 with the first balance equation replaced by sum(pi) = 1.
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(states * (n + 2));
  for (std::size_t col = 0; col < states; ++col) entries.emplace_back(0, static_cast<int>(col), 1.0);
  for (std::uint32_t s = 0; s < states; ++s) {
    double outflow = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t bit = 1u << v;
      double rate;
      std::uint32_t target;
      if (s & bit) {
        rate = recover;
        target = s & ~bit;
      } else {
        rate = params.alpha + params.gamma * std::popcount(s & neighbor_mask[v]);
        target = s | bit;
      }
      if (rate == 0.0) continue;
      outflow += rate;
      if (target != 0) entries.emplace_back(static_cast<int>(target), static_cast<int>(s), rate);
    }
    if (s != 0 && outflow != 0.0) entries.emplace_back(static_cast<int>(s), static_cast<int>(s), -outflow);
  }
  Eigen::SparseMatrix<double> a(static_cast<int>(states), static_cast<int>(states));
  a.setFromTriplets(entries.begin(), entries.end());
  a.makeCompressed();

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<int>(states));
  rhs[0] = 1.0;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(a);
  if (solver.info() != Eigen::Success) throw DomainError("generator system is singular");
  const Eigen::VectorXd pi = solver.solve(rhs);
  if (solver.info() != Eigen::Success) throw DomainError("stationary solve failed");

  double total = 0.0;
  for (std::size_t s = 0; s < states; ++s) {
    out.pi[s] = std::max(0.0, pi[static_cast<int>(s)]);
    total += out.pi[s];
  }
  for (std::size_t s = 0; s < states; ++s) {
    out.pi[s] /= total;
    for (std::size_t v = 0; v < n; ++v)
      if (s & (std::size_t{1} << v)) out.marginals[v] += out.pi[s];
  }
  return out;
}

} // namespace vgsec
