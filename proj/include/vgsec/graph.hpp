#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vgsec {

using NodeId = std::uint32_t;

/// Undirected simple graph over node ids [0, n).
///
/// Edges are stored normalized (u < v) and sorted; adjacency is a CSR view
/// with sorted neighbor lists. Values are immutable after construction.
class VulnerabilityGraph {
public:
  using Edge = std::pair<NodeId, NodeId>;

  VulnerabilityGraph() = default;

  /// Throws InputError on n == 0, out-of-range ids, self-loops or duplicate edges.
  VulnerabilityGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::vector<std::size_t> degrees() const;
  double mean_degree() const noexcept;
  bool has_edge(NodeId u, NodeId v) const noexcept;

  friend bool operator==(const VulnerabilityGraph& a, const VulnerabilityGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

} // namespace vgsec
