#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace radial {

using NodeId = std::int32_t;

/// Immutable undirected simple graph in compressed sparse row form.
/// Neighbor lists are sorted ascending, so every traversal is deterministic.
class CsrGraph {
 public:
  CsrGraph() = default;

  /// Builds from an undirected edge list. Self-loops, duplicate edges and
  /// out-of-range endpoints are rejected with radial::Error.
  static CsrGraph from_edges(std::size_t node_count,
                             std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId node) const {
    const auto begin = offsets_[static_cast<std::size_t>(node)];
    const auto end = offsets_[static_cast<std::size_t>(node) + 1];
    return {targets_.data() + begin, end - begin};
  }

  std::size_t degree(NodeId node) const { return neighbors(node).size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

/// Hierarchical neighborhoods of `source`: element h holds the nodes at
/// shortest-path distance exactly h, for h = 0..h_max. Each ring is sorted.
std::vector<std::vector<NodeId>> bfs_rings(const CsrGraph& graph, NodeId source, int h_max);

}  // namespace radial
