#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "radial/csr_graph.hpp"

namespace radial {

/// Integer lattice site; x runs along the reference axis, y across it.
struct Site {
  int x = 0;
  int y = 0;

  auto operator<=>(const Site&) const = default;
};

enum class Orientation { kParallel, kNormal };

std::string_view to_string(Orientation orientation);

/// Parallel when the sites differ by one column, Normal when they differ by
/// one row. Any other pair is not a lattice edge and throws kInvalidEdge.
Orientation edge_orientation(Site a, Site b);

/// Lattice edge with endpoints stored in lexicographic order (a < b).
struct Edge {
  Site a;
  Site b;

  static Edge canonical(Site p, Site q) { return p < q ? Edge{p, q} : Edge{q, p}; }
  Orientation orientation() const { return edge_orientation(a, b); }

  auto operator<=>(const Edge&) const = default;
};

/// Which rows of the rectangle growth may occupy.
enum class Sides { kBoth, kAbove };

std::string_view to_string(Sides sides);

/// Simple undirected graph on an L x H orthogonal lattice.
///
/// Nodes get dense indices in insertion order; a site -> index table covers
/// the whole rectangle so lookups are O(1). Only rows allowed by `sides` may
/// be occupied: all of them for kBoth, rows y >= axis_row() for kAbove.
/// Once the graph has an edge, every new edge must touch an existing node,
/// which keeps grown structures connected.
class LatticeGraph {
 public:
  static constexpr std::size_t kMaxDegree = 4;

  LatticeGraph(int length, int height, Sides sides = Sides::kBoth);

  int length() const { return length_; }
  int height() const { return height_; }
  int axis_row() const { return height_ / 2; }
  Sides sides() const { return sides_; }
  int min_row() const { return sides_ == Sides::kAbove ? axis_row() : 0; }

  bool in_rectangle(Site s) const { return s.x >= 0 && s.x < length_ && s.y >= 0 && s.y < height_; }
  bool allowed(Site s) const { return in_rectangle(s) && s.y >= min_row(); }

  std::size_t node_count() const { return sites_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool contains(Site s) const { return index_of(s).has_value(); }
  std::optional<NodeId> index_of(Site s) const;
  Site site(NodeId node) const { return sites_[static_cast<std::size_t>(node)]; }
  std::span<const Site> nodes() const { return sites_; }

  /// Edges in insertion order.
  std::span<const Edge> edges() const { return edges_; }

  std::span<const NodeId> neighbors(NodeId node) const {
    const auto& adj = adjacency_[static_cast<std::size_t>(node)];
    return {adj.ids.data(), adj.count};
  }
  std::size_t degree(NodeId node) const { return adjacency_[static_cast<std::size_t>(node)].count; }

  bool has_edge(Site a, Site b) const;

  /// Throws kOutOfBounds, kInvalidEdge, kDuplicateEdge or kDetachedEdge; the
  /// graph is unchanged on failure.
  void add_edge(Site a, Site b);

  /// Number of lattice edges inside the allowed rows.
  std::size_t edge_capacity() const;

  CsrGraph to_csr() const;

 private:
  struct Adjacent {
    std::array<NodeId, kMaxDegree> ids{};
    std::size_t count = 0;
  };

  NodeId ensure_node(Site s);

  int length_;
  int height_;
  Sides sides_;
  std::vector<NodeId> index_;  // L*H, -1 when the site is not a node
  std::vector<Site> sites_;
  std::vector<Adjacent> adjacency_;
  std::vector<Edge> edges_;
};

/// Every absent lattice edge of `orientation` inside the allowed rows with at
/// least one endpoint already in the graph, ordered by the smaller endpoint.
std::vector<Edge> candidate_edges(const LatticeGraph& graph, Orientation orientation);

/// Site-level hierarchical neighborhoods; see the CsrGraph overload.
std::vector<std::vector<Site>> bfs_rings(const LatticeGraph& graph, Site source, int h_max);

/// Bit-for-bit structural equality: dimensions, node order and edge order.
bool identical(const LatticeGraph& lhs, const LatticeGraph& rhs);

}  // namespace radial
