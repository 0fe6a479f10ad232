#include "radial/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "radial/error.hpp"

namespace radial {

namespace {

std::string describe(Site s) {
  return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
}

}  // namespace

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::kParallel ? "parallel" : "normal";
}

std::string_view to_string(Sides sides) {
  return sides == Sides::kBoth ? "both" : "above";
}

Orientation edge_orientation(Site a, Site b) {
  const int dx = std::abs(a.x - b.x);
  const int dy = std::abs(a.y - b.y);
  if (dx == 1 && dy == 0) {
    return Orientation::kParallel;
  }
  if (dx == 0 && dy == 1) {
    return Orientation::kNormal;
  }
  throw Error(ErrorKind::kInvalidEdge, describe(a) + "-" + describe(b) + " is not a lattice edge");
}

LatticeGraph::LatticeGraph(int length, int height, Sides sides)
    : length_(length), height_(height), sides_(sides) {
  if (length < 1 || height < 1) {
    throw Error(ErrorKind::kConfig, "lattice dimensions must be positive");
  }
  index_.assign(static_cast<std::size_t>(length) * static_cast<std::size_t>(height), -1);
}

std::optional<NodeId> LatticeGraph::index_of(Site s) const {
  if (!in_rectangle(s)) {
    return std::nullopt;
  }
  const NodeId id = index_[static_cast<std::size_t>(s.x) * static_cast<std::size_t>(height_) +
                           static_cast<std::size_t>(s.y)];
  if (id < 0) {
    return std::nullopt;
  }
  return id;
}

bool LatticeGraph::has_edge(Site a, Site b) const {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  if (!ia || !ib) {
    return false;
  }
  const auto adj = neighbors(*ia);
  return std::find(adj.begin(), adj.end(), *ib) != adj.end();
}

NodeId LatticeGraph::ensure_node(Site s) {
  auto& slot = index_[static_cast<std::size_t>(s.x) * static_cast<std::size_t>(height_) +
                      static_cast<std::size_t>(s.y)];
  if (slot < 0) {
    slot = static_cast<NodeId>(sites_.size());
    sites_.push_back(s);
    adjacency_.emplace_back();
  }
  return slot;
}

void LatticeGraph::add_edge(Site a, Site b) {
  if (!allowed(a) || !allowed(b)) {
    throw Error(ErrorKind::kOutOfBounds,
                describe(a) + "-" + describe(b) + " leaves the allowed region");
  }
  edge_orientation(a, b);
  if (has_edge(a, b)) {
    throw Error(ErrorKind::kDuplicateEdge, describe(a) + "-" + describe(b) + " already present");
  }
  if (!edges_.empty() && !contains(a) && !contains(b)) {
    throw Error(ErrorKind::kDetachedEdge,
                describe(a) + "-" + describe(b) + " does not touch the structure");
  }
  const NodeId ia = ensure_node(a);
  const NodeId ib = ensure_node(b);
  auto& adj_a = adjacency_[static_cast<std::size_t>(ia)];
  auto& adj_b = adjacency_[static_cast<std::size_t>(ib)];
  adj_a.ids[adj_a.count++] = ib;
  adj_b.ids[adj_b.count++] = ia;
  edges_.push_back(Edge::canonical(a, b));
}

std::size_t LatticeGraph::edge_capacity() const {
  const auto rows = static_cast<std::size_t>(height_ - min_row());
  const auto cols = static_cast<std::size_t>(length_);
  return (cols - 1) * rows + cols * (rows - 1);
}

CsrGraph LatticeGraph::to_csr() const {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(edges_.size());
  for (const auto& edge : edges_) {
    pairs.emplace_back(*index_of(edge.a), *index_of(edge.b));
  }
  return CsrGraph::from_edges(sites_.size(), pairs);
}

std::vector<Edge> candidate_edges(const LatticeGraph& graph, Orientation orientation) {
  const Site step = orientation == Orientation::kParallel ? Site{1, 0} : Site{0, 1};
  std::vector<Edge> out;
  // Scanning every lower endpoint in (x, y) order yields the canonical order directly.
  for (int x = 0; x < graph.length(); ++x) {
    for (int y = graph.min_row(); y < graph.height(); ++y) {
      const Site a{x, y};
      const Site b{x + step.x, y + step.y};
      if (!graph.allowed(b)) {
        continue;
      }
      if ((graph.contains(a) || graph.contains(b)) && !graph.has_edge(a, b)) {
        out.push_back({a, b});
      }
    }
  }
  return out;
}

std::vector<std::vector<Site>> bfs_rings(const LatticeGraph& graph, Site source, int h_max) {
  const auto id = graph.index_of(source);
  if (!id) {
    throw Error(ErrorKind::kUnknownNode, "source " + describe(source) + " is not a node");
  }
  if (h_max < 1) {
    throw Error(ErrorKind::kConfig, "h_max must be at least 1");
  }
  const auto rings = bfs_rings(graph.to_csr(), *id, h_max);
  std::vector<std::vector<Site>> out;
  out.reserve(rings.size());
  for (const auto& ring : rings) {
    std::vector<Site> sites;
    sites.reserve(ring.size());
    for (const NodeId node : ring) {
      sites.push_back(graph.site(node));
    }
    std::sort(sites.begin(), sites.end());
    out.push_back(std::move(sites));
  }
  return out;
}

bool identical(const LatticeGraph& lhs, const LatticeGraph& rhs) {
  return lhs.length() == rhs.length() && lhs.height() == rhs.height() && lhs.sides() == rhs.sides() &&
         std::ranges::equal(lhs.nodes(), rhs.nodes()) && std::ranges::equal(lhs.edges(), rhs.edges());
}

}  // namespace radial
