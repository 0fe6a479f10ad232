#include "radial/csr_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "radial/error.hpp"

namespace radial {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidEdge: return "invalid-edge";
    case ErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ErrorKind::kOutOfBounds: return "out-of-bounds";
    case ErrorKind::kDetachedEdge: return "detached-edge";
    case ErrorKind::kUnknownNode: return "unknown-node";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kSaturation: return "saturation";
    case ErrorKind::kDegenerateGraph: return "degenerate-graph";
    case ErrorKind::kNotReached: return "not-reached";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kNoData: return "no-data";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

CsrGraph CsrGraph::from_edges(std::size_t node_count,
                              std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::vector<NodeId>> lists(node_count);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= node_count ||
        static_cast<std::size_t>(b) >= node_count) {
      throw Error(ErrorKind::kUnknownNode,
                  "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") references a missing node");
    }
    if (a == b) {
      throw Error(ErrorKind::kInvalidEdge, "self-loop at node " + std::to_string(a));
    }
    lists[static_cast<std::size_t>(a)].push_back(b);
    lists[static_cast<std::size_t>(b)].push_back(a);
  }

  CsrGraph graph;
  graph.offsets_.reserve(node_count + 1);
  graph.offsets_.push_back(0);
  graph.targets_.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < node_count; ++i) {
    auto& list = lists[i];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorKind::kDuplicateEdge, "duplicate edge at node " + std::to_string(i));
    }
    graph.targets_.insert(graph.targets_.end(), list.begin(), list.end());
    graph.offsets_.push_back(graph.targets_.size());
  }
  return graph;
}

std::vector<std::vector<NodeId>> bfs_rings(const CsrGraph& graph, NodeId source, int h_max) {
  if (source < 0 || static_cast<std::size_t>(source) >= graph.node_count()) {
    throw Error(ErrorKind::kUnknownNode, "unknown source node " + std::to_string(source));
  }
  if (h_max < 0) {
    throw Error(ErrorKind::kConfig, "h_max must be non-negative");
  }

  std::vector<int> dist(graph.node_count(), -1);
  std::vector<std::vector<NodeId>> rings(static_cast<std::size_t>(h_max) + 1);
  std::queue<NodeId> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId node = frontier.front();
    frontier.pop();
    const int d = dist[static_cast<std::size_t>(node)];
    rings[static_cast<std::size_t>(d)].push_back(node);
    if (d == h_max) {
      continue;
    }
    for (const NodeId next : graph.neighbors(node)) {
      if (dist[static_cast<std::size_t>(next)] < 0) {
        dist[static_cast<std::size_t>(next)] = d + 1;
        frontier.push(next);
      }
    }
  }
  for (auto& ring : rings) {
    std::sort(ring.begin(), ring.end());
  }
  return rings;
}

}  // namespace radial
