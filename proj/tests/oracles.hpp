#pragma once

// Independent reference computations for tests. Nothing here touches the
// library's walk kernel or BFS; graphs are plain adjacency lists.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "radial/csr_graph.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;

inline Adjacency adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  Adjacency adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

// Enumerates every walk of exactly h steps from `node`, accumulating the
// product of 1/degree along the walk at its endpoint.
inline void enumerate_walks(const Adjacency& adj, int node, int h, double p,
                            std::vector<double>& mass) {
  if (h == 0) {
    mass[static_cast<std::size_t>(node)] += p;
    return;
  }
  const auto& nbrs = adj[static_cast<std::size_t>(node)];
  for (const int next : nbrs) {
    enumerate_walks(adj, next, h - 1, p / static_cast<double>(nbrs.size()), mass);
  }
}

inline std::vector<double> walk_mass(const Adjacency& adj, int source, int h) {
  std::vector<double> mass(adj.size(), 0.0);
  enumerate_walks(adj, source, h, 1.0, mass);
  return mass;
}

// Distances by repeated relaxation (Bellman-Ford style), not BFS.
inline std::vector<int> distances(const Adjacency& adj, int source) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dist(adj.size(), n + 1);
  dist[static_cast<std::size_t>(source)] = 0;
  for (int round = 0; round < n; ++round) {
    for (int u = 0; u < n; ++u) {
      for (const int v : adj[static_cast<std::size_t>(u)]) {
        dist[static_cast<std::size_t>(v)] =
            std::min(dist[static_cast<std::size_t>(v)], dist[static_cast<std::size_t>(u)] + 1);
      }
    }
  }
  return dist;
}

// Ring-normalized exponential entropy from enumerated walks.
inline double accessibility(const Adjacency& adj, int source, int h) {
  const auto mass = walk_mass(adj, source, h);
  const auto dist = distances(adj, source);
  double total = 0.0;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (dist[i] == h) {
      total += mass[i];
    }
  }
  if (total == 0.0) {
    return 0.0;
  }
  double entropy = 0.0;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (dist[i] == h && mass[i] > 0.0) {
      const double p = mass[i] / total;
      entropy -= p * std::log(p);
    }
  }
  return std::exp(entropy);
}

inline bool connected(const Adjacency& adj) {
  const auto dist = distances(adj, 0);
  return std::all_of(dist.begin(), dist.end(),
                     [&](int d) { return d <= static_cast<int>(adj.size()); });
}

struct SmallGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Random connected simple graph on n nodes: a random spanning tree plus
// extra edges with probability `density`.
inline SmallGraph random_connected(int n, double density, std::mt19937_64& rng) {
  SmallGraph g{n, {}};
  std::set<std::pair<int, int>> seen;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int a = order[static_cast<std::size_t>(i)];
    const int b = order[static_cast<std::size_t>(pick(rng))];
    seen.insert({std::min(a, b), std::max(a, b)});
  }
  std::bernoulli_distribution extra(density);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!seen.count({a, b}) && extra(rng)) {
        seen.insert({a, b});
      }
    }
  }
  g.edges.assign(seen.begin(), seen.end());
  return g;
}

inline radial::CsrGraph to_csr(const SmallGraph& g) {
  std::vector<std::pair<radial::NodeId, radial::NodeId>> pairs(g.edges.begin(), g.edges.end());
  return radial::CsrGraph::from_edges(static_cast<std::size_t>(g.n), pairs);
}

}  // namespace oracle
