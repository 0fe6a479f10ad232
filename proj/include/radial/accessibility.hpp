#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "radial/csr_graph.hpp"
#include "radial/lattice.hpp"

namespace radial {

/// How the h-step walk masses on the h-ring become a distribution.
///   kRing: restrict to the ring and renormalize to 1 (default).
///   kRaw:  use the raw h-step masses on the ring as-is.
enum class Normalization { kRing, kRaw };

std::string_view to_string(Normalization normalization);

struct WalkDistribution {
  NodeId source = 0;
  int h = 0;
  /// (node, probability) for every node with nonzero mass, sorted by node.
  std::vector<std::pair<NodeId, double>> probs;
};

/// Exact distribution of a uniform random walk after exactly h steps.
WalkDistribution walk_distribution(const CsrGraph& graph, NodeId source, int h);

/// exp(-sum p log p) of `weights` after scaling them by `total`; zero
/// weights contribute nothing.
double exponential_entropy(std::span<const double> weights, double total);

/// Accessibility of one node at hierarchy h. Zero when the h-ring is empty.
double accessibility(const CsrGraph& graph, NodeId source, int h,
                     Normalization normalization = Normalization::kRing);

struct FieldProvenance {
  std::size_t edges = 0;
  double p_n = 0.0;
  std::uint64_t seed = 0;
};

/// Accessibility of every node at one hierarchy, indexed by NodeId.
struct AccessibilityField {
  int h = 0;
  Normalization normalization = Normalization::kRing;
  std::vector<double> values;
  FieldProvenance provenance;
};

struct FieldOptions {
  Normalization normalization = Normalization::kRing;
  /// Worker threads; 0 selects the hardware concurrency.
  unsigned jobs = 1;
};

/// Fields for several hierarchies at once. One BFS and one walk of depth
/// max(h_list) per source serve every requested h.
std::vector<AccessibilityField> accessibility_fields(const CsrGraph& graph,
                                                     std::span<const int> h_list,
                                                     const FieldOptions& options = {});

AccessibilityField accessibility_field(const CsrGraph& graph, int h,
                                       const FieldOptions& options = {});

/// Site-keyed conveniences over a lattice structure.
std::map<Site, double> walk_distribution(const LatticeGraph& graph, Site source, int h);
double accessibility(const LatticeGraph& graph, Site source, int h,
                     Normalization normalization = Normalization::kRing);

}  // namespace radial
