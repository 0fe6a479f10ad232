#include "radial/accessibility.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "radial/error.hpp"

namespace radial {

namespace {

void check_source(const CsrGraph& graph, NodeId source) {
  if (source < 0 || static_cast<std::size_t>(source) >= graph.node_count()) {
    throw Error(ErrorKind::kUnknownNode, "unknown source node " + std::to_string(source));
  }
}

void check_hierarchy(int h) {
  if (h < 1) {
    throw Error(ErrorKind::kConfig, "hierarchy h must be at least 1 (got " + std::to_string(h) + ")");
  }
}

// Per-thread scratch for one source at a time. Dense arrays are sized to the
// graph once; only the touched entries are reset between sources, so the cost
// per source is proportional to the ball of radius h_max around it.
class WalkKernel {
 public:
  explicit WalkKernel(const CsrGraph& graph)
      : graph_(graph),
        dist_(graph.node_count(), -1),
        mass_(graph.node_count(), 0.0),
        next_mass_(graph.node_count(), 0.0),
        stamp_(graph.node_count(), 0) {}

  // Fills dist_/visited_ up to depth h_max and leaves rings_[d] = nodes at distance d.
  void explore(NodeId source, int h_max) {
    for (const NodeId n : visited_) {
      dist_[static_cast<std::size_t>(n)] = -1;
    }
    visited_.clear();
    rings_.assign(static_cast<std::size_t>(h_max) + 1, {});
    dist_[static_cast<std::size_t>(source)] = 0;
    visited_.push_back(source);
    rings_[0].push_back(source);
    for (int d = 0; d < h_max; ++d) {
      for (const NodeId node : rings_[static_cast<std::size_t>(d)]) {
        for (const NodeId next : graph_.neighbors(node)) {
          auto& dn = dist_[static_cast<std::size_t>(next)];
          if (dn < 0) {
            dn = d + 1;
            visited_.push_back(next);
            rings_[static_cast<std::size_t>(d) + 1].push_back(next);
          }
        }
      }
    }
  }

  void start_walk(NodeId source) {
    for (const NodeId n : active_) {
      mass_[static_cast<std::size_t>(n)] = 0.0;
    }
    active_.assign(1, source);
    mass_[static_cast<std::size_t>(source)] = 1.0;
  }

  // One application of the uniform transition rule to the active support.
  void advance() {
    ++epoch_;
    next_active_.clear();
    for (const NodeId node : active_) {
      const auto idx = static_cast<std::size_t>(node);
      const double m = mass_[idx];
      mass_[idx] = 0.0;
      const auto nbrs = graph_.neighbors(node);
      if (nbrs.empty()) {
        throw Error(ErrorKind::kDegenerateGraph,
                    "walk reached isolated node " + std::to_string(node));
      }
      const double share = m / static_cast<double>(nbrs.size());
      for (const NodeId next : nbrs) {
        const auto j = static_cast<std::size_t>(next);
        if (stamp_[j] != epoch_) {
          stamp_[j] = epoch_;
          next_mass_[j] = 0.0;
          next_active_.push_back(next);
        }
        next_mass_[j] += share;
      }
    }
    for (const NodeId node : next_active_) {
      const auto j = static_cast<std::size_t>(node);
      mass_[j] = next_mass_[j];
    }
    std::swap(active_, next_active_);
  }

  double ring_accessibility(int h, Normalization normalization) {
    const auto& ring = rings_[static_cast<std::size_t>(h)];
    if (ring.empty()) {
      return 0.0;
    }
    ring_mass_.clear();
    double total = 0.0;
    for (const NodeId node : ring) {
      const double m = mass_[static_cast<std::size_t>(node)];
      ring_mass_.push_back(m);
      total += m;
    }
    if (!(total > 0.0)) {
      throw Error(ErrorKind::kNotReached,
                  "walk mass never reached the h=" + std::to_string(h) + " ring");
    }
    return exponential_entropy(ring_mass_, normalization == Normalization::kRing ? total : 1.0);
  }

  const std::vector<double>& mass() const { return mass_; }
  const std::vector<NodeId>& active() const { return active_; }

 private:
  const CsrGraph& graph_;
  std::vector<int> dist_;
  std::vector<double> mass_;
  std::vector<double> next_mass_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> visited_;
  std::vector<std::vector<NodeId>> rings_;
  std::vector<NodeId> active_;
  std::vector<NodeId> next_active_;
  std::vector<double> ring_mass_;
};

}  // namespace

std::string_view to_string(Normalization normalization) {
  return normalization == Normalization::kRing ? "ring" : "raw";
}

double exponential_entropy(std::span<const double> weights, double total) {
  double entropy = 0.0;
  for (const double w : weights) {
    if (w > 0.0) {
      const double p = w / total;
      entropy -= p * std::log(p);
    }
  }
  return std::exp(entropy);
}

WalkDistribution walk_distribution(const CsrGraph& graph, NodeId source, int h) {
  check_source(graph, source);
  check_hierarchy(h);
  WalkKernel kernel(graph);
  kernel.start_walk(source);
  for (int step = 0; step < h; ++step) {
    kernel.advance();
  }
  WalkDistribution out{source, h, {}};
  for (const NodeId node : kernel.active()) {
    out.probs.emplace_back(node, kernel.mass()[static_cast<std::size_t>(node)]);
  }
  std::sort(out.probs.begin(), out.probs.end());
  return out;
}

double accessibility(const CsrGraph& graph, NodeId source, int h, Normalization normalization) {
  check_source(graph, source);
  check_hierarchy(h);
  WalkKernel kernel(graph);
  kernel.explore(source, h);
  kernel.start_walk(source);
  for (int step = 0; step < h; ++step) {
    kernel.advance();
  }
  return kernel.ring_accessibility(h, normalization);
}

std::vector<AccessibilityField> accessibility_fields(const CsrGraph& graph,
                                                     std::span<const int> h_list,
                                                     const FieldOptions& options) {
  if (h_list.empty()) {
    throw Error(ErrorKind::kConfig, "at least one hierarchy is required");
  }
  for (const int h : h_list) {
    check_hierarchy(h);
  }
  const int h_max = *std::max_element(h_list.begin(), h_list.end());
  const std::size_t n = graph.node_count();

  std::vector<AccessibilityField> fields;
  for (const int h : h_list) {
    fields.push_back({h, options.normalization, std::vector<double>(n, 0.0), {}});
  }

  // want[d] lists the field slots to fill after d walk steps.
  std::vector<std::vector<std::size_t>> want(static_cast<std::size_t>(h_max) + 1);
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    want[static_cast<std::size_t>(h_list[i])].push_back(i);
  }

  auto work = [&](std::size_t begin, std::size_t end) {
    WalkKernel kernel(graph);
    for (std::size_t s = begin; s < end; ++s) {
      const auto source = static_cast<NodeId>(s);
      kernel.explore(source, h_max);
      kernel.start_walk(source);
      for (int step = 1; step <= h_max; ++step) {
        kernel.advance();
        for (const std::size_t slot : want[static_cast<std::size_t>(step)]) {
          fields[slot].values[s] = kernel.ring_accessibility(step, options.normalization);
        }
      }
    }
  };

  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  if (jobs <= 1) {
    work(0, n);
    return fields;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::size_t begin = std::min(n, j * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      workers.emplace_back([&, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return fields;
}

AccessibilityField accessibility_field(const CsrGraph& graph, int h, const FieldOptions& options) {
  const int h_list[] = {h};
  return std::move(accessibility_fields(graph, h_list, options).front());
}

std::map<Site, double> walk_distribution(const LatticeGraph& graph, Site source, int h) {
  const auto id = graph.index_of(source);
  if (!id) {
    throw Error(ErrorKind::kUnknownNode, "source is not a node of the structure");
  }
  const auto dist = walk_distribution(graph.to_csr(), *id, h);
  std::map<Site, double> out;
  for (const auto& [node, p] : dist.probs) {
    out.emplace(graph.site(node), p);
  }
  return out;
}

double accessibility(const LatticeGraph& graph, Site source, int h, Normalization normalization) {
  const auto id = graph.index_of(source);
  if (!id) {
    throw Error(ErrorKind::kUnknownNode, "source is not a node of the structure");
  }
  return accessibility(graph.to_csr(), *id, h, normalization);
}

}  // namespace radial
