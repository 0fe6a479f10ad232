#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "radial/error.hpp"
#include "radial/lattice.hpp"
#include "radial/random.hpp"

namespace radial {

/// How the orientation of the next link is drawn.
///
/// kClassFirst picks the class with probability p_n (normal) or 1 - p_n
/// (parallel) regardless of how many candidates each class holds. kPerEdge
/// weights every candidate edge by its orientation's probability, so a class
/// is chosen with probability proportional to p * (candidates in the class).
/// Both then pick uniformly within the class.
enum class Sampler { kClassFirst, kPerEdge };

struct GrowthConfig {
  int length = 60;
  int height = 50;
  /// Probability of preferring a normal link; the parallel preference is 1 - p_n.
  double p_n = 0.5;
  std::size_t target_edges = 1500;
  std::uint64_t seed = 1;
  Sides sides = Sides::kBoth;
  Sampler sampler = Sampler::kPerEdge;
  /// When true, stage counts include the L - 1 axis edges. When false a stage
  /// counts only the links added after initialization.
  bool count_axis_edges = true;

  /// Total edge count of the graph at the given stage.
  std::size_t total_edges_at(std::size_t stage) const;

  /// Throws kConfig naming the violated constraint.
  void validate() const;
  void validate_stage(std::size_t stage) const;
};

struct GrowthStep {
  std::size_t step = 0;  // 1-based, counts attachments after the axis
  Edge edge;
  Orientation orientation = Orientation::kNormal;
  bool fallback = false;

  bool operator==(const GrowthStep&) const = default;
};

using GrowthTrace = std::vector<GrowthStep>;

/// Thrown when no candidate edge remains; carries the saturated structure.
class SaturationError : public Error {
 public:
  SaturationError(const std::string& message, LatticeGraph graph, GrowthTrace trace)
      : Error(ErrorKind::kSaturation, message), graph_(std::move(graph)), trace_(std::move(trace)) {}

  const LatticeGraph& graph() const { return graph_; }
  const GrowthTrace& trace() const { return trace_; }

 private:
  LatticeGraph graph_;
  GrowthTrace trace_;
};

/// Straight chain of L nodes on the axis row.
LatticeGraph initialize_axis(const GrowthConfig& config);

/// One attachment, recomputing the candidate lists from scratch. This is the
/// reference path; Grower produces the same draws incrementally.
GrowthStep grow_step(LatticeGraph& graph, double p_n, RandomStream& rng,
                     Sampler sampler = Sampler::kPerEdge);

/// Incremental growth engine.
///
/// Candidates of each orientation live in a Fenwick tree over lattice slots
/// indexed by the lower endpoint (slot = x * H + y), which is exactly the
/// canonical candidate order. Picking the k-th candidate is a tree descent,
/// so a step costs O(log LH) instead of a full rescan.
class Grower {
 public:
  explicit Grower(const GrowthConfig& config);

  const GrowthConfig& config() const { return config_; }
  const LatticeGraph& graph() const { return graph_; }
  const GrowthTrace& trace() const { return trace_; }

  std::size_t candidate_count(Orientation orientation) const;

  /// Throws SaturationError when both classes are empty.
  const GrowthStep& step();

  /// Grows until the graph holds `total_edges` edges (no-op if it already does).
  void grow_until_total(std::size_t total_edges);

  /// Grows to a stage as counted by config().count_axis_edges.
  void grow_to_stage(std::size_t stage) { grow_until_total(config_.total_edges_at(stage)); }

 private:
  class SlotSet {
   public:
    explicit SlotSet(std::size_t size) : tree_(size + 1, 0), present_(size, 0) {}
    void insert(std::size_t slot);
    void erase(std::size_t slot);
    std::size_t size() const { return count_; }
    std::size_t nth(std::size_t k) const;

   private:
    void add(std::size_t slot, int delta);
    std::vector<int> tree_;
    std::vector<std::uint8_t> present_;
    std::size_t count_ = 0;
  };

  SlotSet& set_for(Orientation o) { return o == Orientation::kParallel ? parallel_ : normal_; }
  const SlotSet& set_for(Orientation o) const { return o == Orientation::kParallel ? parallel_ : normal_; }
  std::size_t slot_of(Site lower) const;
  Edge edge_at(Orientation o, std::size_t slot) const;
  void register_node(Site s);

  GrowthConfig config_;
  LatticeGraph graph_;
  RandomStream rng_;
  SlotSet parallel_;
  SlotSet normal_;
  GrowthTrace trace_;
};

struct GrowthResult {
  LatticeGraph graph;
  GrowthTrace trace;
};

/// Grows a fresh structure to config.target_edges.
GrowthResult grow_to(const GrowthConfig& config);

}  // namespace radial
