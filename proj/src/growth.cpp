#include "radial/growth.hpp"

#include <bit>
#include <string>

namespace radial {

namespace {

// Orientation draw shared by both growth paths so they consume the stream
// identically: one uniform for the class, then one index within the class.
struct ClassChoice {
  Orientation orientation;
  bool fallback;
};

ClassChoice choose_class(Sampler sampler, double p_n, std::size_t parallel_count,
                         std::size_t normal_count, RandomStream& rng) {
  if (sampler == Sampler::kPerEdge) {
    const double normal_weight = p_n * static_cast<double>(normal_count);
    const double total = normal_weight + (1.0 - p_n) * static_cast<double>(parallel_count);
    const double u = rng.uniform01();
    if (total > 0.0) {
      return {u * total < normal_weight ? Orientation::kNormal : Orientation::kParallel, false};
    }
    // Every remaining candidate has zero weight: take whichever class exists.
    return {normal_count > 0 ? Orientation::kNormal : Orientation::kParallel, true};
  }
  const Orientation preferred = rng.uniform01() < p_n ? Orientation::kNormal : Orientation::kParallel;
  const std::size_t preferred_count =
      preferred == Orientation::kNormal ? normal_count : parallel_count;
  if (preferred_count > 0) {
    return {preferred, false};
  }
  return {preferred == Orientation::kNormal ? Orientation::kParallel : Orientation::kNormal, true};
}

std::size_t added_edges(const LatticeGraph& graph) {
  return graph.edge_count() - static_cast<std::size_t>(graph.length() - 1);
}

std::string saturation_message(const LatticeGraph& graph) {
  return "structure saturated at " + std::to_string(graph.edge_count()) +
         " edges: no candidate edge remains";
}

}  // namespace

std::size_t GrowthConfig::total_edges_at(std::size_t stage) const {
  return count_axis_edges ? stage : stage + static_cast<std::size_t>(length - 1);
}

void GrowthConfig::validate() const {
  if (length < 2) {
    throw Error(ErrorKind::kConfig, "L must be at least 2 (got " + std::to_string(length) + ")");
  }
  if (height < 1) {
    throw Error(ErrorKind::kConfig, "H must be at least 1 (got " + std::to_string(height) + ")");
  }
  if (!(p_n >= 0.0 && p_n <= 1.0)) {
    throw Error(ErrorKind::kConfig, "p_n must lie in [0, 1] (got " + std::to_string(p_n) + ")");
  }
  validate_stage(target_edges);
}

void GrowthConfig::validate_stage(std::size_t stage) const {
  const auto axis_edges = static_cast<std::size_t>(length - 1);
  if (count_axis_edges && stage < axis_edges) {
    throw Error(ErrorKind::kConfig, "target e=" + std::to_string(stage) +
                                        " violates e >= L - 1 = " + std::to_string(axis_edges));
  }
  const LatticeGraph region(length, height, sides);
  if (total_edges_at(stage) > region.edge_capacity()) {
    throw Error(ErrorKind::kConfig, "target e=" + std::to_string(stage) +
                                        " exceeds the lattice edge capacity " +
                                        std::to_string(region.edge_capacity()));
  }
}

LatticeGraph initialize_axis(const GrowthConfig& config) {
  if (config.length < 2 || config.height < 1) {
    throw Error(ErrorKind::kConfig, "axis needs L >= 2 and H >= 1");
  }
  LatticeGraph graph(config.length, config.height, config.sides);
  const int row = graph.axis_row();
  for (int x = 0; x + 1 < config.length; ++x) {
    graph.add_edge({x, row}, {x + 1, row});
  }
  return graph;
}

GrowthStep grow_step(LatticeGraph& graph, double p_n, RandomStream& rng, Sampler sampler) {
  const auto parallel = candidate_edges(graph, Orientation::kParallel);
  const auto normal = candidate_edges(graph, Orientation::kNormal);
  if (parallel.empty() && normal.empty()) {
    throw Error(ErrorKind::kSaturation, saturation_message(graph));
  }
  const auto choice = choose_class(sampler, p_n, parallel.size(), normal.size(), rng);
  const auto& pool = choice.orientation == Orientation::kParallel ? parallel : normal;
  const Edge edge = pool[rng.uniform_index(pool.size())];
  graph.add_edge(edge.a, edge.b);
  return {added_edges(graph), edge, choice.orientation, choice.fallback};
}

void Grower::SlotSet::add(std::size_t slot, int delta) {
  for (std::size_t i = slot + 1; i < tree_.size(); i += i & (~i + 1)) {
    tree_[i] += delta;
  }
}

void Grower::SlotSet::insert(std::size_t slot) {
  if (!present_[slot]) {
    present_[slot] = 1;
    ++count_;
    add(slot, 1);
  }
}

void Grower::SlotSet::erase(std::size_t slot) {
  if (present_[slot]) {
    present_[slot] = 0;
    --count_;
    add(slot, -1);
  }
}

std::size_t Grower::SlotSet::nth(std::size_t k) const {
  const std::size_t n = tree_.size() - 1;
  std::size_t pos = 0;
  auto remaining = static_cast<int>(k) + 1;
  for (std::size_t step = std::bit_floor(n); step > 0; step >>= 1) {
    if (pos + step <= n && tree_[pos + step] < remaining) {
      pos += step;
      remaining -= tree_[pos];
    }
  }
  return pos;
}

Grower::Grower(const GrowthConfig& config)
    : config_(config),
      graph_(initialize_axis(config)),
      rng_(config.seed),
      parallel_(static_cast<std::size_t>(config.length) * static_cast<std::size_t>(config.height)),
      normal_(static_cast<std::size_t>(config.length) * static_cast<std::size_t>(config.height)) {
  config_.validate();
  for (const Site s : graph_.nodes()) {
    register_node(s);
  }
}

std::size_t Grower::slot_of(Site lower) const {
  return static_cast<std::size_t>(lower.x) * static_cast<std::size_t>(config_.height) +
         static_cast<std::size_t>(lower.y);
}

Edge Grower::edge_at(Orientation o, std::size_t slot) const {
  const auto h = static_cast<std::size_t>(config_.height);
  const Site lower{static_cast<int>(slot / h), static_cast<int>(slot % h)};
  return o == Orientation::kParallel ? Edge{lower, {lower.x + 1, lower.y}}
                                     : Edge{lower, {lower.x, lower.y + 1}};
}

void Grower::register_node(Site s) {
  constexpr Site kOffsets[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const Site d : kOffsets) {
    const Site t{s.x + d.x, s.y + d.y};
    if (!graph_.allowed(t) || graph_.has_edge(s, t)) {
      continue;
    }
    const Edge e = Edge::canonical(s, t);
    set_for(e.orientation()).insert(slot_of(e.a));
  }
}

std::size_t Grower::candidate_count(Orientation orientation) const {
  return set_for(orientation).size();
}

const GrowthStep& Grower::step() {
  if (parallel_.size() == 0 && normal_.size() == 0) {
    throw SaturationError(saturation_message(graph_), graph_, trace_);
  }
  const auto choice = choose_class(config_.sampler, config_.p_n, parallel_.size(), normal_.size(), rng_);
  auto& pool = set_for(choice.orientation);
  const std::size_t slot = pool.nth(rng_.uniform_index(pool.size()));
  const Edge edge = edge_at(choice.orientation, slot);

  const bool new_a = !graph_.contains(edge.a);
  const bool new_b = !graph_.contains(edge.b);
  graph_.add_edge(edge.a, edge.b);
  pool.erase(slot);
  if (new_a) {
    register_node(edge.a);
  }
  if (new_b) {
    register_node(edge.b);
  }
  trace_.push_back({added_edges(graph_), edge, choice.orientation, choice.fallback});
  return trace_.back();
}

void Grower::grow_until_total(std::size_t total_edges) {
  while (graph_.edge_count() < total_edges) {
    step();
  }
}

GrowthResult grow_to(const GrowthConfig& config) {
  Grower grower(config);
  grower.grow_to_stage(config.target_edges);
  return {grower.graph(), grower.trace()};
}

}  // namespace radial
