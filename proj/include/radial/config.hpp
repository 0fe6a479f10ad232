#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radial/accessibility.hpp"
#include "radial/analysis.hpp"
#include "radial/growth.hpp"

namespace radial {

/// Stages shown for single structures: 500, 1000, 1500, 2000, 2500.
std::vector<std::size_t> structure_stages();
/// Stages used for accessibility densities: 500, 1000, 1500, 2500.
std::vector<std::size_t> density_stages();

/// Settings shared by every command. Text form is flat `key=value` lines;
/// `#` starts a comment.
///
/// Keys: L, H, p_n, p_n_list, e, e_checkpoints, h_list, h_max, sides,
/// sampler, runs, seed, count_axis_edges, threshold, border_rule, bin_width,
/// normalization, histogram_mode, jobs, save_runs.
struct RunConfig {
  int length = 60;
  int height = 50;
  double p_n = 0.5;
  std::vector<double> p_n_list;  // empty: {p_n} for ensembles, the 0.05 grid for sweeps
  std::optional<std::size_t> e;
  std::vector<std::size_t> e_checkpoints;  // empty: command-specific default
  std::vector<int> h_list{3, 5, 10};
  std::optional<int> h_max;  // default: max(h_list)
  Sides sides = Sides::kBoth;
  Sampler sampler = Sampler::kPerEdge;
  int runs = 30;
  std::uint64_t seed = 1;
  bool count_axis_edges = true;
  double threshold = 6.0;
  BorderRule border_rule = BorderRule::kLessEqual;
  double bin_width = 1.0;
  Normalization normalization = Normalization::kRing;
  HistogramMode histogram_mode = HistogramMode::kPerRun;
  unsigned jobs = 0;
  int save_runs = 1;

  /// Throws kConfig for an unknown key or an unparsable value.
  void set(std::string_view key, std::string_view value);

  GrowthConfig growth() const;
  EnsembleOptions ensemble_options() const;
  int effective_h_max() const;

  /// Canonical key=value text; parse(to_text()) reproduces the config.
  std::string to_text() const;
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

}  // namespace radial
