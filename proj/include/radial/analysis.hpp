#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "radial/accessibility.hpp"
#include "radial/growth.hpp"
#include "radial/lattice.hpp"
#include "radial/stats.hpp"

namespace radial {

/// Columns h_max <= x <= L - 1 - h_max, all rows. The lateral strips of
/// width h_max are buffer zones excluded from measurement.
struct MeasurementRegion {
  int x_min = 0;
  int x_max = 0;

  /// Throws kConfig when L <= 2 * h_max (empty region) or h_max < 0.
  static MeasurementRegion for_lattice(int length, int h_max);

  bool contains(Site s) const { return s.x >= x_min && s.x <= x_max; }
};

std::vector<Site> included_nodes(const LatticeGraph& graph, int h_max);

enum class BorderRule { kLessEqual, kLess };

/// Nodes whose accessibility is at or below (kLessEqual) or strictly below
/// (kLess) the threshold, sorted by site.
std::vector<Site> border_nodes(const LatticeGraph& graph, const AccessibilityField& field,
                               double threshold, BorderRule rule = BorderRule::kLessEqual);

struct Histogram {
  double bin_width = 1.0;
  std::vector<double> bin_edges;  // size() == densities.size() + 1, starting at 0
  std::vector<double> densities;  // count / (samples * width)
  std::size_t sample_count = 0;
};

/// Bin count needed so that [0, count * width) covers `max_value`.
std::size_t bins_for(double max_value, double bin_width);

/// Density histogram of raw values; bins anchored at 0 with at least
/// `min_bins` bins.
Histogram density_histogram(std::span<const double> values, double bin_width,
                            std::size_t min_bins = 0);

/// Histogram of the field over nodes inside the region. Throws kNoData when
/// the region holds no node.
Histogram accessibility_histogram(const LatticeGraph& graph, const AccessibilityField& field,
                                  const MeasurementRegion& region, double bin_width,
                                  std::size_t min_bins = 0);

enum class HistogramMode { kPerRun, kPooled };

struct EnsembleOptions {
  int n_runs = 30;
  std::vector<int> h_list{3, 5, 10};
  /// Stages as counted by GrowthConfig::count_axis_edges.
  std::vector<std::size_t> e_checkpoints{500, 1000, 1500, 2500};
  /// Buffer width; negative selects max(h_list).
  int h_max = -1;
  double bin_width = 1.0;
  double border_threshold = 6.0;
  BorderRule border_rule = BorderRule::kLessEqual;
  Normalization normalization = Normalization::kRing;
  HistogramMode histogram_mode = HistogramMode::kPerRun;
  /// Concurrent runs; 0 selects the hardware concurrency.
  unsigned jobs = 0;
};

struct RunRecord {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double alpha_mean = 0.0;  // over the measurement region
  std::size_t border_count = 0;  // border nodes inside the measurement region
  std::size_t region_nodes = 0;
};

struct EnsembleSummary {
  double p_n = 0.0;
  std::size_t e = 0;
  int h = 0;
  int n_runs = 0;
  std::uint64_t master_seed = 0;
  double bin_width = 1.0;
  std::vector<double> bin_edges;
  std::vector<double> density_mean;
  std::vector<double> density_std;
  std::vector<RunRecord> runs;  // ordered by run index
  MeanStd alpha;  // over per-run means
  MeanStd border;  // over per-run border counts

  std::vector<double> run_means() const;
  std::vector<double> border_counts() const;
};

/// Snapshot of one run at one checkpoint, handed to an observer.
struct RunSnapshot {
  std::size_t run;
  std::uint64_t seed;
  std::size_t e;
  const LatticeGraph& graph;
  const GrowthTrace& trace;
  std::span<const AccessibilityField> fields;  // parallel to EnsembleOptions::h_list
};

using SnapshotObserver = std::function<void(const RunSnapshot&)>;

/// Grows n_runs realizations of `growth` (seed = master seed) and measures
/// each at every checkpoint. One trajectory per run serves all checkpoints.
/// Results are ordered by (e ascending, h as listed) and do not depend on
/// jobs or completion order. The observer, when set, is called for every
/// run and checkpoint from worker threads, one call at a time.
std::vector<EnsembleSummary> run_ensemble(const GrowthConfig& growth, const EnsembleOptions& options,
                                          const SnapshotObserver& observer = {});

const EnsembleSummary& find_summary(std::span<const EnsembleSummary> summaries, std::size_t e, int h);

struct SweepPoint {
  double p_n = 0.0;
  int h = 0;
  std::size_t e = 0;
  double alpha_mean = 0.0;
  double alpha_std = 0.0;
  int n_runs = 0;
};

/// Ensemble mean accessibility against p_n at a single stage. Each p_n uses
/// the same per-run seeds, derived from growth.seed.
std::vector<SweepPoint> sweep_pn(const GrowthConfig& growth, std::span<const double> pn_list,
                                 std::size_t e, const EnsembleOptions& options);

/// 0.05, 0.10, ..., 0.95.
std::vector<double> default_pn_grid();

}  // namespace radial
