#include "radial/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "radial/error.hpp"

namespace radial {

MeasurementRegion MeasurementRegion::for_lattice(int length, int h_max) {
  if (h_max < 0) {
    throw Error(ErrorKind::kConfig, "h_max must be non-negative");
  }
  if (length <= 2 * h_max) {
    throw Error(ErrorKind::kConfig, "measurement region is empty: L=" + std::to_string(length) +
                                        " must exceed 2*h_max=" + std::to_string(2 * h_max));
  }
  return {h_max, length - 1 - h_max};
}

std::vector<Site> included_nodes(const LatticeGraph& graph, int h_max) {
  const auto region = MeasurementRegion::for_lattice(graph.length(), h_max);
  std::vector<Site> out;
  for (const Site s : graph.nodes()) {
    if (region.contains(s)) {
      out.push_back(s);
    }
  }
  return out;
}

namespace {

bool is_border(double alpha, double threshold, BorderRule rule) {
  return rule == BorderRule::kLessEqual ? alpha <= threshold : alpha < threshold;
}

void check_field(const LatticeGraph& graph, const AccessibilityField& field) {
  if (field.values.size() != graph.node_count()) {
    throw Error(ErrorKind::kConfig, "field does not match the structure (" +
                                        std::to_string(field.values.size()) + " values for " +
                                        std::to_string(graph.node_count()) + " nodes)");
  }
}

std::vector<double> region_values(const LatticeGraph& graph, const AccessibilityField& field,
                                  const MeasurementRegion& region) {
  std::vector<double> out;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (region.contains(graph.site(static_cast<NodeId>(i)))) {
      out.push_back(field.values[i]);
    }
  }
  return out;
}

}  // namespace

std::vector<Site> border_nodes(const LatticeGraph& graph, const AccessibilityField& field,
                               double threshold, BorderRule rule) {
  check_field(graph, field);
  std::vector<Site> out;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    if (is_border(field.values[i], threshold, rule)) {
      out.push_back(graph.site(static_cast<NodeId>(i)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t bins_for(double max_value, double bin_width) {
  return static_cast<std::size_t>(std::floor(max_value / bin_width)) + 1;
}

Histogram density_histogram(std::span<const double> values, double bin_width, std::size_t min_bins) {
  if (!(bin_width > 0.0)) {
    throw Error(ErrorKind::kConfig, "bin width must be positive");
  }
  if (values.empty()) {
    throw Error(ErrorKind::kNoData, "no samples to histogram");
  }
  const double max_value = *std::max_element(values.begin(), values.end());
  const std::size_t bins = std::max(min_bins, bins_for(max_value, bin_width));

  Histogram hist;
  hist.bin_width = bin_width;
  hist.sample_count = values.size();
  hist.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    hist.bin_edges[i] = static_cast<double>(i) * bin_width;
  }
  std::vector<std::size_t> counts(bins, 0);
  for (const double v : values) {
    if (v < 0.0) {
      throw Error(ErrorKind::kConfig, "negative value in accessibility histogram");
    }
    const auto bin = std::min(bins - 1, static_cast<std::size_t>(std::floor(v / bin_width)));
    ++counts[bin];
  }
  const double scale = 1.0 / (static_cast<double>(values.size()) * bin_width);
  hist.densities.reserve(bins);
  for (const std::size_t c : counts) {
    hist.densities.push_back(static_cast<double>(c) * scale);
  }
  return hist;
}

Histogram accessibility_histogram(const LatticeGraph& graph, const AccessibilityField& field,
                                  const MeasurementRegion& region, double bin_width,
                                  std::size_t min_bins) {
  check_field(graph, field);
  const auto values = region_values(graph, field, region);
  if (values.empty()) {
    throw Error(ErrorKind::kNoData, "no nodes inside the measurement region");
  }
  return density_histogram(values, bin_width, min_bins);
}

std::vector<double> EnsembleSummary::run_means() const {
  std::vector<double> out;
  out.reserve(runs.size());
  for (const auto& r : runs) {
    out.push_back(r.alpha_mean);
  }
  return out;
}

std::vector<double> EnsembleSummary::border_counts() const {
  std::vector<double> out;
  out.reserve(runs.size());
  for (const auto& r : runs) {
    out.push_back(static_cast<double>(r.border_count));
  }
  return out;
}

namespace {

struct CellResult {
  RunRecord record;
  std::vector<double> values;  // region accessibility values
};

void validate_options(const GrowthConfig& growth, const EnsembleOptions& options) {
  if (options.n_runs < 1) {
    throw Error(ErrorKind::kConfig, "ensemble needs at least one run");
  }
  if (options.h_list.empty()) {
    throw Error(ErrorKind::kConfig, "ensemble needs at least one hierarchy");
  }
  if (options.e_checkpoints.empty()) {
    throw Error(ErrorKind::kConfig, "ensemble needs at least one checkpoint");
  }
  if (!(options.bin_width > 0.0)) {
    throw Error(ErrorKind::kConfig, "bin width must be positive");
  }
  GrowthConfig probe = growth;
  probe.target_edges = *std::max_element(options.e_checkpoints.begin(), options.e_checkpoints.end());
  probe.validate();
  for (const auto e : options.e_checkpoints) {
    probe.validate_stage(e);
  }
}

}  // namespace

std::vector<EnsembleSummary> run_ensemble(const GrowthConfig& growth, const EnsembleOptions& options,
                                          const SnapshotObserver& observer) {
  validate_options(growth, options);
  const int h_max = options.h_max >= 0
                        ? options.h_max
                        : *std::max_element(options.h_list.begin(), options.h_list.end());
  const auto region = MeasurementRegion::for_lattice(growth.length, h_max);

  std::vector<std::size_t> checkpoints = options.e_checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());

  const auto n_runs = static_cast<std::size_t>(options.n_runs);
  const std::size_t n_h = options.h_list.size();
  const std::size_t cells = checkpoints.size() * n_h;
  // results[run][checkpoint * n_h + h_index]
  std::vector<std::vector<CellResult>> results(n_runs, std::vector<CellResult>(cells));

  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
  const unsigned run_workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n_runs));
  const unsigned field_jobs = std::max(1U, jobs / run_workers);

  std::mutex observer_mutex;
  auto run_one = [&](std::size_t run) {
    GrowthConfig config = growth;
    config.seed = derive_run_seed(growth.seed, run);
    config.target_edges = checkpoints.back();
    Grower grower(config);
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      grower.grow_to_stage(checkpoints[c]);
      const auto& graph = grower.graph();
      auto fields = accessibility_fields(graph.to_csr(), options.h_list,
                                         {options.normalization, field_jobs});
      for (auto& field : fields) {
        field.provenance = {graph.edge_count(), config.p_n, config.seed};
      }
      for (std::size_t k = 0; k < n_h; ++k) {
        auto& cell = results[run][c * n_h + k];
        cell.values = region_values(graph, fields[k], region);
        cell.record.run = run;
        cell.record.seed = config.seed;
        cell.record.region_nodes = cell.values.size();
        cell.record.alpha_mean = mean_std(cell.values).mean;
        cell.record.border_count = static_cast<std::size_t>(std::count_if(
            cell.values.begin(), cell.values.end(), [&](double a) {
              return is_border(a, options.border_threshold, options.border_rule);
            }));
      }
      if (observer) {
        const std::lock_guard lock(observer_mutex);
        observer(RunSnapshot{run, config.seed, checkpoints[c], graph, grower.trace(), fields});
      }
    }
  };

  std::atomic<std::size_t> next_run{0};
  std::exception_ptr failure;
  std::string failure_context;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t run = next_run++; run < n_runs; run = next_run++) {
      try {
        run_one(run);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
          failure_context = "run " + std::to_string(run) + " (seed " +
                            std::to_string(derive_run_seed(growth.seed, run)) + ", p_n " +
                            std::to_string(growth.p_n) + ")";
        }
        next_run = n_runs;
      }
    }
  };
  if (run_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < run_workers; ++j) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const Error& err) {
      throw Error(err.kind(), failure_context + ": " + err.what());
    }
  }

  std::vector<EnsembleSummary> summaries;
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    for (std::size_t k = 0; k < n_h; ++k) {
      const std::size_t cell = c * n_h + k;
      EnsembleSummary s;
      s.p_n = growth.p_n;
      s.e = checkpoints[c];
      s.h = options.h_list[k];
      s.n_runs = options.n_runs;
      s.master_seed = growth.seed;
      s.bin_width = options.bin_width;

      double max_value = 0.0;
      for (std::size_t run = 0; run < n_runs; ++run) {
        const auto& values = results[run][cell].values;
        max_value = std::max(max_value, *std::max_element(values.begin(), values.end()));
        s.runs.push_back(results[run][cell].record);
      }
      const std::size_t bins = bins_for(max_value, options.bin_width);
      std::vector<Histogram> per_run;
      per_run.reserve(n_runs);
      for (std::size_t run = 0; run < n_runs; ++run) {
        per_run.push_back(density_histogram(results[run][cell].values, options.bin_width, bins));
      }
      s.bin_edges = per_run.front().bin_edges;
      std::vector<double> column(n_runs);
      for (std::size_t b = 0; b < bins; ++b) {
        for (std::size_t run = 0; run < n_runs; ++run) {
          column[run] = per_run[run].densities[b];
        }
        const auto stats = mean_std(column);
        s.density_mean.push_back(stats.mean);
        s.density_std.push_back(stats.std);
      }
      if (options.histogram_mode == HistogramMode::kPooled) {
        std::vector<double> pooled;
        for (std::size_t run = 0; run < n_runs; ++run) {
          const auto& values = results[run][cell].values;
          pooled.insert(pooled.end(), values.begin(), values.end());
        }
        s.density_mean = density_histogram(pooled, options.bin_width, bins).densities;
      }

      s.alpha = mean_std(s.run_means());
      s.border = mean_std(s.border_counts());
      summaries.push_back(std::move(s));
    }
  }
  return summaries;
}

const EnsembleSummary& find_summary(std::span<const EnsembleSummary> summaries, std::size_t e, int h) {
  for (const auto& s : summaries) {
    if (s.e == e && s.h == h) {
      return s;
    }
  }
  throw Error(ErrorKind::kNoData,
              "no summary for e=" + std::to_string(e) + ", h=" + std::to_string(h));
}

std::vector<SweepPoint> sweep_pn(const GrowthConfig& growth, std::span<const double> pn_list,
                                 std::size_t e, const EnsembleOptions& options) {
  if (pn_list.empty()) {
    throw Error(ErrorKind::kConfig, "p_n list is empty");
  }
  for (const double p : pn_list) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::kConfig, "p_n value " + std::to_string(p) + " lies outside [0, 1]");
    }
  }
  EnsembleOptions stage_options = options;
  stage_options.e_checkpoints = {e};

  std::vector<SweepPoint> points;
  for (const double p : pn_list) {
    GrowthConfig config = growth;
    config.p_n = p;
    for (const auto& s : run_ensemble(config, stage_options)) {
      points.push_back({p, s.h, s.e, s.alpha.mean, s.alpha.std, s.n_runs});
    }
  }
  return points;
}

std::vector<double> default_pn_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 19; ++k) {
    grid.push_back(k / 20.0);
  }
  return grid;
}

}  // namespace radial
