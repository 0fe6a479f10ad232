#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "radial/accessibility.hpp"
#include "radial/analysis.hpp"
#include "radial/growth.hpp"
#include "radial/lattice.hpp"

namespace radial {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Output layout version recorded in every manifest.
inline constexpr int kSchemaVersion = 1;

struct StructureFile {
  LatticeGraph graph;
  std::uint64_t seed = 0;
  double p_n = 0.0;
};

/// Edge-list text: a header line
///   # L=<L> H=<H> y_axis=<y> e=<edges> seed=<seed> p_n=<p_n>
/// followed by one `x1 y1 x2 y2` line per edge in insertion order.
void write_edge_list(std::ostream& out, const LatticeGraph& graph, std::uint64_t seed, double p_n);

/// Inverse of write_edge_list. Throws kParse with the offending line number.
StructureFile read_edge_list(std::istream& in);

/// `step,x1,y1,x2,y2,orientation,fallback`
void write_trace_csv(std::ostream& out, std::span<const GrowthStep> trace);

/// `x,y,h,alpha`
void write_field_csv(std::ostream& out, const LatticeGraph& graph, const AccessibilityField& field);

/// `x,y,is_border`, one row per node.
void write_border_csv(std::ostream& out, const LatticeGraph& graph, const AccessibilityField& field,
                      double threshold, BorderRule rule);

/// Header of the ensemble histogram CSV:
/// `p_n,e,h,bin_lo,bin_hi,density_mean,density_std`
void write_histogram_header(std::ostream& out);
void write_histogram_rows(std::ostream& out, const EnsembleSummary& summary);

/// `p_n,h,e,alpha_mean,alpha_std,n_runs`
void write_sweep_header(std::ostream& out);
void write_sweep_row(std::ostream& out, const SweepPoint& point);

/// `p_n,e,h,run,seed,alpha_mean,border_count,region_nodes`
void write_runs_header(std::ostream& out);
void write_runs_rows(std::ostream& out, const EnsembleSummary& summary);

}  // namespace radial
