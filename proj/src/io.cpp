#include "radial/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "radial/error.hpp"

namespace radial {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return {buffer, result.ptr};
}

void write_edge_list(std::ostream& out, const LatticeGraph& graph, std::uint64_t seed, double p_n) {
  out << "# L=" << graph.length() << " H=" << graph.height() << " y_axis=" << graph.axis_row()
      << " e=" << graph.edge_count() << " seed=" << seed << " p_n=" << format_double(p_n) << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.a.x << ' ' << e.a.y << ' ' << e.b.x << ' ' << e.b.y << '\n';
  }
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    parse_error(line, "bad value for " + std::string(name) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

StructureFile read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    parse_error(1, "empty file, expected a '# L=... H=...' header");
  }
  ++line_no;
  if (line.rfind("# ", 0) != 0) {
    parse_error(line_no, "missing header line");
  }

  int length = -1;
  int height = -1;
  int axis = -1;
  std::size_t declared_edges = 0;
  bool have_edges = false;
  std::uint64_t seed = 0;
  double p_n = 0.0;
  std::istringstream header(line.substr(2));
  std::string token;
  while (header >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      parse_error(line_no, "malformed header field '" + token + "'");
    }
    const std::string key = token.substr(0, eq);
    const std::string_view value = std::string_view(token).substr(eq + 1);
    if (key == "L") {
      length = parse_number<int>(value, line_no, key);
    } else if (key == "H") {
      height = parse_number<int>(value, line_no, key);
    } else if (key == "y_axis") {
      axis = parse_number<int>(value, line_no, key);
    } else if (key == "e") {
      declared_edges = parse_number<std::size_t>(value, line_no, key);
      have_edges = true;
    } else if (key == "seed") {
      seed = parse_number<std::uint64_t>(value, line_no, key);
    } else if (key == "p_n") {
      p_n = parse_number<double>(value, line_no, key);
    } else {
      parse_error(line_no, "unknown header field '" + key + "'");
    }
  }
  if (length < 1 || height < 1 || !have_edges) {
    parse_error(line_no, "header must declare positive L, H and e");
  }
  if (axis != height / 2) {
    parse_error(line_no, "y_axis must equal floor(H/2) = " + std::to_string(height / 2));
  }

  StructureFile file{LatticeGraph(length, height), seed, p_n};
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::istringstream fields(line);
    int x1 = 0;
    int y1 = 0;
    int x2 = 0;
    int y2 = 0;
    std::string extra;
    if (!(fields >> x1 >> y1 >> x2 >> y2) || (fields >> extra)) {
      parse_error(line_no, "expected 'x1 y1 x2 y2', got '" + line + "'");
    }
    try {
      file.graph.add_edge({x1, y1}, {x2, y2});
    } catch (const Error& err) {
      parse_error(line_no, err.what());
    }
  }
  if (file.graph.edge_count() == 0) {
    parse_error(line_no, "structure has no edges");
  }
  if (file.graph.edge_count() != declared_edges) {
    parse_error(line_no, "header declares e=" + std::to_string(declared_edges) + " but file has " +
                             std::to_string(file.graph.edge_count()) + " edges");
  }
  return file;
}

void write_trace_csv(std::ostream& out, std::span<const GrowthStep> trace) {
  out << "step,x1,y1,x2,y2,orientation,fallback\n";
  for (const auto& s : trace) {
    out << s.step << ',' << s.edge.a.x << ',' << s.edge.a.y << ',' << s.edge.b.x << ','
        << s.edge.b.y << ',' << to_string(s.orientation) << ',' << (s.fallback ? 1 : 0) << '\n';
  }
}

void write_field_csv(std::ostream& out, const LatticeGraph& graph, const AccessibilityField& field) {
  out << "x,y,h,alpha\n";
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    const Site s = graph.site(static_cast<NodeId>(i));
    out << s.x << ',' << s.y << ',' << field.h << ',' << format_double(field.values[i]) << '\n';
  }
}

void write_border_csv(std::ostream& out, const LatticeGraph& graph, const AccessibilityField& field,
                      double threshold, BorderRule rule) {
  const auto border = border_nodes(graph, field, threshold, rule);
  std::vector<std::uint8_t> flag(graph.node_count(), 0);
  for (const Site s : border) {
    flag[static_cast<std::size_t>(*graph.index_of(s))] = 1;
  }
  out << "x,y,is_border\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const Site s = graph.site(static_cast<NodeId>(i));
    out << s.x << ',' << s.y << ',' << static_cast<int>(flag[i]) << '\n';
  }
}

void write_histogram_header(std::ostream& out) {
  out << "p_n,e,h,bin_lo,bin_hi,density_mean,density_std\n";
}

void write_histogram_rows(std::ostream& out, const EnsembleSummary& summary) {
  for (std::size_t b = 0; b < summary.density_mean.size(); ++b) {
    out << format_double(summary.p_n) << ',' << summary.e << ',' << summary.h << ','
        << format_double(summary.bin_edges[b]) << ',' << format_double(summary.bin_edges[b + 1])
        << ',' << format_double(summary.density_mean[b]) << ','
        << format_double(summary.density_std[b]) << '\n';
  }
}

void write_sweep_header(std::ostream& out) { out << "p_n,h,e,alpha_mean,alpha_std,n_runs\n"; }

void write_sweep_row(std::ostream& out, const SweepPoint& point) {
  out << format_double(point.p_n) << ',' << point.h << ',' << point.e << ','
      << format_double(point.alpha_mean) << ',' << format_double(point.alpha_std) << ','
      << point.n_runs << '\n';
}

void write_runs_header(std::ostream& out) {
  out << "p_n,e,h,run,seed,alpha_mean,border_count,region_nodes\n";
}

void write_runs_rows(std::ostream& out, const EnsembleSummary& summary) {
  for (const auto& r : summary.runs) {
    out << format_double(summary.p_n) << ',' << summary.e << ',' << summary.h << ',' << r.run << ','
        << r.seed << ',' << format_double(r.alpha_mean) << ',' << r.border_count << ','
        << r.region_nodes << '\n';
  }
}

}  // namespace radial
