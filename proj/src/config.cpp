#include "radial/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "radial/error.hpp"
#include "radial/io.hpp"

namespace radial {

std::vector<std::size_t> structure_stages() { return {500, 1000, 1500, 2000, 2500}; }
std::vector<std::size_t> density_stages() { return {500, 1000, 1500, 2500}; }

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorKind::kConfig,
              "invalid value '" + std::string(value) + "' for key '" + std::string(key) + "'");
}

template <typename T>
T number(std::string_view key, std::string_view value) {
  value = trim(value);
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    bad_value(key, value);
  }
  return out;
}

template <typename T>
std::vector<T> number_list(std::string_view key, std::string_view value) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const auto item = value.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
    out.push_back(number<T>(key, item));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

bool boolean(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") {
    return true;
  }
  if (value == "false" || value == "0") {
    return false;
  }
  bad_value(key, value);
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    if constexpr (std::is_floating_point_v<T>) {
      out += format_double(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (key == "L") {
    length = number<int>(key, value);
  } else if (key == "H") {
    height = number<int>(key, value);
  } else if (key == "p_n") {
    p_n = number<double>(key, value);
  } else if (key == "p_n_list") {
    p_n_list = number_list<double>(key, value);
  } else if (key == "e") {
    e = number<std::size_t>(key, value);
  } else if (key == "e_checkpoints") {
    e_checkpoints = number_list<std::size_t>(key, value);
  } else if (key == "h_list") {
    h_list = number_list<int>(key, value);
  } else if (key == "h_max") {
    h_max = number<int>(key, value);
  } else if (key == "sides") {
    if (value == "both") {
      sides = Sides::kBoth;
    } else if (value == "above") {
      sides = Sides::kAbove;
    } else {
      bad_value(key, value);
    }
  } else if (key == "sampler") {
    if (value == "class_first") {
      sampler = Sampler::kClassFirst;
    } else if (value == "per_edge") {
      sampler = Sampler::kPerEdge;
    } else {
      bad_value(key, value);
    }
  } else if (key == "runs") {
    runs = number<int>(key, value);
  } else if (key == "seed") {
    seed = number<std::uint64_t>(key, value);
  } else if (key == "count_axis_edges") {
    count_axis_edges = boolean(key, value);
  } else if (key == "threshold") {
    threshold = number<double>(key, value);
  } else if (key == "border_rule") {
    if (value == "le") {
      border_rule = BorderRule::kLessEqual;
    } else if (value == "lt") {
      border_rule = BorderRule::kLess;
    } else {
      bad_value(key, value);
    }
  } else if (key == "bin_width") {
    bin_width = number<double>(key, value);
  } else if (key == "normalization") {
    if (value == "ring") {
      normalization = Normalization::kRing;
    } else if (value == "raw") {
      normalization = Normalization::kRaw;
    } else {
      bad_value(key, value);
    }
  } else if (key == "histogram_mode") {
    if (value == "per_run") {
      histogram_mode = HistogramMode::kPerRun;
    } else if (value == "pooled") {
      histogram_mode = HistogramMode::kPooled;
    } else {
      bad_value(key, value);
    }
  } else if (key == "jobs") {
    jobs = number<unsigned>(key, value);
  } else if (key == "save_runs") {
    save_runs = number<int>(key, value);
  } else {
    throw Error(ErrorKind::kConfig, "unknown config key '" + std::string(key) + "'");
  }
}

GrowthConfig RunConfig::growth() const {
  GrowthConfig g;
  g.length = length;
  g.height = height;
  g.p_n = p_n;
  g.seed = seed;
  g.sides = sides;
  g.sampler = sampler;
  g.count_axis_edges = count_axis_edges;
  if (e) {
    g.target_edges = *e;
  } else if (!e_checkpoints.empty()) {
    g.target_edges = *std::max_element(e_checkpoints.begin(), e_checkpoints.end());
  }
  return g;
}

int RunConfig::effective_h_max() const {
  if (h_max) {
    return *h_max;
  }
  return h_list.empty() ? 0 : *std::max_element(h_list.begin(), h_list.end());
}

EnsembleOptions RunConfig::ensemble_options() const {
  EnsembleOptions o;
  o.n_runs = runs;
  o.h_list = h_list;
  o.e_checkpoints = e_checkpoints.empty() ? density_stages() : e_checkpoints;
  o.h_max = effective_h_max();
  o.bin_width = bin_width;
  o.border_threshold = threshold;
  o.border_rule = border_rule;
  o.normalization = normalization;
  o.histogram_mode = histogram_mode;
  o.jobs = jobs;
  return o;
}

std::string RunConfig::to_text() const {
  std::ostringstream out;
  out << "L=" << length << '\n'
      << "H=" << height << '\n'
      << "p_n=" << format_double(p_n) << '\n';
  if (!p_n_list.empty()) {
    out << "p_n_list=" << join(p_n_list) << '\n';
  }
  if (e) {
    out << "e=" << *e << '\n';
  }
  if (!e_checkpoints.empty()) {
    out << "e_checkpoints=" << join(e_checkpoints) << '\n';
  }
  out << "h_list=" << join(h_list) << '\n';
  if (h_max) {
    out << "h_max=" << *h_max << '\n';
  }
  out << "sides=" << to_string(sides) << '\n'
      << "sampler=" << (sampler == Sampler::kClassFirst ? "class_first" : "per_edge") << '\n'
      << "runs=" << runs << '\n'
      << "seed=" << seed << '\n'
      << "count_axis_edges=" << (count_axis_edges ? "true" : "false") << '\n'
      << "threshold=" << format_double(threshold) << '\n'
      << "border_rule=" << (border_rule == BorderRule::kLessEqual ? "le" : "lt") << '\n'
      << "bin_width=" << format_double(bin_width) << '\n'
      << "normalization=" << to_string(normalization) << '\n'
      << "histogram_mode=" << (histogram_mode == HistogramMode::kPerRun ? "per_run" : "pooled")
      << '\n'
      << "jobs=" << jobs << '\n'
      << "save_runs=" << save_runs << '\n';
  return out.str();
}

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) {
      continue;
    }
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kConfig,
                  "line " + std::to_string(line_no) + ": expected key=value, got '" + line + "'");
    }
    try {
      config.set(trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const Error& err) {
      throw Error(ErrorKind::kConfig, "line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open config file '" + path + "'");
  }
  return parse_config(in);
}

}  // namespace radial
