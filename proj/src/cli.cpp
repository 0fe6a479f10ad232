#include "radial/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radial/accessibility.hpp"
#include "radial/analysis.hpp"
#include "radial/config.hpp"
#include "radial/error.hpp"
#include "radial/growth.hpp"
#include "radial/io.hpp"

namespace radial {

namespace fs = std::filesystem;

namespace {

constexpr const char* kOutputRootEnv = "RADIAL_OUTPUT_ROOT";

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  std::optional<unsigned> jobs;
  std::vector<std::string> overrides;
  std::string out;
};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

RunConfig resolve_config(const CommonFlags& flags) {
  RunConfig config;
  if (!flags.config_path.empty()) {
    if (!fs::exists(flags.config_path)) {
      throw Error(ErrorKind::kConfig, "config file not found: " + flags.config_path);
    }
    config = load_config(flags.config_path);
  }
  for (const auto& item : flags.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kConfig, "--set expects key=value, got '" + item + "'");
    }
    config.set(item.substr(0, eq), item.substr(eq + 1));
  }
  if (flags.seed) {
    config.seed = *flags.seed;
  }
  if (flags.runs) {
    config.runs = *flags.runs;
  }
  if (flags.jobs) {
    config.jobs = *flags.jobs;
  }
  return config;
}

fs::path output_dir(const CommonFlags& flags, const std::string& command) {
  if (!flags.out.empty()) {
    return flags.out;
  }
  const char* root = std::getenv(kOutputRootEnv);
  return fs::path(root != nullptr && *root != '\0' ? root : "radial-out") / command;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot write " + path.string());
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = open_output(path);
  out << text;
}

class Manifest {
 public:
  Manifest(std::string command, const RunConfig& config) : started_(utc_now()) {
    doc_["tool"] = "radial";
    doc_["tool_version"] = kToolVersion;
    doc_["schema_version"] = kSchemaVersion;
    doc_["command"] = std::move(command);
    doc_["rng"] = {{"generator", std::string(RandomStream::kGeneratorName)},
                   {"draws", std::string(RandomStream::kDrawScheme)},
                   {"run_seed_derivation", "splitmix64(splitmix64(master) ^ splitmix64(run + 1))"}};
    doc_["master_seed"] = config.seed;
    doc_["config"] = config.to_text();
    doc_["files"] = nlohmann::json::array();
  }

  void add_file(const fs::path& dir, const fs::path& file) {
    doc_["files"].push_back(fs::relative(file, dir).generic_string());
  }

  void set(const std::string& key, nlohmann::json value) { doc_[key] = std::move(value); }

  void write(const fs::path& dir) {
    doc_["started_utc"] = started_;
    doc_["finished_utc"] = utc_now();
    write_text(dir / "manifest.json", doc_.dump(2) + "\n");
  }

 private:
  std::string started_;
  nlohmann::json doc_;
};

std::string pn_tag(double p_n) { return "pn" + format_double(p_n); }

std::vector<std::size_t> grow_checkpoints(const RunConfig& config) {
  if (!config.e_checkpoints.empty()) {
    auto stages = config.e_checkpoints;
    std::sort(stages.begin(), stages.end());
    stages.erase(std::unique(stages.begin(), stages.end()), stages.end());
    return stages;
  }
  const std::size_t target = config.e.value_or(2500);
  std::vector<std::size_t> stages;
  for (const auto s : structure_stages()) {
    if (s < target) {
      stages.push_back(s);
    }
  }
  stages.push_back(target);
  return stages;
}

int cmd_grow(const CommonFlags& flags, bool write_trace, std::ostream& out) {
  const RunConfig config = resolve_config(flags);
  const auto stages = grow_checkpoints(config);
  GrowthConfig growth = config.growth();
  growth.target_edges = stages.back();
  growth.validate();
  for (const auto s : stages) {
    growth.validate_stage(s);
  }

  const fs::path dir = output_dir(flags, "grow");
  fs::create_directories(dir);
  Manifest manifest("grow", config);

  Grower grower(growth);
  for (const auto stage : stages) {
    grower.grow_to_stage(stage);
    const fs::path file = dir / ("structure_e" + std::to_string(stage) + ".edges");
    auto stream = open_output(file);
    write_edge_list(stream, grower.graph(), growth.seed, growth.p_n);
    manifest.add_file(dir, file);
  }
  if (write_trace) {
    const fs::path file = dir / "trace.csv";
    auto stream = open_output(file);
    write_trace_csv(stream, grower.trace());
    manifest.add_file(dir, file);
  }
  write_text(dir / "config.txt", config.to_text());
  manifest.write(dir);
  out << "grew " << stages.size() << " checkpoint(s) into " << dir.string() << '\n';
  return kExitOk;
}

int cmd_measure(const std::string& structure_path, const CommonFlags& flags, bool borders,
                std::ostream& out) {
  const RunConfig config = resolve_config(flags);
  std::ifstream in(structure_path);
  if (!in) {
    throw Error(ErrorKind::kParse, "cannot open structure file '" + structure_path + "'");
  }
  const auto structure = read_edge_list(in);
  const auto& graph = structure.graph;

  const fs::path dir = output_dir(flags, "measure");
  fs::create_directories(dir);
  Manifest manifest("measure", config);
  manifest.set("structure", structure_path);

  auto fields = accessibility_fields(graph.to_csr(), config.h_list,
                                     {config.normalization, config.jobs});
  const std::string stem = fs::path(structure_path).stem().string();
  for (auto& field : fields) {
    field.provenance = {graph.edge_count(), structure.p_n, structure.seed};
    const fs::path file = dir / (stem + "_h" + std::to_string(field.h) + ".csv");
    auto stream = open_output(file);
    write_field_csv(stream, graph, field);
    manifest.add_file(dir, file);
    if (borders) {
      const fs::path border_file = dir / (stem + "_h" + std::to_string(field.h) + "_borders.csv");
      auto border_stream = open_output(border_file);
      write_border_csv(border_stream, graph, field, config.threshold, config.border_rule);
      manifest.add_file(dir, border_file);
    }
  }
  manifest.write(dir);
  out << "measured " << fields.size() << " hierarchy level(s) into " << dir.string() << '\n';
  return kExitOk;
}

int cmd_ensemble(const CommonFlags& flags, std::ostream& out) {
  const RunConfig config = resolve_config(flags);
  const auto options = config.ensemble_options();
  const std::vector<double> pn_list = config.p_n_list.empty() ? std::vector<double>{config.p_n}
                                                             : config.p_n_list;

  const fs::path dir = output_dir(flags, "ensemble");
  fs::create_directories(dir);
  Manifest manifest("ensemble", config);
  if (config.save_runs > 0) {
    fs::create_directories(dir / "structures");
    fs::create_directories(dir / "fields");
    fs::create_directories(dir / "borders");
  }

  std::ostringstream histograms;
  std::ostringstream summary;
  std::ostringstream runs;
  write_histogram_header(histograms);
  write_sweep_header(summary);
  write_runs_header(runs);
  std::vector<fs::path> saved;

  for (const double p_n : pn_list) {
    GrowthConfig growth = config.growth();
    growth.p_n = p_n;
    const auto observer = [&](const RunSnapshot& snap) {
      if (snap.run >= static_cast<std::size_t>(config.save_runs)) {
        return;
      }
      const std::string base = pn_tag(p_n) + "_run" + std::to_string(snap.run) + "_e" +
                               std::to_string(snap.e);
      const fs::path edges = dir / "structures" / (base + ".edges");
      auto stream = open_output(edges);
      write_edge_list(stream, snap.graph, snap.seed, p_n);
      saved.push_back(edges);
      for (const auto& field : snap.fields) {
        const std::string name = base + "_h" + std::to_string(field.h) + ".csv";
        auto field_stream = open_output(dir / "fields" / name);
        write_field_csv(field_stream, snap.graph, field);
        auto border_stream = open_output(dir / "borders" / name);
        write_border_csv(border_stream, snap.graph, field, config.threshold, config.border_rule);
        saved.push_back(dir / "fields" / name);
        saved.push_back(dir / "borders" / name);
      }
    };
    const auto summaries = run_ensemble(growth, options, observer);
    for (const auto& s : summaries) {
      write_histogram_rows(histograms, s);
      write_sweep_row(summary, {s.p_n, s.h, s.e, s.alpha.mean, s.alpha.std, s.n_runs});
      write_runs_rows(runs, s);
    }
    out << "p_n=" << format_double(p_n) << ": " << options.n_runs << " run(s) done\n";
  }

  write_text(dir / "histograms.csv", histograms.str());
  write_text(dir / "summary.csv", summary.str());
  write_text(dir / "runs.csv", runs.str());
  write_text(dir / "config.txt", config.to_text());
  for (const char* name : {"histograms.csv", "summary.csv", "runs.csv"}) {
    manifest.add_file(dir, dir / name);
  }
  std::sort(saved.begin(), saved.end());
  for (const auto& file : saved) {
    manifest.add_file(dir, file);
  }
  manifest.write(dir);
  return kExitOk;
}

int cmd_sweep(const CommonFlags& flags, std::ostream& out) {
  const RunConfig config = resolve_config(flags);
  const auto pn_list = config.p_n_list.empty() ? default_pn_grid() : config.p_n_list;
  const std::size_t e = config.e.value_or(1500);
  auto options = config.ensemble_options();

  const fs::path dir = output_dir(flags, "sweep");
  fs::create_directories(dir);
  Manifest manifest("sweep", config);

  const auto points = sweep_pn(config.growth(), pn_list, e, options);
  std::ostringstream csv;
  write_sweep_header(csv);
  for (const auto& p : points) {
    write_sweep_row(csv, p);
  }
  write_text(dir / "sweep.csv", csv.str());
  write_text(dir / "config.txt", config.to_text());
  manifest.add_file(dir, dir / "sweep.csv");
  manifest.write(dir);
  out << "swept " << pn_list.size() << " p_n value(s) x " << config.h_list.size()
      << " hierarchy level(s) into " << dir.string() << '\n';
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_runs) {
  cmd->add_option("-c,--config", flags.config_path, "key=value config file");
  cmd->add_option("--seed", flags.seed, "master seed");
  cmd->add_option("-j,--jobs", flags.jobs, "worker threads (0 = all cores)");
  cmd->add_option("--set", flags.overrides, "override a config key (key=value), repeatable");
  cmd->add_option("-o,--out", flags.out, "output directory");
  if (with_runs) {
    cmd->add_option("--runs", flags.runs, "realizations per configuration");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial lattice growth and node accessibility toolkit", "radial"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonFlags flags;
  bool write_trace = true;
  bool borders = false;
  std::string structure_path;
  std::string h_text;

  auto* grow = app.add_subcommand("grow", "grow one structure and write checkpoint edge lists");
  add_common(grow, flags, false);
  grow->add_flag("!--no-trace", write_trace, "skip the growth trace CSV");

  auto* measure = app.add_subcommand("measure", "accessibility fields of an edge-list structure");
  measure->add_option("structure", structure_path, "edge-list file")->required();
  measure->add_option("--h", h_text, "comma-separated hierarchy levels");
  measure->add_flag("--borders", borders, "also write border CSVs");
  add_common(measure, flags, false);

  auto* ensemble = app.add_subcommand("ensemble", "seeded ensemble: histograms and run statistics");
  add_common(ensemble, flags, true);

  auto* sweep = app.add_subcommand("sweep", "mean accessibility against p_n");
  add_common(sweep, flags, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "radial: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!h_text.empty()) {
      flags.overrides.push_back("h_list=" + h_text);
    }
    if (*grow) {
      return cmd_grow(flags, write_trace, out);
    }
    if (*measure) {
      return cmd_measure(structure_path, flags, borders, out);
    }
    if (*ensemble) {
      return cmd_ensemble(flags, out);
    }
    return cmd_sweep(flags, out);
  } catch (const Error& e) {
    err << "radial: " << to_string(e.kind()) << " error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kConfig:
      case ErrorKind::kParse:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    err << "radial: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace radial
