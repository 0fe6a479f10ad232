#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "radial/config.hpp"
#include "radial/error.hpp"
#include "radial/io.hpp"

using namespace radial;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected radial::Error");
  return ErrorKind::kIo;
}

std::string parse_message(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
    return e.what();
  }
  FAIL("expected parse error");
  return {};
}

}  // namespace

TEST_SUITE("io_config") {

TEST_CASE("edge list round trip is lossless") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    GrowthConfig cfg;
    cfg.seed = rng();
    cfg.p_n = static_cast<double>(trial) / 9.0;
    cfg.target_edges = 100 + 150 * static_cast<std::size_t>(trial);
    const auto g = grow_to(cfg).graph;

    std::ostringstream out;
    write_edge_list(out, g, cfg.seed, cfg.p_n);
    std::istringstream in(out.str());
    const auto back = read_edge_list(in);
    CHECK(identical(back.graph, g));
    CHECK(back.seed == cfg.seed);
    CHECK(back.p_n == cfg.p_n);

    std::ostringstream again;
    write_edge_list(again, back.graph, back.seed, back.p_n);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("edge list header") {
  LatticeGraph g(4, 3);
  g.add_edge({0, 1}, {1, 1});
  g.add_edge({1, 1}, {1, 2});
  std::ostringstream out;
  write_edge_list(out, g, 9, 0.1);
  CHECK(out.str() == "# L=4 H=3 y_axis=1 e=2 seed=9 p_n=0.1\n0 1 1 1\n1 1 1 2\n");
}

TEST_CASE("edge list parse errors carry line numbers") {
  CHECK(parse_message("").find("line 1") != std::string::npos);
  CHECK(parse_message("0 1 1 1\n").find("header") != std::string::npos);
  const auto bad_row = parse_message("# L=4 H=3 y_axis=1 e=2 seed=1 p_n=0.5\n0 1 1 1\n1 1 x 2\n");
  CHECK(bad_row.find("line 3") != std::string::npos);
  const auto diagonal = parse_message("# L=4 H=3 y_axis=1 e=1 seed=1 p_n=0.5\n0 1 1 2\n");
  CHECK(diagonal.find("line 2") != std::string::npos);
  const auto count = parse_message("# L=4 H=3 y_axis=1 e=3 seed=1 p_n=0.5\n0 1 1 1\n");
  CHECK(count.find("e=3") != std::string::npos);
  CHECK(parse_message("# L=4 H=3 y_axis=1 e=0 seed=1 p_n=0.5\n").find("no edges") !=
        std::string::npos);
  CHECK(parse_message("# L=4 H=3 y_axis=2 e=1 seed=1 p_n=0.5\n0 1 1 1\n").find("y_axis") !=
        std::string::npos);
}

TEST_CASE("doubles print in shortest round-trip form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.15) == "0.15");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv schemas") {
  LatticeGraph g(3, 1);
  g.add_edge({0, 0}, {1, 0});
  g.add_edge({1, 0}, {2, 0});
  const auto field = accessibility_field(g.to_csr(), 1);

  std::ostringstream f;
  write_field_csv(f, g, field);
  CHECK(f.str() == "x,y,h,alpha\n0,0,1,1\n1,0,1,2\n2,0,1,1\n");

  std::ostringstream b;
  write_border_csv(b, g, field, 1.0, BorderRule::kLessEqual);
  CHECK(b.str() == "x,y,is_border\n0,0,1\n1,0,0\n2,0,1\n");

  std::ostringstream t;
  const GrowthStep step{1, {{1, 0}, {1, 1}}, Orientation::kNormal, true};
  write_trace_csv(t, std::span(&step, 1));
  CHECK(t.str() == "step,x1,y1,x2,y2,orientation,fallback\n1,1,0,1,1,normal,1\n");

  std::ostringstream h;
  write_histogram_header(h);
  EnsembleSummary s;
  s.p_n = 0.5;
  s.e = 1500;
  s.h = 3;
  s.bin_edges = {0, 1, 2};
  s.density_mean = {0.25, 0.75};
  s.density_std = {0, 0.125};
  write_histogram_rows(h, s);
  CHECK(h.str() ==
        "p_n,e,h,bin_lo,bin_hi,density_mean,density_std\n"
        "0.5,1500,3,0,1,0.25,0\n"
        "0.5,1500,3,1,2,0.75,0.125\n");

  std::ostringstream sw;
  write_sweep_header(sw);
  write_sweep_row(sw, {0.05, 10, 1500, 7.5, 0.25, 30});
  CHECK(sw.str() == "p_n,h,e,alpha_mean,alpha_std,n_runs\n0.05,10,1500,7.5,0.25,30\n");
}

TEST_CASE("config parsing") {
  std::istringstream in(
      "# reference defaults\n"
      "L=60\nH = 50\np_n=0.5\ne_checkpoints=500,1000,1500,2500\n"
      "h_list=3,5,10\nh_max=10\nsides=above\nruns=30\nseed=12345\n"
      "normalization=raw  # inline comment\nborder_rule=lt\nsampler=class_first\n");
  const auto c = parse_config(in);
  CHECK(c.length == 60);
  CHECK(c.height == 50);
  CHECK(c.e_checkpoints == std::vector<std::size_t>{500, 1000, 1500, 2500});
  CHECK(c.h_list == std::vector<int>{3, 5, 10});
  CHECK(c.effective_h_max() == 10);
  CHECK(c.sides == Sides::kAbove);
  CHECK(c.seed == 12345);
  CHECK(c.normalization == Normalization::kRaw);
  CHECK(c.border_rule == BorderRule::kLess);
  CHECK(c.growth().target_edges == 2500);
  CHECK(c.growth().sampler == Sampler::kClassFirst);
  CHECK(RunConfig{}.growth().sampler == Sampler::kPerEdge);

  std::istringstream again(c.to_text());
  CHECK(parse_config(again).to_text() == c.to_text());
}

TEST_CASE("config errors") {
  RunConfig c;
  CHECK(kind_of([&] { c.set("colour", "red"); }) == ErrorKind::kConfig);
  CHECK(kind_of([&] { c.set("L", "sixty"); }) == ErrorKind::kConfig);
  CHECK(kind_of([&] { c.set("h_list", "3,,5"); }) == ErrorKind::kConfig);
  CHECK(kind_of([&] { c.set("sides", "left"); }) == ErrorKind::kConfig);
  CHECK(kind_of([&] { c.set("sampler", "node_first"); }) == ErrorKind::kConfig);
  std::istringstream in("L=60\njunk\n");
  try {
    parse_config(in);
    FAIL("expected config error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(kind_of([] { load_config("/nonexistent/radial.cfg"); }) == ErrorKind::kIo);
}

TEST_CASE("ensemble defaults follow the density stages") {
  RunConfig c;
  const auto o = c.ensemble_options();
  CHECK(o.e_checkpoints == density_stages());
  CHECK(o.h_max == 10);
  CHECK(o.n_runs == 30);
  CHECK(o.border_threshold == 6.0);
}

}  // TEST_SUITE
