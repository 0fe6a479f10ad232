#include <doctest.h>

#include <random>
#include <set>

#include "radial/error.hpp"
#include "radial/growth.hpp"
#include "radial/lattice.hpp"

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

LatticeGraph full_block(int cols, int rows) {
  LatticeGraph g(cols, rows);
  // Row-major sweep keeps every new edge attached to the structure.
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      if (x + 1 < cols) g.add_edge({x, y}, {x + 1, y});
      if (y + 1 < rows) g.add_edge({x, y}, {x, y + 1});
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("edge orientation of lattice pairs") {
  CHECK(edge_orientation({3, 5}, {4, 5}) == Orientation::kParallel);
  CHECK(edge_orientation({3, 5}, {3, 6}) == Orientation::kNormal);
  CHECK(kind_of([] { edge_orientation({3, 5}, {4, 6}); }) == ErrorKind::kInvalidEdge);
  CHECK(kind_of([] { edge_orientation({3, 5}, {3, 5}); }) == ErrorKind::kInvalidEdge);
  CHECK(kind_of([] { edge_orientation({3, 5}, {5, 5}); }) == ErrorKind::kInvalidEdge);
}

TEST_CASE("edge orientation is symmetric") {
  for (int x = 1; x < 5; ++x) {
    for (int y = 1; y < 5; ++y) {
      const Site s{x, y};
      for (const Site t : {Site{x + 1, y}, Site{x - 1, y}, Site{x, y + 1}, Site{x, y - 1}}) {
        CHECK(edge_orientation(s, t) == edge_orientation(t, s));
      }
    }
  }
}

TEST_CASE("add_edge bookkeeping and errors") {
  LatticeGraph g(60, 50);
  g.add_edge({0, 25}, {1, 25});
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);

  CHECK(kind_of([&] { g.add_edge({0, 25}, {1, 25}); }) == ErrorKind::kDuplicateEdge);
  CHECK(kind_of([&] { g.add_edge({1, 25}, {0, 25}); }) == ErrorKind::kDuplicateEdge);
  CHECK(kind_of([&] { g.add_edge({0, 25}, {-1, 25}); }) == ErrorKind::kOutOfBounds);
  CHECK(kind_of([&] { g.add_edge({0, 25}, {1, 26}); }) == ErrorKind::kInvalidEdge);
  CHECK(kind_of([&] { g.add_edge({10, 10}, {11, 10}); }) == ErrorKind::kDetachedEdge);
  CHECK(g.edge_count() == 1);

  g.add_edge({0, 25}, {0, 26});
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge({0, 26}, {0, 25}));
  CHECK(g.degree(*g.index_of({0, 25})) == 2);
}

TEST_CASE("sides=above rejects rows below the axis") {
  LatticeGraph g(5, 6, Sides::kAbove);
  CHECK(g.axis_row() == 3);
  g.add_edge({0, 3}, {1, 3});
  CHECK(kind_of([&] { g.add_edge({0, 3}, {0, 2}); }) == ErrorKind::kOutOfBounds);
  g.add_edge({0, 3}, {0, 4});
  CHECK(g.edge_count() == 2);
}

TEST_CASE("candidate edges around an axis-only graph") {
  GrowthConfig cfg;
  cfg.length = 3;
  cfg.height = 3;
  cfg.target_edges = 2;
  const auto g = initialize_axis(cfg);
  REQUIRE(g.axis_row() == 1);

  CHECK(candidate_edges(g, Orientation::kParallel).empty());

  // One edge up and one down per axis node, lower endpoint order.
  const auto normal = candidate_edges(g, Orientation::kNormal);
  const std::vector<Edge> expected{
      {{0, 0}, {0, 1}}, {{0, 1}, {0, 2}}, {{1, 0}, {1, 1}},
      {{1, 1}, {1, 2}}, {{2, 0}, {2, 1}}, {{2, 1}, {2, 2}},
  };
  CHECK(normal == expected);
}

TEST_CASE("saturated lattice has no candidates") {
  const auto g = full_block(4, 3);
  CHECK(g.edge_count() == g.edge_capacity());
  CHECK(candidate_edges(g, Orientation::kParallel).empty());
  CHECK(candidate_edges(g, Orientation::kNormal).empty());
}

TEST_CASE("edge capacity formula") {
  CHECK(LatticeGraph(60, 50).edge_capacity() == 2 * 60 * 50 - 60 - 50);
  // sides=above keeps rows 25..49.
  CHECK(LatticeGraph(60, 50, Sides::kAbove).edge_capacity() == 59 * 25 + 60 * 24);
  CHECK(full_block(5, 4).edge_count() == 2 * 5 * 4 - 5 - 4);
}

TEST_CASE("bfs rings on small structures") {
  SUBCASE("path a-b-c") {
    LatticeGraph g(3, 1);
    g.add_edge({0, 0}, {1, 0});
    g.add_edge({1, 0}, {2, 0});
    const auto rings = bfs_rings(g, {0, 0}, 2);
    REQUIRE(rings.size() == 3);
    CHECK(rings[0] == std::vector<Site>{{0, 0}});
    CHECK(rings[1] == std::vector<Site>{{1, 0}});
    CHECK(rings[2] == std::vector<Site>{{2, 0}});
  }
  SUBCASE("4-cycle") {
    const auto g = full_block(2, 2);
    for (const Site s : g.nodes()) {
      const auto rings = bfs_rings(g, s, 2);
      CHECK(rings[1].size() == 2);
      CHECK(rings[2].size() == 1);
    }
  }
  SUBCASE("2x3 block from a corner") {
    const auto g = full_block(3, 2);
    const auto rings = bfs_rings(g, {0, 0}, 3);
    std::vector<std::size_t> sizes;
    for (const auto& r : rings) sizes.push_back(r.size());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 1});
  }
  SUBCASE("unknown source") {
    const auto g = full_block(2, 2);
    CHECK(kind_of([&] { bfs_rings(g, {5, 5}, 2); }) == ErrorKind::kUnknownNode);
  }
}

TEST_CASE("rings partition the component of grown structures") {
  GrowthConfig cfg;
  cfg.length = 12;
  cfg.height = 10;
  cfg.target_edges = 60;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    cfg.seed = seed;
    cfg.p_n = 0.2 * static_cast<double>(seed);
    const auto grown = grow_to(cfg).graph;
    const Site source = grown.nodes()[seed * 7 % grown.node_count()];
    const auto rings = bfs_rings(grown, source, static_cast<int>(grown.node_count()));
    std::set<Site> seen;
    std::size_t total = 0;
    for (const auto& ring : rings) {
      total += ring.size();
      seen.insert(ring.begin(), ring.end());
    }
    CHECK(total == grown.node_count());
    CHECK(seen.size() == grown.node_count());
  }
}

TEST_CASE("csr graph rejects non-simple input") {
  const std::vector<std::pair<NodeId, NodeId>> loop{{0, 0}};
  CHECK(kind_of([&] { CsrGraph::from_edges(2, loop); }) == ErrorKind::kInvalidEdge);
  const std::vector<std::pair<NodeId, NodeId>> dup{{0, 1}, {1, 0}};
  CHECK(kind_of([&] { CsrGraph::from_edges(2, dup); }) == ErrorKind::kDuplicateEdge);
  const std::vector<std::pair<NodeId, NodeId>> missing{{0, 3}};
  CHECK(kind_of([&] { CsrGraph::from_edges(2, missing); }) == ErrorKind::kUnknownNode);
}

}  // TEST_SUITE
