#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "coverpoly/errors.hpp"
#include "coverpoly/graph.hpp"
#include "support.hpp"

using namespace coverpoly;
using coverpoly::testing::cycles_by_arrangement;
using coverpoly::testing::fixture;
using coverpoly::testing::graph_from_mask;

namespace {

std::vector<std::string> labels_of(const Graph& g, const Cycle& c) {
  std::vector<std::string> out;
  for (VertexId v : c) out.push_back(g.label(v));
  return out;
}

FiveCycle c5_block(const Graph& g) {
  return FiveCycle{{g.id("y1"), g.id("y2"), g.id("y3"), g.id("y4"), g.id("y5")}};
}

// Cactus by definition: connected and no edge on two cycles of the oracle list.
bool cactus_by_cycles(const Graph& g, const std::set<std::vector<Edge>>& cycles) {
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  std::map<Edge, int> uses;
  for (const auto& c : cycles)
    for (const auto& e : c)
      if (++uses[e] > 1) return false;
  return true;
}

std::set<std::vector<Edge>> as_edge_sets(const CycleList& cycles) {
  std::set<std::vector<Edge>> out;
  for (const auto& c : cycles) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < c.size(); ++i) {
      VertexId a = c[i], b = c[(i + 1) % c.size()];
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    out.insert(es);
  }
  return out;
}

}  // namespace

TEST(Parse, EdgeListWithCommentsAndIsolatedVertices) {
  Graph g = parse_edge_list("# header\n\na b\nb c  # trailing\nvertex d\nb a\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(g.id("d")), 0u);
  EXPECT_TRUE(g.adjacent(g.id("a"), g.id("b")));
}

TEST(Parse, RejectsMalformedLinesAndLoops) {
  EXPECT_THROW(read_graph_file(fixture("malformed.txt")), InputError);
  EXPECT_THROW(parse_edge_list("a a\n"), InputError);
  EXPECT_THROW(read_graph_file(fixture("does-not-exist.txt")), InputError);
}

TEST(Parse, FormatRoundTrips) {
  Graph g = read_graph_file(fixture("triangle_c5.txt"));
  Graph h = parse_edge_list(format_edge_list(g));
  auto labelled = [](const Graph& x) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : x.edges()) out.emplace(std::min(x.label(u), x.label(v)), std::max(x.label(u), x.label(v)));
    return out;
  };
  EXPECT_EQ(std::set<std::string>(g.labels().begin(), g.labels().end()),
            std::set<std::string>(h.labels().begin(), h.labels().end()));
  EXPECT_EQ(labelled(g), labelled(h));
}

TEST(Cactus, Examples) {
  EXPECT_TRUE(is_cactus(read_graph_file(fixture("c5.txt"))));
  EXPECT_TRUE(is_cactus(parse_edge_list("a b\n")));
  EXPECT_FALSE(is_cactus(read_graph_file(fixture("diamond.txt"))));
  EXPECT_FALSE(is_cactus(Graph{}));
  EXPECT_TRUE(is_cactus(parse_edge_list("vertex a\n")));
  EXPECT_FALSE(is_cactus(parse_edge_list("a b\nc d\n")));
  EXPECT_TRUE(is_cactus(read_graph_file(fixture("triangle_c5.txt"))));
}

TEST(Cycles, Examples) {
  Graph c5 = read_graph_file(fixture("c5.txt"));
  auto cycles = simple_cycles(c5);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].size(), 5u);
  // Starts at y1 and heads to its smaller neighbour (y4 < y5).
  EXPECT_EQ(labels_of(c5, cycles[0]), (std::vector<std::string>{"y1", "y4", "y2", "y3", "y5"}));

  EXPECT_TRUE(simple_cycles(parse_edge_list("a b\nb c\nb d\nd e\n")).empty());

  Graph k3p = read_graph_file(fixture("k3_whisker.txt"));
  auto k3c = simple_cycles(k3p);
  ASSERT_EQ(k3c.size(), 1u);
  EXPECT_EQ(k3c[0].size(), 3u);

  EXPECT_EQ(simple_cycles(read_graph_file(fixture("diamond.txt"))).size(), 3u);
}

TEST(Cycles, LimitIsEnforced) {
  Graph k6 = graph_from_mask(6, (1u << 15) - 1);
  EXPECT_THROW(simple_cycles(k6, 10), BudgetError);
  EXPECT_EQ(simple_cycles(k6).size(), 197u);
}

TEST(Cycles, CanonicalFormIsIdempotent) {
  Graph c5 = read_graph_file(fixture("c5.txt"));
  Cycle c{c5.id("y3"), c5.id("y2"), c5.id("y4"), c5.id("y1"), c5.id("y5")};
  Cycle once = canonical_cycle(c5, c);
  EXPECT_EQ(canonical_cycle(c5, once), once);
  EXPECT_EQ(once, simple_cycles(c5)[0]);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Graph g = coverpoly::testing::random_graph(rng, 6, 0.5);
    for (auto cyc : simple_cycles(g)) {
      std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(rng() % cyc.size()), cyc.end());
      if (rng() & 1) std::reverse(cyc.begin(), cyc.end());
      auto c1 = canonical_cycle(g, cyc);
      EXPECT_EQ(canonical_cycle(g, c1), c1);
    }
  }
}

// Every graph on up to 6 labelled vertices: cycle lists match the
// arrangement oracle and is_cactus matches the definition.
TEST(Cycles, ExhaustiveOracleUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    const std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      const auto oracle = cycles_by_arrangement(g);
      const auto cycles = simple_cycles(g);
      ASSERT_EQ(as_edge_sets(cycles), oracle) << "n=" << n << " mask=" << mask;
      ASSERT_EQ(cycles.size(), oracle.size());
      ASSERT_EQ(is_cactus(g), cactus_by_cycles(g, oracle)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Cycles, SampledOracleAtSevenAndEightVertices) {
  std::mt19937_64 rng(20261019);
  for (int t = 0; t < 600; ++t) {
    const int n = 7 + t % 2;
    // Sparse graphs are where cactus/non-cactus boundaries sit.
    Graph g = coverpoly::testing::random_graph(rng, n, t % 3 == 0 ? 0.45 : 0.28);
    const auto oracle = cycles_by_arrangement(g);
    ASSERT_EQ(as_edge_sets(simple_cycles(g)), oracle) << format_edge_list(g);
    ASSERT_EQ(is_cactus(g), cactus_by_cycles(g, oracle)) << format_edge_list(g);
  }
}

TEST(Blocks, EveryEdgeInExactlyOneBlock) {
  Graph g = read_graph_file(fixture("triangle_c5.txt"));
  auto blocks = biconnected_blocks(g);
  std::size_t edges = 0;
  for (const auto& b : blocks) edges += b.size();
  EXPECT_EQ(edges, g.edge_count());
  EXPECT_EQ(blocks.size(), 3u);  // triangle, bridge, 5-cycle
}

TEST(BasicFiveCycle, Examples) {
  Graph c5 = read_graph_file(fixture("c5.txt"));
  auto cyc = simple_cycles(c5)[0];
  EXPECT_TRUE(is_basic_five_cycle(c5, cyc));

  // Whiskers on y1 and y4, which are adjacent.
  Graph adj = c5;
  adj.add_edge("y1", "p");
  adj.add_edge("y4", "q");
  EXPECT_FALSE(is_basic_five_cycle(adj, cyc));

  // Whiskers on y1 and y2, which are not adjacent.
  Graph nonadj = c5;
  nonadj.add_edge("y1", "p");
  nonadj.add_edge("y2", "q");
  EXPECT_TRUE(is_basic_five_cycle(nonadj, cyc));

  Graph k3 = read_graph_file(fixture("k3.txt"));
  EXPECT_THROW(is_basic_five_cycle(k3, simple_cycles(k3)[0]), StructuralError);
  Cycle not_a_cycle{cyc[0], cyc[2], cyc[1], cyc[3], cyc[4]};
  EXPECT_THROW(is_basic_five_cycle(c5, not_a_cycle), StructuralError);
}

TEST(ReachablePartition, Examples) {
  Graph c5 = read_graph_file(fixture("c5.txt"));
  auto bare = reachable_partition(c5, c5_block(c5));
  EXPECT_TRUE(bare.t1.empty());
  EXPECT_TRUE(bare.t2.empty());

  Graph whisker = c5;
  whisker.add_edge("y1", "w");
  auto ws = reachable_partition(whisker, c5_block(whisker));
  EXPECT_EQ(ws.t1, VertexSet{whisker.id("w")});
  EXPECT_TRUE(ws.t2.empty());

  Graph tri = c5;
  tri.add_edge("y2", "a");
  tri.add_edge("a", "b");
  tri.add_edge("b", "y2");
  auto ts = reachable_partition(tri, c5_block(tri));
  EXPECT_TRUE(ts.t1.empty());
  EXPECT_EQ(ts.t2, (VertexSet{tri.id("a"), tri.id("b")}));
}

TEST(ReachablePartition, RejectsInvalidConfigurations) {
  Graph c5 = read_graph_file(fixture("c5.txt"));
  // A path y1 - m - y2 outside the cycle joins the two sides.
  Graph joined = c5;
  joined.add_edge("y1", "m");
  joined.add_edge("m", "y2");
  EXPECT_THROW(reachable_partition(joined, c5_block(joined)), StructuralError);
  // A vertex hanging off y3 is reachable from neither side.
  Graph stray = c5;
  stray.add_edge("y3", "s");
  EXPECT_THROW(reachable_partition(stray, c5_block(stray)), StructuralError);
}
