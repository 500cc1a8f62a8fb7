#include <algorithm>

#include <gtest/gtest.h>

#include "matchwidth/direction.h"
#include "matchwidth/error.h"
#include "matchwidth/generators.h"
#include "matchwidth/grids.h"
#include "matchwidth/isomorphism.h"
#include "matchwidth/matching.h"
#include "matchwidth/minors.h"
#include "test_graphs.h"

namespace matchwidth {
namespace {

using testing::bidirected_complete;
using testing::complete_bipartite;
using testing::cycle_graph;
using testing::directed_cycle;

TEST(ButterflyTest, Contractibility) {
  Digraph path = testing::directed_path(3);
  EXPECT_TRUE(is_butterfly_contractible(path, 0, 1));
  Digraph k3 = bidirected_complete(3);
  for (const Arc& a : k3.arcs()) EXPECT_FALSE(is_butterfly_contractible(k3, a.tail, a.head));
  EXPECT_THROW(is_butterfly_contractible(path, 1, 0), Error);
  Digraph grid = cylindrical_grid(3);
  int tail = grid.index_of("r1s0");
  ASSERT_EQ(grid.out_degree(tail), 1);
  EXPECT_TRUE(is_butterfly_contractible(grid, tail, grid.index_of("r1s1")));
}

TEST(ButterflyTest, ContractionExamples) {
  Digraph path = testing::directed_path(3);
  Digraph contracted = butterfly_contract(path, 0, 1);
  EXPECT_EQ(contracted.num_vertices(), 2);
  EXPECT_EQ(contracted.num_arcs(), 1);
  EXPECT_TRUE(are_isomorphic(contracted, testing::directed_path(2)));

  Digraph triangle = butterfly_contract(directed_cycle(3), 1, 2);
  EXPECT_TRUE(are_isomorphic(triangle, directed_cycle(2)));
  EXPECT_EQ(triangle.name(1), "1+2");

  Digraph digon = butterfly_contract(directed_cycle(2), 0, 1);
  EXPECT_EQ(digon.num_vertices(), 1);
  EXPECT_EQ(digon.num_arcs(), 0);

  try {
    butterfly_contract(bidirected_complete(3), 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotContractible);
  }
}

TEST(ButterflyTest, ParallelArcsCollapse) {
  // u -> v with both pointing to w: one arc to w remains.
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(0, 2);
  d.add_arc(1, 2);
  Digraph out = butterfly_contract(d, 1, 2);
  EXPECT_EQ(out.num_arcs(), 1);
}

TEST(ReverseTest, InvolutionAndGridSymmetry) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Digraph d = random_digraph(rng, 6, 0.3);
    Digraph twice = reverse(reverse(d));
    EXPECT_EQ(twice.arcs(), d.arcs());
  }
  for (int k = 1; k <= 3; ++k) {
    Digraph grid = cylindrical_grid(k);
    EXPECT_TRUE(are_isomorphic(reverse(grid), grid)) << "k=" << k;
  }
}

TEST(BicontractTest, Examples) {
  Graph g;
  g.add_edge("a", "v");
  g.add_edge("v", "b");
  g.add_edge("a", "x");
  g.add_edge("b", "y");
  Graph h = bicontract(g, g.index_of("v"));
  EXPECT_EQ(h.num_vertices(), 3);
  EXPECT_EQ(h.name(0), "a+v+b");
  EXPECT_TRUE(h.has_edge(0, h.index_of("x")));
  EXPECT_TRUE(h.has_edge(0, h.index_of("y")));

  Graph c6 = cycle_graph(6);
  for (int v = 0; v < 6; ++v) {
    Graph c4 = bicontract(c6, v);
    EXPECT_TRUE(are_isomorphic(c4, cycle_graph(4)));
    ASSERT_TRUE(c4.bipartition().has_value());
  }
  try {
    bicontract(complete_bipartite(3, 3), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongDegree);
  }
}

TEST(BicontractTest, KeepsPerfectMatchings) {
  Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_bipartite_matching_covered(rng, 3 + trial % 4, 0.25);
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) != 2) continue;
      EXPECT_TRUE(has_perfect_matching(bicontract(g, v)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

std::vector<std::string> tokens(const std::string& name) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t plus = name.find('+', start);
    out.push_back(name.substr(start, plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Applies a witness to g step by step.
Graph replay(const Graph& g, const MinorWitness& w) {
  Graph current = remove_vertices(g, w.removed);
  Graph pruned;
  for (int v = 0; v < current.num_vertices(); ++v) pruned.add_vertex(current.name(v));
  for (const Edge& e : current.edges()) {
    bool deleted = false;
    for (const Edge& d : w.deleted) {
      if (current.name(e.u) == g.name(d.u) && current.name(e.v) == g.name(d.v)) deleted = true;
      if (current.name(e.u) == g.name(d.v) && current.name(e.v) == g.name(d.u)) deleted = true;
    }
    if (!deleted) pruned.add_edge(e.u, e.v);
  }
  current = pruned;
  for (const auto& label : w.bicontracted) {
    int found = -1;
    for (int v = 0; v < current.num_vertices(); ++v) {
      if (tokens(current.name(v)) == tokens(label)) found = v;
    }
    EXPECT_GE(found, 0) << label;
    if (found < 0) break;
    current = bicontract(current, found);
  }
  return current;
}

TEST(MatchingMinorTest, Examples) {
  Graph c6 = cycle_graph(6);
  auto same = matching_minor_check(c6, c6);
  EXPECT_TRUE(same.found);
  EXPECT_TRUE(same.removed.empty());
  EXPECT_TRUE(same.deleted.empty());
  EXPECT_TRUE(same.bicontracted.empty());

  auto c4 = matching_minor_check(c6, cycle_graph(4));
  EXPECT_TRUE(c4.found);
  EXPECT_EQ(c4.bicontracted.size(), 1u);
  EXPECT_TRUE(c4.removed.empty());

  auto in_k33 = matching_minor_check(complete_bipartite(3, 3), cycle_graph(4));
  EXPECT_TRUE(in_k33.found);
  EXPECT_TRUE(are_isomorphic(replay(complete_bipartite(3, 3), in_k33), cycle_graph(4)));
  EXPECT_TRUE(are_isomorphic(replay(c6, c4), cycle_graph(4)));

  auto none = matching_minor_check(c6, complete_bipartite(3, 3));
  EXPECT_FALSE(none.found);
  EXPECT_FALSE(none.budget_exhausted);
}

TEST(MatchingMinorTest, RemovedSetMustBeMatchable) {
  // Path p1..p6 has C4-free structure; the only way to shrink it to the
  // edge p3p4 is to remove a matchable set.
  Graph p6 = testing::path_graph(6);
  Graph edge;
  edge.add_edge("x", "y");
  auto result = matching_minor_check(p6, edge);
  ASSERT_TRUE(result.found);
  std::vector<char> rest(6, 0);
  for (int v : result.removed) rest[v] = 1;
  EXPECT_TRUE(has_perfect_matching(induced_subgraph(p6, rest)));
  EXPECT_TRUE(are_isomorphic(replay(p6, result), edge));
}

TEST(MatchingMinorTest, WitnessesReplayOnRandomPairs) {
  Rng rng(9);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_bipartite_matching_covered(rng, 3 + trial % 2, 0.4);
    Graph h = random_bipartite_matching_covered(rng, 2 + trial % 2, 0.5);
    auto w = matching_minor_check(g, h);
    if (!w.found) continue;
    ++found;
    EXPECT_TRUE(are_isomorphic(replay(g, w), h));
  }
  EXPECT_GT(found, 5);
}

TEST(MatchingMinorTest, VertexCap) {
  try {
    matching_minor_check(cycle_graph(16), cycle_graph(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(GridTest, CylindricalGridShape) {
  std::vector<std::string> warnings;
  Digraph one = cylindrical_grid(1, &warnings);
  EXPECT_EQ(one.num_vertices(), 2);
  EXPECT_EQ(one.num_arcs(), 2);
  EXPECT_EQ(warnings.size(), 1u);

  Digraph grid = cylindrical_grid(3);
  EXPECT_EQ(grid.num_vertices(), 18);
  EXPECT_EQ(grid.num_arcs(), 30);
  // Outer ring: inward spokes start at odd j, outward spokes end at even j.
  for (int j = 0; j < 6; ++j) {
    int outer = grid.index_of("r1s" + std::to_string(j));
    EXPECT_EQ(grid.out_degree(outer), j % 2 == 1 ? 2 : 1);
    EXPECT_EQ(grid.in_degree(outer), j % 2 == 1 ? 1 : 2);
  }
  for (int k = 1; k <= 6; ++k) EXPECT_TRUE(cylindrical_grid(k).is_strongly_connected()) << k;
}

TEST(GridTest, RetractedGrid) {
  auto construction = retracted_grid_construction(3);
  EXPECT_EQ(construction.digraph.num_vertices(), 12);
  EXPECT_EQ(construction.digraph.num_arcs(), 24);
  EXPECT_EQ(construction.outer.size(), 3u);
  EXPECT_EQ(construction.inner.size(), 3u);
  EXPECT_EQ(construction.outer_offset, 0);
  EXPECT_EQ(construction.inner_offset, 1);
  EXPECT_EQ(construction.alignment, "head-to-tail");
  Digraph grid = cylindrical_grid(3);
  for (const auto& arcs : {construction.outer, construction.inner}) {
    for (const auto& [tail, head] : arcs) {
      EXPECT_TRUE(is_butterfly_contractible(grid, grid.index_of(tail), grid.index_of(head)));
    }
  }
  for (int k = 2; k <= 5; ++k) {
    Digraph r = retracted_grid(k);
    EXPECT_EQ(r.num_vertices(), 2 * k * k - 2 * k);
    EXPECT_TRUE(r.is_strongly_connected()) << k;
  }
  EXPECT_THROW(retracted_grid(1), Error);
}

TEST(GridTest, BipartiteMatchingGrid) {
  auto m3 = bipartite_matching_grid(3);
  EXPECT_EQ(m3.graph.num_vertices(), 24);
  EXPECT_EQ(m3.graph.num_edges(), 36);
  for (int k = 2; k <= 4; ++k) {
    auto mk = bipartite_matching_grid(k);
    ASSERT_TRUE(mk.graph.bipartition().has_value());
    EXPECT_TRUE(is_matching_covered(mk.graph)) << k;
    EXPECT_TRUE(are_isomorphic(m_direction(mk.graph, mk.matching).digraph, retracted_grid(k))) << k;
  }
}

}  // namespace
}  // namespace matchwidth
