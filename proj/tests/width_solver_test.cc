#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>

#include <gtest/gtest.h>

#include "matchwidth/direction.h"
#include "matchwidth/error.h"
#include "matchwidth/generators.h"
#include "matchwidth/grids.h"
#include "matchwidth/matching.h"
#include "matchwidth/minors.h"
#include "matchwidth/width_solver.h"
#include "test_graphs.h"

namespace matchwidth {
namespace {

using testing::complete_bipartite;
using testing::cycle_graph;
using testing::directed_cycle;
using testing::matching_of;

// Every cubic tree with leaves 0..n-1, built with the public tree API and
// scored with decomposition_width; shares nothing with the solver's search.
template <typename G>
int brute_force_width(const G& g, int n) {
  CubicDecomposition cd;
  cd.add_node(0);
  if (n == 1) return decomposition_width(g, cd).width;
  cd.add_edge(0, cd.add_node(1));
  int best = INT_MAX;
  std::function<void(CubicDecomposition&, int)> grow = [&](CubicDecomposition& t, int item) {
    if (item == n) {
      best = std::min(best, decomposition_width(g, t).width);
      return;
    }
    for (auto [a, b] : t.edges()) {
      CubicDecomposition next = t;
      next.remove_edge(a, b);
      int mid = next.add_node();
      next.add_edge(a, mid);
      next.add_edge(mid, b);
      next.add_edge(mid, next.add_node(item));
      grow(next, item + 1);
    }
  };
  grow(cd, 2);
  return best;
}

TEST(ExactCyclewidthTest, Examples) {
  auto triangle = exact_cyclewidth(directed_cycle(3));
  EXPECT_EQ(triangle.width, 2);
  EXPECT_EQ(triangle.width, brute_force_width(directed_cycle(3), 3));
  EXPECT_EQ(triangle.mode, SolveMode::kExact);
  EXPECT_EQ(exact_cyclewidth(testing::directed_path(6)).width, 0);
  EXPECT_EQ(exact_cyclewidth(Digraph(1)).width, 0);
  EXPECT_EQ(exact_cyclewidth(directed_cycle(2)).width, 2);
  EXPECT_EQ(exact_cyclewidth(testing::bidirected_complete(4)).width,
            brute_force_width(testing::bidirected_complete(4), 4));
}

TEST(ExactCyclewidthTest, CylindricalGridOfOrderTwo) {
  Digraph grid = cylindrical_grid(2);
  auto result = exact_cyclewidth(grid);
  EXPECT_GE(result.width, 2);
  SolverOptions naive;
  naive.naive = true;
  auto full = exact_cyclewidth(grid, naive);
  EXPECT_EQ(full.stats.complete_trees, 10395);  // (2*8-5)!!
  EXPECT_EQ(full.width, result.width);
}

TEST(ExactCyclewidthTest, AgreesWithBruteForce) {
  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 5;
    Digraph d = random_digraph(rng, n, 0.4);
    auto result = exact_cyclewidth(d);
    EXPECT_EQ(result.width, brute_force_width(d, n)) << "trial " << trial;
    validate_cubic(result.decomposition, n);
    EXPECT_EQ(decomposition_width(d, result.decomposition).width, result.width);
  }
}

TEST(ExactCyclewidthTest, AgreesWithNaiveEnumeration) {
  Rng rng(53);
  SolverOptions naive;
  naive.naive = true;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 5;
    Digraph d = random_strongly_connected_digraph(rng, n, 0.3);
    auto fast = exact_cyclewidth(d);
    auto slow = exact_cyclewidth(d, naive);
    EXPECT_EQ(fast.width, slow.width);
    EXPECT_EQ(decomposition_width(d, slow.decomposition).width, slow.width);
    EXPECT_LE(fast.stats.complete_trees, slow.stats.complete_trees);
  }
}

TEST(ExactCyclewidthTest, MonotoneUnderMinors) {
  Rng rng(57);
  for (int trial = 0; trial < 60; ++trial) {
    Digraph d = random_strongly_connected_digraph(rng, 3 + trial % 4, 0.35);
    int cw = exact_cyclewidth(d).width;
    EXPECT_EQ(exact_cyclewidth(reverse(d)).width, cw);
    for (const Arc& a : d.arcs()) {
      EXPECT_LE(exact_cyclewidth(delete_arc(d, a.tail, a.head)).width, cw);
      if (is_butterfly_contractible(d, a.tail, a.head)) {
        EXPECT_LE(exact_cyclewidth(butterfly_contract(d, a.tail, a.head)).width, cw);
      }
    }
  }
}

TEST(ExactPmwTest, Examples) {
  Graph edge;
  edge.add_edge("a", "b");
  EXPECT_EQ(exact_pmw(edge).width, 1);
  EXPECT_EQ(exact_pmw(cycle_graph(6)).width, 2);
  EXPECT_EQ(brute_force_width(cycle_graph(6), 6), 2);
  auto k33 = exact_pmw(complete_bipartite(3, 3));
  EXPECT_EQ(k33.width, brute_force_width(complete_bipartite(3, 3), 6));
  EXPECT_EQ(k33.width, 2);
  try {
    exact_pmw(testing::path_graph(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMatchingCovered);
  }
}

TEST(ExactPmwTest, AgreesWithBruteForceAndNaive) {
  Rng rng(59);
  SolverOptions naive;
  naive.naive = true;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 * (1 + trial % 3);
    Graph g = random_matching_covered(rng, n, 0.5);
    auto result = exact_pmw(g);
    EXPECT_EQ(result.width, brute_force_width(g, n));
    EXPECT_EQ(result.width, exact_pmw(g, naive).width);
    EXPECT_EQ(decomposition_width(g, result.decomposition).width, result.width);
  }
}

TEST(ExactMpmwTest, SixCycle) {
  Graph c6 = cycle_graph(6);
  for (const auto& m : {matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}}),
                        matching_of(c6, {{"v2", "v3"}, {"v4", "v5"}, {"v6", "v1"}})}) {
    auto result = exact_mpmw(c6, m);
    EXPECT_EQ(result.width, 2);
    EXPECT_TRUE(is_m_conformal_decomposition(c6, m, result.decomposition));
    EXPECT_EQ(decomposition_width(c6, result.decomposition).width, 2);
  }
}

TEST(ExactMpmwTest, SingleEdge) {
  Graph edge;
  edge.add_edge("a", "b");
  Matching m;
  m.edges = {Edge(0, 1)};
  EXPECT_EQ(exact_mpmw(edge, m).width, 1);
}

// Brute force over all trees, keeping only the M-conformal ones.
int brute_force_mpmw(const Graph& g, const Matching& m) {
  const int n = g.num_vertices();
  int best = INT_MAX;
  CubicDecomposition cd;
  cd.kind = DecompositionKind::kMatching;
  cd.add_node(0);
  cd.add_edge(0, cd.add_node(1));
  std::function<void(CubicDecomposition&, int)> grow = [&](CubicDecomposition& t, int item) {
    if (item == n) {
      if (is_m_conformal_decomposition(g, m, t)) best = std::min(best, decomposition_width(g, t).width);
      return;
    }
    for (auto [a, b] : t.edges()) {
      CubicDecomposition next = t;
      next.remove_edge(a, b);
      int mid = next.add_node();
      next.add_edge(a, mid);
      next.add_edge(mid, b);
      next.add_edge(mid, next.add_node(item));
      grow(next, item + 1);
    }
  };
  grow(cd, 2);
  return best;
}

TEST(ExactMpmwTest, RestrictedSearchMatchesBruteForce) {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 * (2 + trial % 2);
    Graph g = random_matching_covered(rng, n, 0.6);
    Matching m = random_perfect_matching(rng, g);
    EXPECT_EQ(exact_mpmw(g, m).width, brute_force_mpmw(g, m)) << "trial " << trial;
  }
}

TEST(ExactMpmwTest, EqualsCyclewidthOfMDirection) {
  Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_bipartite_matching_covered(rng, 2 + trial % 4, 0.4);
    int pmw = exact_pmw(g).width;
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      int mpmw = exact_mpmw(g, m).width;
      int cw = exact_cyclewidth(m_direction(g, m).digraph).width;
      EXPECT_EQ(mpmw, cw);
      EXPECT_LE(pmw, mpmw);
      EXPECT_LE(mpmw, 2 * pmw);
    }
  }
}

TEST(ExactMpmwTest, SandwichOnGeneralGraphs) {
  Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_matching_covered(rng, 2 * (2 + trial % 3), 0.5);
    int pmw = exact_pmw(g).width;
    Matching m = random_perfect_matching(rng, g);
    auto result = exact_mpmw(g, m);
    EXPECT_LE(pmw, result.width);
    EXPECT_LE(result.width, 2 * pmw);
    EXPECT_TRUE(is_m_conformal_decomposition(g, m, result.decomposition));
  }
}

TEST(HeuristicTest, UpperBoundsAndGrid) {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph d = random_digraph(rng, 2 + trial % 6, 0.35);
    auto h = heuristic_width(d);
    EXPECT_EQ(h.mode, SolveMode::kHeuristic);
    validate_cubic(h.decomposition, d.num_vertices());
    EXPECT_EQ(decomposition_width(d, h.decomposition).width, h.width);
    EXPECT_GE(h.width, exact_cyclewidth(d).width);
    Graph g = random_matching_covered(rng, 2 * (1 + trial % 4), 0.5);
    EXPECT_GE(heuristic_width(g).width, exact_pmw(g).width);
  }
  EXPECT_GE(heuristic_width(cylindrical_grid(3)).width, 2);
  auto cg4 = heuristic_width(cylindrical_grid(4));
  EXPECT_LE(cg4.stats.cache_hits + cg4.stats.cache_misses, 32 * 32 * 32);
}

TEST(SolverOptionsTest, ParallelSearchAgrees) {
  Rng rng(79);
  SolverOptions parallel;
  parallel.jobs = 3;
  for (int trial = 0; trial < 20; ++trial) {
    Digraph d = random_strongly_connected_digraph(rng, 5 + trial % 4, 0.3);
    auto result = exact_cyclewidth(d, parallel);
    EXPECT_EQ(result.width, exact_cyclewidth(d).width);
    EXPECT_EQ(decomposition_width(d, result.decomposition).width, result.width);
  }
}

TEST(SolverOptionsTest, CacheIsShared) {
  SolverOptions options;
  options.cache = std::make_shared<PorosityCache>();
  Digraph grid = cylindrical_grid(2);
  auto first = exact_cyclewidth(grid, options);
  EXPECT_GT(first.stats.cache_misses, 0);
  auto second = exact_cyclewidth(grid, options);
  EXPECT_EQ(second.stats.cache_misses, 0);
  EXPECT_EQ(second.width, first.width);
  // A different graph rebinds the cache.
  exact_cyclewidth(directed_cycle(3), options);
  EXPECT_LE(options.cache->size(), 8u);
}

TEST(SolverOptionsTest, Cap) {
  Digraph big = directed_cycle(11);
  try {
    exact_cyclewidth(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  SolverOptions options;
  options.cap = 11;
  EXPECT_EQ(exact_cyclewidth(big, options).width, 2);
  setenv("MATCHWIDTH_CAP", "12", 1);
  EXPECT_EQ(effective_cap(SolverOptions{}), 12);
  EXPECT_EQ(exact_cyclewidth(big).width, 2);
  unsetenv("MATCHWIDTH_CAP");
  EXPECT_EQ(effective_cap(SolverOptions{}), 10);
}

}  // namespace
}  // namespace matchwidth
