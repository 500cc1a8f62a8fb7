#include <algorithm>

#include <gtest/gtest.h>

#include "matchwidth/error.h"
#include "matchwidth/generators.h"
#include "matchwidth/matching.h"
#include "matchwidth/porosity.h"
#include "matchwidth/transforms.h"
#include "test_graphs.h"

namespace matchwidth {
namespace {

using testing::cycle_graph;
using testing::ids;
using testing::matching_of;

// Porosity of a cut, with the empty cut counted as zero.
int porosity_or_zero(const Graph& g, const std::vector<int>& shore) {
  int n = g.num_vertices();
  if (shore.empty() || static_cast<int>(shore.size()) == n) return 0;
  return matching_porosity(g, shore).value;
}

CubicDecomposition paired_star(const std::vector<std::pair<int, int>>& pairs) {
  CubicDecomposition cd;
  cd.kind = DecompositionKind::kMatching;
  int center = cd.add_node();
  for (auto [x, y] : pairs) {
    int p = cd.add_node();
    cd.add_edge(center, p);
    cd.add_edge(p, cd.add_node(x));
    cd.add_edge(p, cd.add_node(y));
  }
  return cd;
}

TEST(ConformalizeShoreTest, Examples) {
  Graph c6 = cycle_graph(6);
  Matching m = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  EXPECT_EQ(conformalize_shore(c6, m, ids(c6, {"v2"})), ids(c6, {"v1", "v2"}));
  auto fixed = ids(c6, {"v3", "v4"});
  EXPECT_EQ(conformalize_shore(c6, m, fixed), fixed);
  // A transversal leaves no proper conformal superset.
  EXPECT_EQ(conformalize_shore(c6, m, ids(c6, {"v1", "v3", "v5"})).size(), 6u);
}

TEST(ConformalizeShoreTest, PostconditionsOnRandomInstances) {
  Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 * (2 + trial % 4);
    Graph g = random_matching_covered(rng, n, 0.45);
    Matching m = random_perfect_matching(rng, g);
    auto x = random_shore(rng, n);
    auto result = conformalize_shore(g, m, x);
    int before = matching_porosity(g, x).value;
    EXPECT_TRUE(std::includes(result.begin(), result.end(), x.begin(), x.end()));
    EXPECT_LE(result.size(), x.size() + before);
    EXPECT_TRUE(is_m_conformal(g, m, result));
    EXPECT_LE(porosity_or_zero(g, result), 2 * before);
  }
}

TEST(PmdToConformalTest, AlreadyConformalIsUnchanged) {
  Graph c6 = cycle_graph(6);
  Matching m = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  auto pd = paired_star({{0, 1}, {2, 3}, {4, 5}});
  auto out = pmd_to_conformal_pmd(c6, m, pd);
  EXPECT_TRUE(same_decomposition(pd, out));
  EXPECT_EQ(decomposition_width(c6, out).width, decomposition_width(c6, pd).width);
}

TEST(PmdToConformalTest, SixCycleCaterpillar) {
  Graph c6 = cycle_graph(6);
  Matching m = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  auto pd = caterpillar(ids(c6, {"v1", "v3", "v5", "v2", "v4", "v6"}), DecompositionKind::kMatching);
  EXPECT_FALSE(is_m_conformal_decomposition(c6, m, pd));
  auto out = pmd_to_conformal_pmd(c6, m, pd);
  validate_cubic(out, 6);
  EXPECT_TRUE(is_m_conformal_decomposition(c6, m, out));
  EXPECT_LE(decomposition_width(c6, out).width, 2 * decomposition_width(c6, pd).width);
  // Each v_{2i-1} now shares its parent with its partner.
  EXPECT_NO_THROW(conformal_pmd_to_cycle_decomp(c6, m, out));
}

TEST(PmdToConformalTest, RandomDecompositionsAtMostDouble) {
  Rng rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 * (2 + trial % 4);
    Graph g = random_matching_covered(rng, n, 0.45);
    Matching m = random_perfect_matching(rng, g);
    auto pd = random_cubic_decomposition(rng, n, DecompositionKind::kMatching);
    auto out = pmd_to_conformal_pmd(g, m, pd);
    EXPECT_NO_THROW(validate_cubic(out, n));
    EXPECT_TRUE(is_m_conformal_decomposition(g, m, out));
    EXPECT_LE(decomposition_width(g, out).width, 2 * decomposition_width(g, pd).width);
  }
}

TEST(ConformalToCycleTest, SixCycleGivesTriangleStar) {
  Graph c6 = cycle_graph(6);
  Matching m = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  auto pd = paired_star({{0, 1}, {2, 3}, {4, 5}});
  auto cd = conformal_pmd_to_cycle_decomp(c6, m, pd);
  MDirection dir = m_direction(c6, m);
  validate_cubic(cd, 3);
  EXPECT_EQ(cd.num_nodes(), 4);
  EXPECT_EQ(decomposition_width(dir.digraph, cd).width, 2);
}

TEST(ConformalToCycleTest, RejectsSeparatedPairs) {
  Graph c6 = cycle_graph(6);
  Matching m = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  auto pd = caterpillar(ids(c6, {"v1", "v3", "v5", "v2", "v4", "v6"}), DecompositionKind::kMatching);
  try {
    conformal_pmd_to_cycle_decomp(c6, m, pd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMatchedPairNotSiblings);
  }
}

TEST(CycleToConformalTest, TriangleStarGivesSixCycleDecomposition) {
  Graph c6 = cycle_graph(6);
  Matching m = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  CubicDecomposition star;
  int center = star.add_node();
  for (int v = 0; v < 3; ++v) star.add_edge(center, star.add_node(v));
  auto pd = cycle_decomp_to_conformal_pmd(c6, m, star);
  validate_cubic(pd, 6);
  EXPECT_TRUE(is_m_conformal_decomposition(c6, m, pd));
  EXPECT_EQ(decomposition_width(c6, pd).width, 2);
}

TEST(CycleToConformalTest, RoundTripsPreserveWidthAndShape) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int half = 2 + trial % 4;
    Graph g = random_bipartite_matching_covered(rng, half, 0.4);
    Matching m = random_perfect_matching(rng, g);
    MDirection dir = m_direction(g, m);
    auto cd = random_cubic_decomposition(rng, half, DecompositionKind::kCycle);
    auto pd = cycle_decomp_to_conformal_pmd(g, m, cd);
    EXPECT_NO_THROW(validate_cubic(pd, 2 * half));
    EXPECT_TRUE(is_m_conformal_decomposition(g, m, pd));
    int cw = decomposition_width(dir.digraph, cd).width;
    EXPECT_EQ(decomposition_width(g, pd).width, cw) << "trial " << trial;
    auto back = conformal_pmd_to_cycle_decomp(g, m, pd);
    EXPECT_TRUE(same_decomposition(back, cd));

    // The other order: any conformal decomposition of g.
    auto other = pmd_to_conformal_pmd(
        g, m, random_cubic_decomposition(rng, 2 * half, DecompositionKind::kMatching));
    auto as_cycle = conformal_pmd_to_cycle_decomp(g, m, other);
    EXPECT_EQ(decomposition_width(dir.digraph, as_cycle).width, decomposition_width(g, other).width);
    EXPECT_TRUE(same_decomposition(cycle_decomp_to_conformal_pmd(g, m, as_cycle), other));
  }
}

TEST(CycleToConformalTest, SingleEdge) {
  Graph edge;
  edge.add_edge("a", "b");
  edge.compute_bipartition();
  Matching m;
  m.edges = {Edge(0, 1)};
  CubicDecomposition single;
  single.add_node(0);
  auto pd = cycle_decomp_to_conformal_pmd(edge, m, single);
  EXPECT_EQ(decomposition_width(edge, pd).width, 1);
  EXPECT_EQ(conformal_pmd_to_cycle_decomp(edge, m, pd).num_nodes(), 1);
}

}  // namespace
}  // namespace matchwidth
