#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "matchwidth/direction.h"
#include "matchwidth/error.h"
#include "matchwidth/isomorphism.h"
#include "matchwidth/matching.h"
#include "test_graphs.h"

namespace matchwidth {
namespace {

using testing::bidirected_complete;
using testing::complete_bipartite;
using testing::cycle_graph;
using testing::directed_cycle;
using testing::ids;
using testing::matching_of;
using testing::path_graph;

// Permanent of a 0/1 matrix by Ryser's inclusion-exclusion formula.
long long permanent(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  long long total = 0;
  for (int subset = 1; subset < (1 << n); ++subset) {
    long long product = 1;
    for (int i = 0; i < n; ++i) {
      long long row = 0;
      for (int j = 0; j < n; ++j) {
        if (subset & (1 << j)) row += a[i][j];
      }
      product *= row;
    }
    int sign = ((n - __builtin_popcount(subset)) % 2) ? -1 : 1;
    total += sign * product;
  }
  return total;
}

// Every matching (not only perfect ones) of a small graph, by subsets of
// edges. Independent of the library's recursive enumeration.
std::vector<std::vector<int>> all_matchings_by_subsets(const Graph& g) {
  std::vector<std::vector<int>> out;
  const int m = g.num_edges();
  for (long long mask = 0; mask < (1LL << m); ++mask) {
    std::vector<char> used(g.num_vertices(), 0);
    bool ok = true;
    std::vector<int> chosen;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = g.edges()[i];
      if (used[e.u] || used[e.v]) ok = false;
      used[e.u] = used[e.v] = 1;
      chosen.push_back(i);
    }
    if (ok) out.push_back(chosen);
  }
  return out;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

TEST(GraphTest, RejectsSelfLoopsAndKeepsEdgesSimple) {
  Graph g;
  EXPECT_TRUE(g.add_edge("a", "b"));
  EXPECT_FALSE(g.add_edge("b", "a"));
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_THROW(g.add_edge("a", "a"), Error);

  Digraph d;
  EXPECT_TRUE(d.add_arc("u", "v"));
  EXPECT_TRUE(d.add_arc("v", "u"));  // digons are fine
  EXPECT_FALSE(d.add_arc("u", "v"));
  EXPECT_EQ(d.num_arcs(), 2);
}

TEST(GraphTest, BipartitionDetection) {
  Graph c6 = cycle_graph(6);
  ASSERT_TRUE(c6.bipartition().has_value());
  Graph c5 = cycle_graph(5);
  EXPECT_FALSE(c5.bipartition().has_value());
  Graph g = path_graph(3);
  std::vector<Side> wrong = {Side::kA, Side::kA, Side::kB};
  EXPECT_THROW(g.set_bipartition(wrong), Error);
}

TEST(GraphTest, ShoreValidation) {
  EXPECT_FALSE(is_valid_shore(3, std::vector<int>{}));
  EXPECT_FALSE(is_valid_shore(3, std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(is_valid_shore(3, std::vector<int>{3}));
  EXPECT_TRUE(is_valid_shore(3, std::vector<int>{1}));
  Graph c6 = cycle_graph(6);
  EXPECT_EQ(cut_edges(c6, ids(c6, {"v1", "v2"})).size(), 2u);
}

TEST(EnumeratePerfectMatchingsTest, SixCycleHasTwo) {
  Graph c6 = cycle_graph(6);
  auto all = enumerate_perfect_matchings(c6);
  ASSERT_EQ(all.size(), 2u);
  Matching m1 = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  Matching m2 = matching_of(c6, {{"v2", "v3"}, {"v4", "v5"}, {"v6", "v1"}});
  EXPECT_TRUE((all[0] == m1 && all[1] == m2) || (all[0] == m2 && all[1] == m1));
}

TEST(EnumeratePerfectMatchingsTest, SingleEdgeAndOddOrder) {
  Graph g;
  g.add_edge("a", "b");
  EXPECT_EQ(enumerate_perfect_matchings(g).size(), 1u);
  EXPECT_TRUE(enumerate_perfect_matchings(cycle_graph(5)).empty());
}

TEST(EnumeratePerfectMatchingsTest, CompleteBipartiteMatchesPermanent) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<int>> ones(n, std::vector<int>(n, 1));
    EXPECT_EQ(static_cast<long long>(enumerate_perfect_matchings(complete_bipartite(n, n)).size()),
              permanent(ones));
  }
  EXPECT_EQ(enumerate_perfect_matchings(complete_bipartite(3, 3)).size(), 6u);
}

TEST(EnumeratePerfectMatchingsTest, RandomBipartiteMatchesPermanent) {
  std::mt19937 rng(11);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 5;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    Graph g = complete_bipartite(n, 0);
    for (int j = 1; j <= n; ++j) g.add_vertex("b" + std::to_string(j));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (coin(rng)) {
          a[i][j] = 1;
          g.add_edge(i, n + j);
        }
      }
    }
    auto all = enumerate_perfect_matchings(g);
    EXPECT_EQ(static_cast<long long>(all.size()), permanent(a));
    std::set<std::vector<Edge>> distinct;
    for (const auto& m : all) {
      EXPECT_TRUE(is_perfect_matching(g, m));
      distinct.insert(m.normalized().edges);
    }
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(EnumeratePerfectMatchingsTest, CapIsEnforced) {
  EXPECT_THROW(enumerate_perfect_matchings(complete_bipartite(5, 5), 100), Error);
}

TEST(BlossomTest, AgreesWithSubsetEnumeration) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> weight(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 8;
    Graph g = random_graph(rng, n, 0.45);
    if (g.num_edges() > 16) continue;
    std::vector<WeightedEdge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, weight(rng)});
    for (bool maxcard : {false, true}) {
      auto mate = max_weight_matching(n, edges, maxcard);
      long long got = 0;
      int got_size = 0;
      for (int v = 0; v < n; ++v) {
        if (mate[v] < 0) continue;
        ASSERT_EQ(mate[mate[v]], v);
        if (v < mate[v]) {
          int idx = g.edge_index(v, mate[v]);
          ASSERT_GE(idx, 0);
          got += edges[idx].weight;
          ++got_size;
        }
      }
      long long best = -1;
      int best_size = -1;
      for (const auto& chosen : all_matchings_by_subsets(g)) {
        long long w = 0;
        for (int i : chosen) w += edges[i].weight;
        int size = static_cast<int>(chosen.size());
        if (maxcard) {
          if (size > best_size || (size == best_size && w > best)) {
            best_size = size;
            best = w;
          }
        } else {
          best = std::max(best, w);
        }
      }
      EXPECT_EQ(got, best) << "trial " << trial << " maxcard " << maxcard;
      if (maxcard) EXPECT_EQ(got_size, best_size);
    }
  }
}

TEST(HungarianTest, AgreesWithPermutationSearch) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> cost(-3, 9);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 6;
    std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n));
    for (auto& row : c) {
      for (auto& x : row) x = cost(rng);
    }
    auto assignment = min_cost_assignment(c);
    std::int64_t got = 0;
    std::vector<int> check = assignment;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(check[i], i);
      got += c[i][assignment[i]];
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
      std::int64_t total = 0;
      for (int i = 0; i < n; ++i) total += c[i][perm[i]];
      best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(got, best);
  }
}

TEST(MatchingCoveredTest, Examples) {
  EXPECT_TRUE(is_matching_covered(cycle_graph(6)));
  EXPECT_FALSE(is_matching_covered(path_graph(4)));
  EXPECT_TRUE(is_matching_covered(complete_bipartite(3, 3)));
}

TEST(MatchingCoveredTest, AgreesWithEdgeCoverageOfEnumeration) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 * (1 + trial % 5);
    Graph g = random_graph(rng, n, 0.5);
    auto all = enumerate_perfect_matchings(g);
    std::set<Edge> covered;
    for (const auto& m : all) covered.insert(m.edges.begin(), m.edges.end());
    bool expected = g.is_connected() && !all.empty() &&
                    static_cast<int>(covered.size()) == g.num_edges();
    EXPECT_EQ(is_matching_covered(g), expected) << "trial " << trial;
  }
}

TEST(ConformalTest, Examples) {
  Graph c6 = cycle_graph(6);
  EXPECT_TRUE(is_conformal(c6, ids(c6, {"v1", "v2"})));
  EXPECT_FALSE(is_conformal(c6, ids(c6, {"v1", "v3"})));
  EXPECT_TRUE(is_conformal(c6, std::vector<int>{}));
  EXPECT_FALSE(is_conformal(path_graph(3), std::vector<int>{}));

  Matching m = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  EXPECT_TRUE(is_m_conformal(c6, m, ids(c6, {"v1", "v2"})));
  EXPECT_FALSE(is_m_conformal(c6, m, ids(c6, {"v2", "v3"})));
  EXPECT_TRUE(is_m_conformal(c6, m, ids(c6, {"v1", "v2", "v3", "v4", "v5", "v6"})));
}

TEST(ConformalTest, MConformalImpliesConformal) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 8, 0.5);
    auto pm = find_perfect_matching(g);
    if (!pm.ok) continue;
    for (int mask = 0; mask < 256; ++mask) {
      std::vector<int> s;
      for (int v = 0; v < 8; ++v) {
        if (mask >> v & 1) s.push_back(v);
      }
      if (is_m_conformal(g, pm.matching, s)) EXPECT_TRUE(is_conformal(g, s));
    }
  }
}

TEST(SwitchMatchingTest, SixCycle) {
  Graph c6 = cycle_graph(6);
  Matching m = matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  Matching other = matching_of(c6, {{"v2", "v3"}, {"v4", "v5"}, {"v6", "v1"}});
  Cycle whole = {0, 1, 2, 3, 4, 5};
  EXPECT_EQ(switch_matching(c6, m, {whole}), other);
  EXPECT_EQ(switch_matching(c6, m, {}), m);
}

TEST(SwitchMatchingTest, RejectsBadCycles) {
  Graph k33 = complete_bipartite(3, 3);
  Matching m = matching_of(k33, {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}});
  // a1 b2 a2 b1: a1b2 is not in M, b2a2 is, a2b1 is not, b1a1 is.
  Cycle ok = ids(k33, {"a1", "b2", "a2", "b1"});
  Cycle not_alternating = ids(k33, {"a1", "b2", "a3", "b3"});
  EXPECT_NO_THROW(switch_matching(k33, m, {ok}));
  EXPECT_THROW(switch_matching(k33, m, {not_alternating}), Error);
  Cycle overlapping = ids(k33, {"a1", "b3", "a3", "b1"});
  try {
    switch_matching(k33, m, {ok, overlapping});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDisjoint);
  }
}

TEST(SwitchMatchingTest, FourCyclesOfK33GiveEnumeratedMatchings) {
  Graph k33 = complete_bipartite(3, 3);
  auto all = enumerate_perfect_matchings(k33);
  Matching m = matching_of(k33, {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}});
  int switched = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Cycle c = {i, 3 + j, j, 3 + i};  // a_i b_j a_j b_i
      Matching out = switch_matching(k33, m, {c});
      EXPECT_TRUE(is_perfect_matching(k33, out));
      EXPECT_NE(std::find(all.begin(), all.end(), out), all.end());
      ++switched;
    }
  }
  EXPECT_EQ(switched, 6);
}

TEST(MDirectionTest, SixCycleGivesDirectedTriangle) {
  // a1 b1 a2 b2 a3 b3 around the cycle.
  Graph g;
  for (const char* name : {"a1", "b1", "a2", "b2", "a3", "b3"}) g.add_vertex(name);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  g.compute_bipartition();
  Matching m = matching_of(g, {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}});
  auto dir = m_direction(g, m);
  EXPECT_EQ(dir.digraph.num_vertices(), 3);
  EXPECT_EQ(dir.digraph.num_arcs(), 3);
  EXPECT_TRUE(are_isomorphic(dir.digraph, directed_cycle(3)));
  EXPECT_EQ(dir.digraph.name(0), "a1~b1");
}

TEST(MDirectionTest, K33GivesBidirectedTriangle) {
  Graph k33 = complete_bipartite(3, 3);
  for (const auto& m : enumerate_perfect_matchings(k33)) {
    auto dir = m_direction(k33, m);
    EXPECT_TRUE(are_isomorphic(dir.digraph, bidirected_complete(3)));
  }
}

// Two matched 4-cycles: on the left a_i b_{i+1}, on the right a_{i+1} b_i,
// so the two directed 4-cycles run in opposite index order.
TEST(MDirectionTest, TwoOppositeFourCycles) {
  Graph g;
  for (int i = 1; i <= 8; ++i) {
    g.add_vertex("a" + std::to_string(i));
    g.add_vertex("b" + std::to_string(i));
  }
  auto a = [&](int i) { return g.index_of("a" + std::to_string(i)); };
  auto b = [&](int i) { return g.index_of("b" + std::to_string(i)); };
  Matching m;
  for (int i = 1; i <= 8; ++i) {
    g.add_edge(a(i), b(i));
    m.edges.emplace_back(a(i), b(i));
  }
  for (int i = 1; i <= 4; ++i) {
    g.add_edge(a(i), b(i % 4 + 1));
    g.add_edge(b(i + 4), a(i % 4 + 5));
  }
  ASSERT_TRUE(g.compute_bipartition());
  auto dir = m_direction(g, m);
  const Digraph& d = dir.digraph;
  auto v = [&](int i) { return d.index_of("a" + std::to_string(i) + "~b" + std::to_string(i)); };
  EXPECT_EQ(d.num_arcs(), 8);
  for (int i = 1; i <= 4; ++i) {
    EXPECT_TRUE(d.has_arc(v(i), v(i % 4 + 1)));
    EXPECT_TRUE(d.has_arc(v(i % 4 + 5), v(i + 4)));
  }
}

TEST(MDirectionTest, Errors) {
  Graph c6 = cycle_graph(6);
  Matching partial = matching_of(c6, {{"v1", "v2"}});
  EXPECT_THROW(m_direction(c6, partial), Error);
  Graph k4 = testing::complete_graph(4);
  Matching m;
  m.edges = {Edge(0, 1), Edge(2, 3)};
  try {
    m_direction(k4, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBipartite);
  }
}

TEST(SplitDigraphTest, InverseExamples) {
  auto tri = split_digraph(directed_cycle(3));
  EXPECT_TRUE(are_isomorphic(tri.graph, cycle_graph(6)));
  EXPECT_TRUE(is_perfect_matching(tri.graph, tri.matching));
  auto full = split_digraph(bidirected_complete(3));
  EXPECT_TRUE(are_isomorphic(full.graph, complete_bipartite(3, 3)));
  EXPECT_THROW(split_digraph(testing::directed_path(3)), Error);
}

TEST(SplitDigraphTest, RoundTripsOnRandomStronglyConnectedDigraphs) {
  std::mt19937 rng(29);
  std::bernoulli_distribution coin(0.4);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    int n = 1 + trial % 6;
    Digraph d(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && coin(rng)) d.add_arc(i, j);
      }
    }
    if (!d.is_strongly_connected()) continue;
    ++checked;
    auto split = split_digraph(d);
    EXPECT_TRUE(is_matching_covered(split.graph));
    auto dir = m_direction(split.graph, split.matching);
    EXPECT_TRUE(are_isomorphic(dir.digraph, d));
    // And the other way around, as matched graphs.
    auto again = split_digraph(dir.digraph);
    EXPECT_TRUE(are_isomorphic(again.graph, again.matching, split.graph, split.matching));
  }
  EXPECT_GE(checked, 100);
}

TEST(IsomorphismTest, DistinguishesNonIsomorphic) {
  Digraph a = directed_cycle(4);
  Digraph b(4);
  b.add_arc(0, 1);
  b.add_arc(1, 0);
  b.add_arc(2, 3);
  b.add_arc(3, 2);
  EXPECT_FALSE(are_isomorphic(a, b));
  Digraph c(4);
  for (int i = 0; i < 4; ++i) c.add_arc((i + 1) % 4, i);
  EXPECT_TRUE(are_isomorphic(a, c));
}

TEST(IsomorphismTest, AgreesWithPermutationSearch) {
  std::mt19937 rng(31);
  std::bernoulli_distribution coin(0.35);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 5;
    Digraph a(n);
    Digraph b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (coin(rng)) a.add_arc(i, j);
        if (coin(rng)) b.add_arc(i, j);
      }
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    bool expected = false;
    do {
      bool same = a.num_arcs() == b.num_arcs();
      for (const Arc& arc : a.arcs()) same = same && b.has_arc(perm[arc.tail], perm[arc.head]);
      expected = expected || same;
    } while (!expected && std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(are_isomorphic(a, b), expected);
    // A shuffled copy is always isomorphic.
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph c(n);
    for (const Arc& arc : a.arcs()) c.add_arc(perm[arc.tail], perm[arc.head]);
    EXPECT_TRUE(are_isomorphic(a, c));
  }
}

}  // namespace
}  // namespace matchwidth
