#include "matchwidth/transforms.h"

#include <algorithm>

#include "matchwidth/error.h"
#include "matchwidth/matching.h"

namespace matchwidth {

namespace {

void require_perfect(const Graph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) throw Error(ErrorCode::kNotPerfect, "matching is not perfect");
}

// Leaf node of every item.
std::vector<int> leaf_of(const CubicDecomposition& cd, int num_items) {
  std::vector<int> out(num_items, -1);
  for (int t = 0; t < cd.num_nodes(); ++t) {
    int item = cd.leaf_item[t];
    if (item >= 0) out[item] = t;
  }
  return out;
}

int common_neighbor(const CubicDecomposition& cd, int s, int t) {
  for (int a : cd.adjacency[s]) {
    if (std::find(cd.adjacency[t].begin(), cd.adjacency[t].end(), a) != cd.adjacency[t].end()) {
      return a;
    }
  }
  return -1;
}

// Items in order of a DFS from node 0 that visits neighbours in index order.
std::vector<int> leaf_order(const CubicDecomposition& cd) {
  std::vector<int> out;
  std::vector<char> seen(cd.num_nodes(), 0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (seen[t]) continue;
    seen[t] = 1;
    if (cd.leaf_item[t] >= 0) out.push_back(cd.leaf_item[t]);
    auto next = cd.adjacency[t];
    std::sort(next.rbegin(), next.rend());
    for (int s : next) {
      if (!seen[s]) stack.push_back(s);
    }
  }
  return out;
}

}  // namespace

std::vector<int> conformalize_shore(const Graph& g, const Matching& m, std::span<const int> x) {
  require_perfect(g, m);
  const int n = g.num_vertices();
  require_valid_shore(n, x);
  auto in = membership(n, x);
  auto mate = m.mates(n);
  std::vector<int> out(x.begin(), x.end());
  for (int v : x) {
    if (!in[mate[v]]) out.push_back(mate[v]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubicDecomposition pmd_to_conformal_pmd(const Graph& g, const Matching& m,
                                        const CubicDecomposition& pd) {
  require_perfect(g, m);
  const int n = g.num_vertices();
  validate_cubic(pd, n);
  CubicDecomposition out = pd;
  out.kind = DecompositionKind::kMatching;
  if (n <= 2) return out;
  auto mate = m.mates(n);
  auto order = leaf_order(pd);
  std::vector<char> done(n, 0);
  for (int x : order) {
    if (done[x]) continue;
    int y = mate[x];
    done[x] = done[y] = 1;
    auto leaf = leaf_of(out, n);
    int lx = leaf[x];
    int ly = leaf[y];
    if (common_neighbor(out, lx, ly) >= 0) continue;
    // Detach the leaf of y and suppress its former neighbour.
    int p = out.adjacency[ly][0];
    out.remove_edge(ly, p);
    if (out.adjacency[p].size() == 2) {
      int a = out.adjacency[p][0];
      int b = out.adjacency[p][1];
      out.remove_edge(p, a);
      out.remove_edge(p, b);
      out.add_edge(a, b);
    }
    // The old leaf of x becomes the common parent; ly is reused for y.
    out.leaf_item[lx] = -1;
    out.add_edge(lx, out.add_node(x));
    out.add_edge(lx, ly);
  }
  out.compact();
  return out;
}

CubicDecomposition conformal_pmd_to_cycle_decomp(const Graph& g, const Matching& m,
                                                 const CubicDecomposition& pd) {
  MDirection dir = m_direction(g, m);
  const int n = g.num_vertices();
  validate_cubic(pd, n);
  CubicDecomposition out;
  out.kind = DecompositionKind::kCycle;
  if (n == 2) {
    out.add_node(0);
    return out;
  }
  auto leaf = leaf_of(pd, n);
  std::vector<int> item(pd.num_nodes(), -1);
  for (int v = 0; v < dir.digraph.num_vertices(); ++v) {
    int a = dir.a_end[v];
    int b = dir.b_end[v];
    int t = common_neighbor(pd, leaf[a], leaf[b]);
    if (t < 0) {
      throw Error(ErrorCode::kMatchedPairNotSiblings,
                  "leaves of " + g.name(a) + " and " + g.name(b) + " have no common neighbour");
    }
    item[t] = v;
  }
  std::vector<int> map(pd.num_nodes(), -1);
  for (int t = 0; t < pd.num_nodes(); ++t) {
    if (pd.leaf_item[t] < 0) map[t] = out.add_node(item[t]);
  }
  for (auto [a, b] : pd.edges()) {
    if (map[a] >= 0 && map[b] >= 0) out.add_edge(map[a], map[b]);
  }
  return out;
}

CubicDecomposition cycle_decomp_to_conformal_pmd(const Graph& g, const Matching& m,
                                                 const CubicDecomposition& cd) {
  MDirection dir = m_direction(g, m);
  const int k = dir.digraph.num_vertices();
  validate_cubic(cd, k);
  CubicDecomposition out;
  out.kind = DecompositionKind::kMatching;
  if (k == 1) {
    out.add_node(dir.a_end[0]);
    out.add_edge(0, out.add_node(dir.b_end[0]));
    return out;
  }
  for (int t = 0; t < cd.num_nodes(); ++t) out.add_node();
  for (auto [a, b] : cd.edges()) out.add_edge(a, b);
  for (int t = 0; t < cd.num_nodes(); ++t) {
    int v = cd.leaf_item[t];
    if (v < 0) continue;
    out.add_edge(t, out.add_node(dir.a_end[v]));
    out.add_edge(t, out.add_node(dir.b_end[v]));
  }
  return out;
}

}  // namespace matchwidth
