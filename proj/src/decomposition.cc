#include "matchwidth/decomposition.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "matchwidth/error.h"
#include "matchwidth/isomorphism.h"
#include "matchwidth/matching.h"
#include "matchwidth/porosity.h"

namespace matchwidth {

namespace {

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<int> collect(const std::vector<std::vector<int>>& adjacency, int start, int blocked) {
  std::vector<int> out;
  std::vector<char> seen(adjacency.size(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  if (blocked >= 0) seen[blocked] = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    out.push_back(t);
    for (int s : adjacency[t]) {
      if (!seen[s]) {
        seen[s] = 1;
        stack.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ----------------------------------------------------------- Arborescence

int Arborescence::add_child(int t) {
  int id = num_nodes();
  parent.push_back(t);
  children.emplace_back();
  children[t].push_back(id);
  return id;
}

Arborescence Arborescence::from_parents(const std::vector<int>& parents) {
  Arborescence tree;
  const int n = static_cast<int>(parents.size());
  if (n == 0) throw Error(ErrorCode::kInvalidDecomposition, "empty tree");
  tree.parent = parents;
  tree.children.assign(n, {});
  tree.root = -1;
  for (int t = 0; t < n; ++t) {
    int p = parents[t];
    if (p == -1) {
      if (tree.root != -1) throw Error(ErrorCode::kInvalidDecomposition, "more than one root");
      tree.root = t;
    } else if (p < 0 || p >= n || p == t) {
      throw Error(ErrorCode::kInvalidDecomposition, "bad parent of node " + std::to_string(t));
    } else {
      tree.children[p].push_back(t);
    }
  }
  if (tree.root == -1) throw Error(ErrorCode::kInvalidDecomposition, "no root");
  // Every node must be reachable from the root (rules out cycles).
  if (static_cast<int>(collect(tree.children, tree.root, -1).size()) != n) {
    throw Error(ErrorCode::kInvalidDecomposition, "parent map contains a cycle");
  }
  return tree;
}

Arborescence Arborescence::single_node() { return from_parents({-1}); }

TreeSplit split_tree(const Arborescence& tree, int tail, int head) {
  if (tail < 0 || head < 0 || tail >= tree.num_nodes() || head >= tree.num_nodes() ||
      tree.parent[head] != tail) {
    throw Error(ErrorCode::kEdgeNotInTree, "(" + std::to_string(tail) + ", " +
                                               std::to_string(head) + ") is not a tree edge");
  }
  TreeSplit split;
  split.second = collect(tree.children, head, -1);
  auto in = membership(tree.num_nodes(), split.second);
  for (int t = 0; t < tree.num_nodes(); ++t) {
    if (!in[t]) split.first.push_back(t);
  }
  return split;
}

TreeSplit split_tree(const std::vector<std::vector<int>>& adjacency, int t, int t_prime) {
  const int n = static_cast<int>(adjacency.size());
  if (t < 0 || t_prime < 0 || t >= n || t_prime >= n ||
      std::find(adjacency[t].begin(), adjacency[t].end(), t_prime) == adjacency[t].end()) {
    throw Error(ErrorCode::kEdgeNotInTree, std::to_string(t) + " " + std::to_string(t_prime) +
                                               " is not a tree edge");
  }
  return {collect(adjacency, t, t_prime), collect(adjacency, t_prime, t)};
}

// ------------------------------------------------------------------- DTDs

std::vector<int> DirTreeDecomposition::gamma(int t) const {
  std::vector<int> out = bags[t];
  if (t != tree.root) out.insert(out.end(), guards[t].begin(), guards[t].end());
  for (int c : tree.children[t]) out.insert(out.end(), guards[c].begin(), guards[c].end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> DirTreeDecomposition::below(int t) const {
  std::vector<int> out;
  for (int s : collect(tree.children, t, -1)) out.insert(out.end(), bags[s].begin(), bags[s].end());
  std::sort(out.begin(), out.end());
  return out;
}

int DirTreeDecomposition::width() const {
  int best = -1;
  for (int t = 0; t < tree.num_nodes(); ++t) {
    best = std::max(best, static_cast<int>(gamma(t).size()) - 1);
  }
  return best;
}

std::string DtdReport::summary(const Digraph& d) const {
  std::ostringstream out;
  if (valid) {
    out << "valid, width " << width;
    return out.str();
  }
  out << "invalid";
  for (const auto& e : bag_errors) out << "\n  bags: " << e;
  for (const auto& v : normality) {
    out << "\n  edge into node " << v.child << ": walk " << d.name(v.start) << " -> "
        << d.name(v.via) << " -> " << d.name(v.end) << " avoids the guard";
  }
  return out.str();
}

DtdReport validate_dtd(const Digraph& d, const DirTreeDecomposition& dtd) {
  DtdReport report;
  const int n = d.num_vertices();
  const int nodes = dtd.tree.num_nodes();
  if (static_cast<int>(dtd.bags.size()) != nodes || static_cast<int>(dtd.guards.size()) != nodes) {
    report.valid = false;
    report.bag_errors.push_back("bag/guard tables do not match the tree");
    return report;
  }
  std::vector<int> count(n, 0);
  for (int t = 0; t < nodes; ++t) {
    for (const auto* set : {&dtd.bags[t], &dtd.guards[t]}) {
      for (int v : *set) {
        if (v < 0 || v >= n) {
          report.valid = false;
          report.bag_errors.push_back("vertex index out of range at node " + std::to_string(t));
          return report;
        }
      }
    }
    for (int v : dtd.bags[t]) ++count[v];
  }
  for (int v = 0; v < n; ++v) {
    if (count[v] != 1) {
      report.valid = false;
      report.bag_errors.push_back("vertex " + d.name(v) + " lies in " + std::to_string(count[v]) +
                                  " bags");
    }
  }
  for (int c = 0; c < nodes; ++c) {
    if (c == dtd.tree.root) continue;
    auto in_s = membership(n, dtd.below(c));
    auto in_z = membership(n, dtd.guards[c]);
    std::vector<int> sources;
    for (int v = 0; v < n; ++v) {
      if (in_s[v] && !in_z[v]) sources.push_back(v);
    }
    if (sources.empty()) continue;
    auto fwd = d.reachable_from(sources, &in_z);
    auto bwd = d.reachable_from(sources, &in_z, true);
    for (int w = 0; w < n; ++w) {
      if (in_s[w] || in_z[w] || !fwd[w] || !bwd[w]) continue;
      NormalityViolation violation;
      violation.child = c;
      violation.via = w;
      const int from_w[1] = {w};
      auto reached = d.reachable_from(from_w, &in_z);
      auto reaching = d.reachable_from(from_w, &in_z, true);
      for (int s : sources) {
        if (violation.start < 0 && reaching[s]) violation.start = s;
        if (violation.end < 0 && reached[s]) violation.end = s;
      }
      report.valid = false;
      report.normality.push_back(violation);
      break;
    }
  }
  if (report.valid) report.width = dtd.width();
  return report;
}

bool is_normal(const Digraph& d, std::span<const int> s, std::span<const int> z) {
  const int n = d.num_vertices();
  auto in_s = membership(n, s);
  auto in_z = membership(n, z);
  std::vector<int> sources;
  for (int v : s) {
    if (!in_z[v]) sources.push_back(v);
  }
  auto fwd = d.reachable_from(sources, &in_z);
  auto bwd = d.reachable_from(sources, &in_z, true);
  for (int w = 0; w < n; ++w) {
    if (!in_s[w] && !in_z[w] && fwd[w] && bwd[w]) return false;
  }
  return true;
}

std::vector<int> minimal_guard(Rng& rng, const Digraph& d, std::span<const int> s) {
  const int n = d.num_vertices();
  auto in_s = membership(n, s);
  auto fwd = d.reachable_from(s);
  auto bwd = d.reachable_from(s, nullptr, true);
  std::vector<int> returning;
  for (int w = 0; w < n; ++w) {
    if (!in_s[w] && fwd[w] && bwd[w]) returning.push_back(w);
  }
  std::vector<int> guard(s.begin(), s.end());
  if (returning.size() < guard.size()) guard = returning;
  std::shuffle(guard.begin(), guard.end(), rng);
  for (size_t i = 0; i < guard.size();) {
    std::vector<int> smaller = guard;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_normal(d, s, smaller)) {
      guard = std::move(smaller);
    } else {
      ++i;
    }
  }
  std::sort(guard.begin(), guard.end());
  return guard;
}

DirTreeDecomposition random_dtd(Rng& rng, const Digraph& d, int num_nodes) {
  if (num_nodes < 1) throw Error(ErrorCode::kInvalidInput, "need at least one node");
  std::vector<int> parents(num_nodes, -1);
  for (int t = 1; t < num_nodes; ++t) {
    std::uniform_int_distribution<int> pick(0, t - 1);
    parents[t] = pick(rng);
  }
  DirTreeDecomposition dtd;
  dtd.tree = Arborescence::from_parents(parents);
  dtd.bags.assign(num_nodes, {});
  dtd.guards.assign(num_nodes, {});
  std::uniform_int_distribution<int> node(0, num_nodes - 1);
  for (int v = 0; v < d.num_vertices(); ++v) dtd.bags[node(rng)].push_back(v);
  for (int c = 0; c < num_nodes; ++c) {
    if (c != dtd.tree.root) dtd.guards[c] = minimal_guard(rng, d, dtd.below(c));
  }
  return dtd;
}

namespace {

void require_valid(const Digraph& d, const DirTreeDecomposition& dtd) {
  auto report = validate_dtd(d, dtd);
  if (!report.valid) throw Error(ErrorCode::kInvalidInput, report.summary(d));
}

}  // namespace

bool is_leaf_dtd(const DirTreeDecomposition& dtd) {
  for (int t = 0; t < dtd.tree.num_nodes(); ++t) {
    if (!dtd.tree.is_leaf(t) && !dtd.bags[t].empty()) return false;
  }
  return true;
}

DirTreeDecomposition to_leaf_dtd(const Digraph& d, const DirTreeDecomposition& dtd) {
  require_valid(d, dtd);
  DirTreeDecomposition out = dtd;
  const int original = dtd.tree.num_nodes();
  for (int t = 0; t < original; ++t) {
    if (dtd.tree.is_leaf(t) || dtd.bags[t].empty()) continue;
    out.tree.add_child(t);
    out.bags.push_back(dtd.bags[t]);
    out.guards.push_back(dtd.bags[t]);
    out.bags[t].clear();
  }
  return out;
}

namespace {

// Children of t in topological order of their regions (the bags below each
// child minus Γ(t)) with respect to reachability in D - Γ(t). Regions that
// are incomparable are ordered by their smallest vertex index.
std::vector<int> topological_children(const Digraph& d, const DirTreeDecomposition& dtd, int t,
                                      const std::vector<int>& gamma_t) {
  const auto& kids = dtd.tree.children[t];
  const int k = static_cast<int>(kids.size());
  const int n = d.num_vertices();
  auto in_z = membership(n, gamma_t);
  std::vector<int> region_of(n, -1);
  std::vector<int> key(k, n);
  std::vector<std::vector<int>> regions(k);
  for (int i = 0; i < k; ++i) {
    for (int v : dtd.below(kids[i])) {
      key[i] = std::min(key[i], v);
      if (!in_z[v]) {
        region_of[v] = i;
        regions[i].push_back(v);
      }
    }
  }
  std::vector<std::vector<char>> reaches(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    auto seen = d.reachable_from(regions[i], &in_z);
    for (int v = 0; v < n; ++v) {
      if (seen[v] && region_of[v] >= 0 && region_of[v] != i) reaches[i][region_of[v]] = 1;
    }
  }
  std::vector<int> order;
  std::vector<char> placed(k, 0);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    bool best_free = false;
    for (int i = 0; i < k; ++i) {
      if (placed[i]) continue;
      bool free = true;
      for (int j = 0; j < k; ++j) {
        if (!placed[j] && j != i && reaches[j][i]) free = false;
      }
      // Prefer sources; among them the smallest key, then the node id.
      auto rank = [&](int x) { return std::make_pair(key[x], kids[x]); };
      if (best < 0 || (free && !best_free) || (free == best_free && rank(i) < rank(best))) {
        best = i;
        best_free = free;
      }
    }
    placed[best] = 1;
    order.push_back(kids[best]);
  }
  return order;
}

}  // namespace

DirTreeDecomposition cubify(const Digraph& d, const DirTreeDecomposition& input) {
  require_valid(d, input);
  if (!is_leaf_dtd(input)) {
    throw Error(ErrorCode::kInvalidInput, "cubify expects a leaf decomposition");
  }
  DirTreeDecomposition dtd = input;
  const int original = input.tree.num_nodes();

  // Split every leaf bag into pendant singleton leaves guarded by
  // β(l) ∪ γ(x, l).
  for (int l = 0; l < original; ++l) {
    if (!input.tree.is_leaf(l) || input.bags[l].empty()) continue;
    std::vector<int> guard = sorted_union(input.bags[l], input.guards[l]);
    for (int v : input.bags[l]) {
      dtd.tree.add_child(l);
      dtd.bags.push_back({v});
      dtd.guards.push_back(guard);
    }
    dtd.bags[l].clear();
  }

  // Split nodes of too high degree into paths. The first path node reuses
  // t (and so keeps the edge from x); interior path edges are guarded by
  // Γ(t), which keeps every new below-set normal and leaves the width
  // unchanged.
  std::deque<int> queue{dtd.tree.root};
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    const int deg = static_cast<int>(dtd.tree.children[t].size()) + (t == dtd.tree.root ? 0 : 1);
    if (deg > 3) {
      std::vector<int> gamma_t = dtd.gamma(t);
      std::vector<int> order = topological_children(d, dtd, t, gamma_t);
      const int kids = static_cast<int>(order.size());
      dtd.tree.children[t].clear();
      int current = t;
      for (int i = 0; i < kids; ++i) {
        int c = order[i];
        if (i > 0 && i < kids - 1) {
          int next = dtd.tree.add_child(current);
          dtd.bags.emplace_back();
          dtd.guards.push_back(gamma_t);
          current = next;
        }
        dtd.tree.parent[c] = current;
        dtd.tree.children[current].push_back(c);
      }
    }
    for (int c : dtd.tree.children[t]) queue.push_back(c);
  }
  return dtd;
}

// ----------------------------------------------------- CubicDecomposition

int CubicDecomposition::add_node(int item) {
  adjacency.emplace_back();
  leaf_item.push_back(item);
  return num_nodes() - 1;
}

void CubicDecomposition::add_edge(int a, int b) {
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
}

void CubicDecomposition::remove_edge(int a, int b) {
  auto drop = [](std::vector<int>& list, int x) {
    auto it = std::find(list.begin(), list.end(), x);
    if (it != list.end()) list.erase(it);
  };
  drop(adjacency[a], b);
  drop(adjacency[b], a);
}

std::vector<std::pair<int, int>> CubicDecomposition::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_nodes(); ++a) {
    for (int b : adjacency[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> CubicDecomposition::leaves() const {
  std::vector<int> out;
  for (int t = 0; t < num_nodes(); ++t) {
    if (leaf_item[t] >= 0) out.push_back(t);
  }
  return out;
}

std::vector<int> CubicDecomposition::shore(int t, int t_prime) const {
  std::vector<int> items;
  for (int s : split_tree(adjacency, t, t_prime).first) {
    if (leaf_item[s] >= 0) items.push_back(leaf_item[s]);
  }
  std::sort(items.begin(), items.end());
  return items;
}

void CubicDecomposition::compact() {
  if (num_nodes() <= 1) return;
  std::vector<int> map(num_nodes(), -1);
  int next = 0;
  for (int t = 0; t < num_nodes(); ++t) {
    if (!adjacency[t].empty() || leaf_item[t] >= 0) map[t] = next++;
  }
  std::vector<std::vector<int>> adj(next);
  std::vector<int> items(next, -1);
  for (int t = 0; t < num_nodes(); ++t) {
    if (map[t] < 0) continue;
    items[map[t]] = leaf_item[t];
    for (int s : adjacency[t]) adj[map[t]].push_back(map[s]);
  }
  adjacency = std::move(adj);
  leaf_item = std::move(items);
}

void validate_cubic(const CubicDecomposition& cd, int num_items) {
  const int nodes = cd.num_nodes();
  if (static_cast<int>(cd.leaf_item.size()) != nodes) {
    throw Error(ErrorCode::kInvalidDecomposition, "leaf map size mismatch");
  }
  if (nodes == 0) throw Error(ErrorCode::kInvalidDecomposition, "empty tree");
  std::vector<int> seen(num_items, 0);
  for (int t = 0; t < nodes; ++t) {
    int item = cd.leaf_item[t];
    if (item < -1 || item >= num_items) {
      throw Error(ErrorCode::kLeafMapMismatch, "node " + std::to_string(t) + " maps outside V");
    }
    if (item >= 0 && seen[item]++) {
      throw Error(ErrorCode::kLeafMapMismatch, "item " + std::to_string(item) + " mapped twice");
    }
  }
  for (int v = 0; v < num_items; ++v) {
    if (!seen[v]) throw Error(ErrorCode::kLeafMapMismatch, "item " + std::to_string(v) + " unmapped");
  }
  int edge_count = 0;
  for (int t = 0; t < nodes; ++t) {
    std::set<int> distinct(cd.adjacency[t].begin(), cd.adjacency[t].end());
    if (distinct.size() != cd.adjacency[t].size() || distinct.count(t)) {
      throw Error(ErrorCode::kInvalidDecomposition, "loop or parallel edge at node " + std::to_string(t));
    }
    for (int s : cd.adjacency[t]) {
      if (s < 0 || s >= nodes ||
          std::find(cd.adjacency[s].begin(), cd.adjacency[s].end(), t) == cd.adjacency[s].end()) {
        throw Error(ErrorCode::kInvalidDecomposition, "asymmetric adjacency at node " + std::to_string(t));
      }
    }
    edge_count += static_cast<int>(cd.adjacency[t].size());
  }
  if (edge_count / 2 != nodes - 1 ||
      static_cast<int>(collect(cd.adjacency, 0, -1).size()) != nodes) {
    throw Error(ErrorCode::kInvalidDecomposition, "not a tree");
  }
  for (int t = 0; t < nodes; ++t) {
    int deg = static_cast<int>(cd.adjacency[t].size());
    bool leaf = cd.leaf_item[t] >= 0;
    if (nodes == 1) continue;
    if (leaf && deg != 1) {
      throw Error(ErrorCode::kInvalidDecomposition, "leaf node " + std::to_string(t) + " has degree " +
                                                        std::to_string(deg));
    }
    if (!leaf && deg != 3) {
      throw Error(ErrorCode::kInvalidDecomposition, "inner node " + std::to_string(t) + " has degree " +
                                                        std::to_string(deg));
    }
  }
  if (nodes == 1 && cd.leaf_item[0] < 0) {
    throw Error(ErrorCode::kLeafMapMismatch, "single node without an item");
  }
}

namespace {

template <typename Porosity>
WidthReport width_of(const CubicDecomposition& cd, int num_items, Porosity porosity) {
  validate_cubic(cd, num_items);
  WidthReport report;
  for (auto [a, b] : cd.edges()) {
    EdgePorosity row;
    row.a = a;
    row.b = b;
    row.shore = cd.shore(a, b);
    row.value = porosity(row.shore);
    report.width = std::max(report.width, row.value);
    report.edges.push_back(std::move(row));
  }
  return report;
}

}  // namespace

WidthReport decomposition_width(const Digraph& d, const CubicDecomposition& cd) {
  return width_of(cd, d.num_vertices(),
                  [&](const std::vector<int>& shore) { return cycle_porosity(d, shore).value; });
}

WidthReport decomposition_width(const Graph& g, const CubicDecomposition& cd) {
  return width_of(cd, g.num_vertices(),
                  [&](const std::vector<int>& shore) { return matching_porosity(g, shore).value; });
}

bool is_m_conformal_decomposition(const Graph& g, const Matching& m, const CubicDecomposition& cd) {
  validate_cubic(cd, g.num_vertices());
  for (auto [a, b] : cd.edges()) {
    if (cd.is_leaf(a) || cd.is_leaf(b)) continue;
    if (!is_m_conformal(g, m, cd.shore(a, b))) return false;
  }
  return true;
}

std::pair<int, int> find_balanced_edge(const CubicDecomposition& cd) {
  const int nodes = cd.num_nodes();
  const int total = static_cast<int>(cd.leaves().size());
  if (total < 3) throw Error(ErrorCode::kInvalidInput, "need at least three leaves");
  // leaves_below[t] with respect to an arbitrary root; the count on the far
  // side of edge (t, parent) is then total - leaves_below[t].
  std::vector<int> parent(nodes, -1);
  std::vector<int> order;
  std::vector<char> seen(nodes, 0);
  order.push_back(0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    for (int s : cd.adjacency[order[i]]) {
      if (!seen[s]) {
        seen[s] = 1;
        parent[s] = order[i];
        order.push_back(s);
      }
    }
  }
  std::vector<int> below(nodes, 0);
  for (int i = nodes - 1; i >= 0; --i) {
    int t = order[i];
    if (cd.is_leaf(t)) below[t] += 1;
    if (parent[t] >= 0) below[parent[t]] += below[t];
  }
  // Leaves on the side of s when the edge t s is removed.
  auto side_of = [&](int t, int s) { return parent[s] == t ? below[s] : total - below[t]; };
  for (int t = 0; t < nodes; ++t) {
    for (int s : cd.adjacency[t]) {
      if (2 * side_of(t, s) == total) return {std::min(t, s), std::max(t, s)};
    }
  }
  // Orient every edge towards its heavier side and walk to a sink.
  int t = 0;
  while (true) {
    int next = -1;
    for (int s : cd.adjacency[t]) {
      if (2 * side_of(t, s) > total) next = s;
    }
    if (next < 0) break;
    t = next;
  }
  int best = -1;
  for (int s : cd.adjacency[t]) {
    if (best < 0 || side_of(t, s) > side_of(t, best)) best = s;
  }
  return {std::min(t, best), std::max(t, best)};
}

void normalize_cubic(CubicDecomposition& cd) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < cd.num_nodes(); ++t) {
      int deg = static_cast<int>(cd.adjacency[t].size());
      if (cd.leaf_item[t] >= 0) continue;
      if (deg == 1) {
        cd.remove_edge(t, cd.adjacency[t][0]);
        changed = true;
      } else if (deg == 2) {
        int a = cd.adjacency[t][0];
        int b = cd.adjacency[t][1];
        cd.remove_edge(t, a);
        cd.remove_edge(t, b);
        cd.add_edge(a, b);
        changed = true;
      }
    }
  }
  cd.compact();
}

CubicDecomposition dtd_to_cycle_decomposition(const Digraph& d, const DirTreeDecomposition& dtd) {
  require_valid(d, dtd);
  const int nodes = dtd.tree.num_nodes();
  CubicDecomposition cd;
  cd.kind = DecompositionKind::kCycle;
  for (int t = 0; t < nodes; ++t) {
    int deg = static_cast<int>(dtd.tree.children[t].size()) + (t == dtd.tree.root ? 0 : 1);
    if (deg > 3) throw Error(ErrorCode::kInvalidInput, "decomposition is not subcubic");
    if (dtd.bags[t].size() > 1) throw Error(ErrorCode::kInvalidInput, "bag with more than one vertex");
    if (!dtd.bags[t].empty() && !dtd.tree.is_leaf(t)) {
      throw Error(ErrorCode::kInvalidInput, "vertex in an inner bag");
    }
    cd.add_node(dtd.bags[t].empty() ? -1 : dtd.bags[t][0]);
  }
  if (d.num_vertices() == 0) throw Error(ErrorCode::kInvalidInput, "empty digraph");
  for (int t = 0; t < nodes; ++t) {
    if (t != dtd.tree.root) cd.add_edge(dtd.tree.parent[t], t);
  }
  if (d.num_vertices() == 1) {
    CubicDecomposition single;
    single.kind = DecompositionKind::kCycle;
    single.add_node(0);
    return single;
  }
  normalize_cubic(cd);
  return cd;
}

CubicDecomposition random_cubic_decomposition(Rng& rng, int num_items, DecompositionKind kind) {
  if (num_items < 1) throw Error(ErrorCode::kInvalidInput, "need at least one item");
  std::vector<int> items(num_items);
  std::iota(items.begin(), items.end(), 0);
  std::shuffle(items.begin(), items.end(), rng);
  CubicDecomposition cd;
  cd.kind = kind;
  cd.add_node(items[0]);
  if (num_items == 1) return cd;
  cd.add_edge(0, cd.add_node(items[1]));
  for (int i = 2; i < num_items; ++i) {
    auto edges = cd.edges();
    std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
    auto [a, b] = edges[pick(rng)];
    cd.remove_edge(a, b);
    int mid = cd.add_node();
    int leaf = cd.add_node(items[i]);
    cd.add_edge(a, mid);
    cd.add_edge(mid, b);
    cd.add_edge(mid, leaf);
  }
  return cd;
}

CubicDecomposition caterpillar(const std::vector<int>& order, DecompositionKind kind) {
  CubicDecomposition cd;
  cd.kind = kind;
  const int n = static_cast<int>(order.size());
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "empty caterpillar");
  if (n <= 2) {
    cd.add_node(order[0]);
    if (n == 2) cd.add_edge(0, cd.add_node(order[1]));
    return cd;
  }
  // Spine nodes s_1 .. s_{n-2}; the first carries two leaves, the last two.
  std::vector<int> spine;
  for (int i = 0; i < n - 2; ++i) spine.push_back(cd.add_node());
  for (int i = 0; i + 1 < n - 2; ++i) cd.add_edge(spine[i], spine[i + 1]);
  cd.add_edge(spine[0], cd.add_node(order[0]));
  for (int i = 1; i < n - 1; ++i) cd.add_edge(spine[i - 1], cd.add_node(order[i]));
  cd.add_edge(spine[n - 3], cd.add_node(order[n - 1]));
  return cd;
}

bool same_decomposition(const CubicDecomposition& a, const CubicDecomposition& b) {
  if (a.num_nodes() != b.num_nodes() || a.kind != b.kind) return false;
  auto colored = [](const CubicDecomposition& cd) {
    ColoredDigraph c(cd.num_nodes());
    for (int t = 0; t < cd.num_nodes(); ++t) {
      c.vertex_color[t] = cd.leaf_item[t] + 1;
      for (int s : cd.adjacency[t]) c.arc[t][s] = 1;
    }
    return c;
  };
  return are_isomorphic(colored(a), colored(b));
}

}  // namespace matchwidth
