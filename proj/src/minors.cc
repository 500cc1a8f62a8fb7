#include "matchwidth/minors.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "matchwidth/error.h"
#include "matchwidth/isomorphism.h"
#include "matchwidth/matching.h"

namespace matchwidth {

Digraph reverse(const Digraph& d) {
  Digraph out;
  for (int v = 0; v < d.num_vertices(); ++v) out.add_vertex(d.name(v));
  for (const Arc& a : d.arcs()) out.add_arc(a.head, a.tail);
  return out;
}

Digraph delete_arc(const Digraph& d, int tail, int head) {
  if (!d.has_arc(tail, head)) throw Error(ErrorCode::kInvalidInput, "no such arc");
  Digraph out;
  for (int v = 0; v < d.num_vertices(); ++v) out.add_vertex(d.name(v));
  for (const Arc& a : d.arcs()) {
    if (a.tail != tail || a.head != head) out.add_arc(a.tail, a.head);
  }
  return out;
}

bool is_butterfly_contractible(const Digraph& d, int tail, int head) {
  if (!d.has_arc(tail, head)) {
    throw Error(ErrorCode::kInvalidInput, "no arc " + d.name(tail) + " -> " + d.name(head));
  }
  return d.out_degree(tail) == 1 || d.in_degree(head) == 1;
}

Digraph butterfly_contract(const Digraph& d, int tail, int head) {
  if (!is_butterfly_contractible(d, tail, head)) {
    throw Error(ErrorCode::kNotContractible,
                "arc " + d.name(tail) + " -> " + d.name(head) + " is not butterfly contractible");
  }
  const int keep = std::min(tail, head);
  const int gone = std::max(tail, head);
  std::vector<int> map(d.num_vertices());
  Digraph out;
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (v == gone) continue;
    map[v] = out.add_vertex(v == keep ? d.name(tail) + "+" + d.name(head) : d.name(v));
  }
  map[gone] = map[keep];
  for (const Arc& a : d.arcs()) {
    int t = map[a.tail];
    int h = map[a.head];
    if (t != h) out.add_arc(t, h);
  }
  return out;
}

Graph bicontract(const Graph& g, int v) {
  if (g.degree(v) != 2) {
    throw Error(ErrorCode::kWrongDegree,
                g.name(v) + " has degree " + std::to_string(g.degree(v)) + ", expected 2");
  }
  int v1 = g.neighbors(v)[0];
  int v2 = g.neighbors(v)[1];
  if (v1 > v2) std::swap(v1, v2);
  const int keep = std::min(v, v1);
  std::vector<int> map(g.num_vertices(), -1);
  Graph out;
  std::vector<Side> sides;
  for (int w = 0; w < g.num_vertices(); ++w) {
    if ((w == v || w == v1 || w == v2) && w != keep) continue;
    std::string name = w == keep ? g.name(v1) + "+" + g.name(v) + "+" + g.name(v2) : g.name(w);
    map[w] = out.add_vertex(name);
    if (g.bipartition()) sides.push_back((*g.bipartition())[w == keep ? v1 : w]);
  }
  map[v] = map[v1] = map[v2] = map[keep];
  for (const Edge& e : g.edges()) {
    int a = map[e.u];
    int b = map[e.v];
    if (a != b) out.add_edge(a, b);
  }
  if (g.bipartition()) out.set_bipartition(std::move(sides));
  return out;
}

namespace {

// Working graph of the minor search. Vertices are sets of original vertices
// (as bitmasks), which makes states comparable across different orders of
// bicontraction.
struct State {
  std::vector<std::uint32_t> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices, a < b

  int degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v || b == v);
    return d;
  }

  std::string key() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> named;
    for (auto [a, b] : edges) {
      named.emplace_back(std::min(vertices[a], vertices[b]), std::max(vertices[a], vertices[b]));
    }
    std::sort(named.begin(), named.end());
    auto sorted_vertices = vertices;
    std::sort(sorted_vertices.begin(), sorted_vertices.end());
    std::string out;
    for (auto v : sorted_vertices) out += std::to_string(v) + ",";
    out += "|";
    for (auto [a, b] : named) out += std::to_string(a) + "-" + std::to_string(b) + ",";
    return out;
  }

  Graph to_graph() const {
    Graph out(static_cast<int>(vertices.size()));
    for (auto [a, b] : edges) out.add_edge(a, b);
    return out;
  }

  State bicontracted(int v) const {
    int v1 = -1;
    int v2 = -1;
    for (auto [a, b] : edges) {
      int other = a == v ? b : (b == v ? a : -1);
      if (other < 0) continue;
      (v1 < 0 ? v1 : v2) = other;
    }
    std::vector<int> map(vertices.size());
    State out;
    for (int w = 0; w < static_cast<int>(vertices.size()); ++w) {
      if (w == v || w == v2) continue;
      map[w] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(w == v1 ? vertices[v] | vertices[v1] | vertices[v2] : vertices[w]);
    }
    map[v] = map[v2] = map[v1];
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
      int x = map[a];
      int y = map[b];
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      if (seen.insert({x, y}).second) out.edges.emplace_back(x, y);
    }
    return out;
  }
};

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, const MinorSearchOptions& options)
      : g_(g), h_(h), options_(options) {}

  MinorWitness run() {
    const int n = g_.num_vertices();
    const int target = h_.num_vertices();
    // Removal sets in order of size, then of mask value.
    std::vector<std::uint32_t> masks;
    for (std::uint32_t r = 0; r < (1u << n); ++r) masks.push_back(r);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
      return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (std::uint32_t removed : masks) {
      int left = n - __builtin_popcount(removed);
      if (left < target || (left - target) % 2 != 0) continue;
      std::vector<char> keep(n, 0);
      for (int v = 0; v < n; ++v) keep[v] = !((removed >> v) & 1u);
      if (removed != 0) {
        std::vector<char> rest(n);
        for (int v = 0; v < n; ++v) rest[v] = !keep[v];
        if (!has_perfect_matching(induced_subgraph(g_, rest))) continue;
      }
      State start;
      std::vector<int> map(n, -1);
      for (int v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        map[v] = static_cast<int>(start.vertices.size());
        start.vertices.push_back(1u << v);
      }
      for (const Edge& e : g_.edges()) {
        if (keep[e.u] && keep[e.v]) start.edges.emplace_back(map[e.u], map[e.v]);
      }
      deleted_.clear();
      if (delete_phase(start, 0)) {
        for (int v = 0; v < n; ++v) {
          if ((removed >> v) & 1u) witness_.removed.push_back(v);
        }
        witness_.found = true;
        break;
      }
      if (witness_.budget_exhausted) break;
    }
    return witness_;
  }

 private:
  bool count_state() {
    if (++witness_.states > options_.state_budget) {
      witness_.budget_exhausted = true;
      return false;
    }
    return true;
  }

  // Chooses the deleted edges in increasing index order, then moves on to
  // bicontraction. Deleting after a bicontraction never gives anything new.
  bool delete_phase(const State& s, int next) {
    if (!count_state()) return false;
    const int contractions = (static_cast<int>(s.vertices.size()) - h_.num_vertices()) / 2;
    if (static_cast<int>(s.edges.size()) - 2 * contractions < h_.num_edges()) return false;
    contract_seen_.clear();
    if (contract_phase(s)) {
      for (auto [a, b] : deleted_) witness_.deleted.emplace_back(a, b);
      return true;
    }
    if (witness_.budget_exhausted) return false;
    for (int i = next; i < static_cast<int>(s.edges.size()); ++i) {
      State smaller = s;
      smaller.edges.erase(smaller.edges.begin() + i);
      deleted_.emplace_back(original(s.vertices[s.edges[i].first]),
                            original(s.vertices[s.edges[i].second]));
      if (delete_phase(smaller, i)) return true;
      deleted_.pop_back();
      if (witness_.budget_exhausted) return false;
    }
    return false;
  }

  bool contract_phase(const State& s) {
    if (!count_state()) return false;
    const int nv = static_cast<int>(s.vertices.size());
    if (static_cast<int>(s.edges.size()) < h_.num_edges()) return false;
    if (nv == h_.num_vertices()) {
      if (static_cast<int>(s.edges.size()) != h_.num_edges()) return false;
      return are_isomorphic(s.to_graph(), h_);
    }
    if (!contract_seen_.insert(s.key()).second) return false;
    for (int v = 0; v < nv; ++v) {
      if (s.degree(v) != 2) continue;
      State next = s.bicontracted(v);
      contracted_.push_back(label(s.vertices[v]));
      if (contract_phase(next)) {
        witness_.bicontracted = contracted_;
        return true;
      }
      contracted_.pop_back();
      if (witness_.budget_exhausted) return false;
    }
    return false;
  }

  static int original(std::uint32_t mask) { return __builtin_ctz(mask); }

  std::string label(std::uint32_t mask) const {
    std::string out;
    for (int v = 0; v < g_.num_vertices(); ++v) {
      if (!((mask >> v) & 1u)) continue;
      if (!out.empty()) out += "+";
      out += g_.name(v);
    }
    return out;
  }

  const Graph& g_;
  const Graph& h_;
  MinorSearchOptions options_;
  MinorWitness witness_;
  std::vector<std::pair<int, int>> deleted_;
  std::vector<std::string> contracted_;
  std::set<std::string> contract_seen_;
};

}  // namespace

MinorWitness matching_minor_check(const Graph& g, const Graph& h, const MinorSearchOptions& options) {
  if (g.num_vertices() > options.vertex_cap || g.num_vertices() > 30) {
    throw Error(ErrorCode::kCapExceeded, "matching minor search is capped at " +
                                             std::to_string(options.vertex_cap) + " vertices");
  }
  return MinorSearch(g, h, options).run();
}

}  // namespace matchwidth
