#include "matchwidth/matching.h"

#include <algorithm>
#include <limits>
#include <set>

#include "matchwidth/error.h"

namespace matchwidth {

std::vector<int> min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  // Classic O(n^3) shortest augmenting path formulation, 1-based internally.
  const int n = static_cast<int>(cost.size());
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0);
  std::vector<std::int64_t> v(n + 1, 0);
  std::vector<int> p(n + 1, 0);
  std::vector<int> way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0];
      std::int64_t delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> assignment(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] > 0) assignment[p[j] - 1] = j - 1;
  }
  return assignment;
}

MatchingResult find_perfect_matching(const Graph& g) {
  MatchingResult result;
  const int n = g.num_vertices();
  if (n % 2 == 1) return result;
  std::vector<WeightedEdge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 1});
  auto mate = max_weight_matching(n, edges, true);
  for (int v = 0; v < n; ++v) {
    if (mate[v] < 0) return result;
    if (v < mate[v]) result.matching.edges.emplace_back(v, mate[v]);
  }
  result.ok = true;
  return result;
}

bool has_perfect_matching(const Graph& g) { return find_perfect_matching(g).ok; }

namespace {

// Recursion on the lowest uncovered vertex: it must be matched to one of
// its uncovered neighbours, which partitions the matchings.
void enumerate_rec(const Graph& g, std::vector<char>& covered, std::vector<Edge>& current,
                   std::vector<Matching>& out, std::int64_t cap) {
  int v = 0;
  while (v < g.num_vertices() && covered[v]) ++v;
  if (v == g.num_vertices()) {
    if (static_cast<std::int64_t>(out.size()) >= cap) {
      throw Error(ErrorCode::kCapExceeded,
                  "more than " + std::to_string(cap) + " perfect matchings");
    }
    out.push_back(Matching{current});
    return;
  }
  covered[v] = 1;
  for (int w : g.neighbors(v)) {
    if (covered[w]) continue;
    covered[w] = 1;
    current.emplace_back(v, w);
    enumerate_rec(g, covered, current, out, cap);
    current.pop_back();
    covered[w] = 0;
  }
  covered[v] = 0;
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::int64_t cap) {
  std::vector<Matching> out;
  if (g.num_vertices() % 2 == 1 || g.num_vertices() == 0) return out;
  std::vector<char> covered(g.num_vertices(), 0);
  std::vector<Edge> current;
  enumerate_rec(g, covered, current, out, cap);
  return out;
}

bool is_matching_covered(const Graph& g) {
  if (g.num_vertices() == 0 || !g.is_connected()) return false;
  if (!has_perfect_matching(g)) return false;
  for (const Edge& e : g.edges()) {
    const int removed[2] = {e.u, e.v};
    if (!has_perfect_matching(remove_vertices(g, removed))) return false;
  }
  return true;
}

bool is_conformal(const Graph& g, std::span<const int> s) {
  return has_perfect_matching(remove_vertices(g, s));
}

bool is_m_conformal(const Graph& g, const Matching& m, std::span<const int> s) {
  auto in = membership(g.num_vertices(), s);
  for (const Edge& e : m.edges) {
    if (in[e.u] != in[e.v]) return false;
  }
  return true;
}

Matching switch_matching(const Graph& g, const Matching& m, const std::vector<Cycle>& cycles) {
  const int n = g.num_vertices();
  auto mate = m.mates(n);
  std::vector<char> used(n, 0);
  std::set<Edge> cycle_edges;
  for (const Cycle& c : cycles) {
    const int len = static_cast<int>(c.size());
    if (len < 4 || len % 2 == 1) {
      throw Error(ErrorCode::kNotAlternating, "cycle of odd or trivial length");
    }
    for (int v : c) {
      if (v < 0 || v >= n) throw Error(ErrorCode::kInvalidInput, "cycle vertex out of range");
      if (used[v]) throw Error(ErrorCode::kNotDisjoint, "cycles share vertex " + g.name(v));
      used[v] = 1;
    }
    // Either the even- or the odd-indexed edges must all be matching edges.
    int parity = -1;
    for (int i = 0; i < len; ++i) {
      int a = c[i];
      int b = c[(i + 1) % len];
      if (!g.has_edge(a, b)) {
        throw Error(ErrorCode::kInvalidInput,
                    "cycle uses a non-edge " + g.name(a) + " " + g.name(b));
      }
      bool in_m = mate[a] == b;
      if (in_m) {
        if (parity == -1) parity = i % 2;
        if (parity != i % 2) throw Error(ErrorCode::kNotAlternating, "two matching edges in a row");
      }
    }
    if (parity == -1) throw Error(ErrorCode::kNotAlternating, "cycle contains no matching edge");
    for (int i = 0; i < len; ++i) {
      cycle_edges.insert(Edge(c[i], c[(i + 1) % len]));
    }
    for (int i = parity; i < len; i += 2) {
      if (mate[c[i]] != c[(i + 1) % len]) {
        throw Error(ErrorCode::kNotAlternating, "cycle is not M-alternating");
      }
    }
  }
  Matching out;
  for (const Edge& e : m.edges) {
    if (!cycle_edges.count(e)) out.edges.push_back(e);
  }
  for (const Edge& e : cycle_edges) {
    if (!m.contains(e)) out.edges.push_back(e);
  }
  return out;
}

}  // namespace matchwidth
