#include "matchwidth/porosity.h"

#include <algorithm>
#include <functional>

#include "matchwidth/error.h"
#include "matchwidth/matching.h"

namespace matchwidth {

SideVector sides_from_shore(int n, std::span<const int> shore) {
  require_valid_shore(n, shore);
  SideVector side(n, 1);
  for (int v : shore) side[v] = 0;
  return side;
}

namespace {

bool crosses(const SideVector& side, int u, int v) {
  return side[u] >= 0 && side[v] >= 0 && side[u] != side[v];
}

}  // namespace

MatchingPorosity matching_porosity(const Graph& g, const SideVector& side) {
  const int n = g.num_vertices();
  // Weight 1 + [crossing]: every perfect matching has n/2 edges, so the
  // heaviest one among maximum-cardinality matchings maximises crossings.
  std::vector<WeightedEdge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, crosses(side, e.u, e.v) ? 2 : 1});
  auto mate = max_weight_matching(n, edges, true);
  MatchingPorosity result;
  for (int v = 0; v < n; ++v) {
    if (mate[v] < 0) throw Error(ErrorCode::kNoPerfectMatching, "graph has no perfect matching");
    if (v < mate[v]) {
      result.witness.edges.emplace_back(v, mate[v]);
      if (crosses(side, v, mate[v])) ++result.value;
    }
  }
  return result;
}

MatchingPorosity matching_porosity(const Graph& g, std::span<const int> shore) {
  return matching_porosity(g, sides_from_shore(g.num_vertices(), shore));
}

int matching_porosity_bruteforce(const Graph& g, std::span<const int> shore, std::int64_t cap) {
  require_valid_shore(g.num_vertices(), shore);
  auto matchings = enumerate_perfect_matchings(g, cap);
  if (matchings.empty()) {
    throw Error(ErrorCode::kNoPerfectMatching, "graph has no perfect matching");
  }
  int best = 0;
  for (const Matching& m : matchings) best = std::max(best, crossing_count(g, shore, m));
  return best;
}

CyclePorosity cycle_porosity(const Digraph& d, const SideVector& side) {
  const int n = d.num_vertices();
  // Row v is the out-copy v+, column w the in-copy w-. A perfect
  // assignment is a successor function; its non-fixed points form
  // vertex-disjoint cycles. Cost 0 for crossing arcs, 1 for any other
  // arc or an idle vertex, so cost = n - (crossing arcs used).
  const std::int64_t forbidden = 4 * (static_cast<std::int64_t>(n) + 1);
  std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, forbidden));
  for (int v = 0; v < n; ++v) cost[v][v] = 1;
  for (const Arc& a : d.arcs()) cost[a.tail][a.head] = crosses(side, a.tail, a.head) ? 0 : 1;
  auto succ = min_cost_assignment(cost);

  CyclePorosity result;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s] || succ[s] == s) continue;
    Cycle cycle;
    for (int v = s; !seen[v]; v = succ[v]) {
      seen[v] = 1;
      cycle.push_back(v);
      if (crosses(side, v, succ[v])) ++result.value;
    }
    // Cycles without a crossing arc carry no weight; drop them from the
    // certificate to keep it minimal.
    bool useful = false;
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (crosses(side, cycle[i], cycle[(i + 1) % cycle.size()])) useful = true;
    }
    if (useful) result.witness.push_back(std::move(cycle));
  }
  return result;
}

CyclePorosity cycle_porosity(const Digraph& d, std::span<const int> shore) {
  return cycle_porosity(d, sides_from_shore(d.num_vertices(), shore));
}

std::vector<Cycle> enumerate_simple_cycles(const Digraph& d, std::int64_t cap) {
  const int n = d.num_vertices();
  std::vector<Cycle> cycles;
  std::vector<char> on_path(n, 0);
  Cycle path;
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int w : d.out_neighbors(v)) {
      if (w == start) {
        if (static_cast<std::int64_t>(cycles.size()) >= cap) {
          throw Error(ErrorCode::kCapExceeded,
                      "more than " + std::to_string(cap) + " simple cycles");
        }
        cycles.push_back(path);
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        extend(start, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(s, s);
    on_path[s] = 0;
  }
  return cycles;
}

CycleOracle::CycleOracle(const Digraph& d, CycleOracleOptions options)
    : d_(d), options_(options) {
  if (d.num_vertices() > options.vertex_cap) {
    throw Error(ErrorCode::kCapExceeded, "cycle oracle limited to " +
                                             std::to_string(options.vertex_cap) + " vertices");
  }
  cycles_ = enumerate_simple_cycles(d, options.cycle_cap);
  for (const Cycle& c : cycles_) {
    std::uint32_t mask = 0;
    std::vector<int> arcs;
    for (size_t i = 0; i < c.size(); ++i) {
      mask |= 1u << c[i];
      arcs.push_back(d.arc_index(c[i], c[(i + 1) % c.size()]));
    }
    vertex_mask_.push_back(mask);
    arc_ids_.push_back(std::move(arcs));
  }
}

int CycleOracle::porosity(std::span<const int> shore) const {
  auto side = sides_from_shore(d_.num_vertices(), shore);
  std::vector<int> weight(cycles_.size(), 0);
  for (size_t i = 0; i < cycles_.size(); ++i) {
    const Cycle& c = cycles_[i];
    for (size_t j = 0; j < c.size(); ++j) {
      if (side[c[j]] != side[c[(j + 1) % c.size()]]) ++weight[i];
    }
  }
  return options_.edge_disjoint ? edge_disjoint(weight) : vertex_disjoint(weight);
}

int CycleOracle::vertex_disjoint(const std::vector<int>& weight) const {
  // best[mask]: heaviest family using only vertices of mask. The lowest
  // vertex of mask is either unused or lies on exactly one chosen cycle.
  const int n = d_.num_vertices();
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::vector<int>> by_lowest(n);
  for (size_t i = 0; i < cycles_.size(); ++i) {
    by_lowest[cycles_[i].front()].push_back(static_cast<int>(i));
  }
  // Cycles start at their smallest vertex, so a cycle inside mask through
  // mask's lowest vertex is filed under that vertex.
  std::vector<int> best(static_cast<size_t>(full) + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int v = __builtin_ctz(mask);
    int value = best[mask & (mask - 1)];
    for (int i : by_lowest[v]) {
      if ((vertex_mask_[i] & mask) == vertex_mask_[i]) {
        value = std::max(value, weight[i] + best[mask & ~vertex_mask_[i]]);
      }
    }
    best[mask] = value;
  }
  return best[full];
}

int CycleOracle::edge_disjoint(const std::vector<int>& weight) const {
  std::vector<char> used(d_.num_arcs(), 0);
  int best = 0;
  std::function<void(size_t, int)> search = [&](size_t i, int value) {
    best = std::max(best, value);
    if (i == cycles_.size()) return;
    bool free = true;
    for (int a : arc_ids_[i]) free = free && !used[a];
    if (free && weight[i] > 0) {
      for (int a : arc_ids_[i]) used[a] = 1;
      search(i + 1, value + weight[i]);
      for (int a : arc_ids_[i]) used[a] = 0;
    }
    search(i + 1, value);
  };
  search(0, 0);
  return best;
}

int cycle_porosity_bruteforce(const Digraph& d, std::span<const int> shore,
                              CycleOracleOptions options) {
  return CycleOracle(d, options).porosity(shore);
}

int crossing_count(const Graph& g, std::span<const int> shore, const Matching& m) {
  auto in = membership(g.num_vertices(), shore);
  int count = 0;
  for (const Edge& e : m.edges) count += in[e.u] != in[e.v];
  return count;
}

int crossing_count(const Digraph& d, std::span<const int> shore,
                   const std::vector<Cycle>& cycles) {
  auto in = membership(d.num_vertices(), shore);
  int count = 0;
  for (const Cycle& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) count += in[c[i]] != in[c[(i + 1) % c.size()]];
  }
  return count;
}

bool is_disjoint_cycle_family(const Digraph& d, const std::vector<Cycle>& cycles) {
  std::vector<char> used(d.num_vertices(), 0);
  for (const Cycle& c : cycles) {
    if (c.size() < 2) return false;
    for (size_t i = 0; i < c.size(); ++i) {
      int v = c[i];
      if (v < 0 || v >= d.num_vertices() || used[v]) return false;
      used[v] = 1;
      if (!d.has_arc(v, c[(i + 1) % c.size()])) return false;
    }
  }
  return true;
}

}  // namespace matchwidth
