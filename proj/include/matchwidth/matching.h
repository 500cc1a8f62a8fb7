#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matchwidth/graph.h"

namespace matchwidth {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

// Maximum-weight matching in a general graph (Edmonds' blossom algorithm
// with dual variables, O(n^3)). With `max_cardinality` set, the result is
// a maximum-weight matching among the maximum-cardinality ones. Weights
// must be integers. Returns mate[v] or -1.
std::vector<int> max_weight_matching(int num_vertices,
                                     std::span<const WeightedEdge> edges,
                                     bool max_cardinality);

// Minimum-cost perfect assignment of rows to columns on a square cost
// matrix (Hungarian method with potentials). Returns column per row.
std::vector<int> min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost);

// Some perfect matching of g, or an empty optional-like result (ok=false).
struct MatchingResult {
  bool ok = false;
  Matching matching;
};
MatchingResult find_perfect_matching(const Graph& g);
bool has_perfect_matching(const Graph& g);

inline constexpr std::int64_t kDefaultMatchingCap = 1'000'000;

// Every perfect matching exactly once. Throws kCapExceeded past `cap`.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g,
                                                  std::int64_t cap = kDefaultMatchingCap);

bool is_matching_covered(const Graph& g);
bool is_conformal(const Graph& g, std::span<const int> s);
// No edge of m crosses ∂(s).
bool is_m_conformal(const Graph& g, const Matching& m, std::span<const int> s);

// Symmetric difference of m with the edges of the given cycles.
Matching switch_matching(const Graph& g, const Matching& m,
                         const std::vector<Cycle>& cycles);

}  // namespace matchwidth
