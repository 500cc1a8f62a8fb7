#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matchwidth/graph.h"

namespace matchwidth {

struct MatchingPorosity {
  int value = 0;
  Matching witness;
};

struct CyclePorosity {
  int value = 0;
  std::vector<Cycle> witness;  // pairwise vertex-disjoint directed cycles
};

// Side assignment for generalised cuts: 0 / 1 for the two shores, -1 for
// vertices not yet placed. An edge counts as crossing only when both of its
// endpoints are placed on different sides, so the value on a partial
// assignment is a lower bound for every completion of it.
using SideVector = std::vector<std::int8_t>;
SideVector sides_from_shore(int n, std::span<const int> shore);

// max |M ∩ ∂(X)| over perfect matchings M, via maximum-weight perfect
// matching. Throws kNoPerfectMatching / kInvalidShore.
MatchingPorosity matching_porosity(const Graph& g, std::span<const int> shore);
MatchingPorosity matching_porosity(const Graph& g, const SideVector& side);

// Same quantity by enumerating every perfect matching.
int matching_porosity_bruteforce(const Graph& g, std::span<const int> shore,
                                 std::int64_t cap = 1'000'000);

// Maximum number of cut arcs on a family of vertex-disjoint directed cycles,
// via a minimum-cost assignment between out- and in-copies of the vertices.
CyclePorosity cycle_porosity(const Digraph& d, std::span<const int> shore);
CyclePorosity cycle_porosity(const Digraph& d, const SideVector& side);

struct CycleOracleOptions {
  int vertex_cap = 8;
  std::int64_t cycle_cap = 100'000;
  bool edge_disjoint = false;
};

// All simple directed cycles, each once, starting at its smallest vertex.
// Digons are included. Throws kCapExceeded past `cap`.
std::vector<Cycle> enumerate_simple_cycles(const Digraph& d, std::int64_t cap = 100'000);

// Exhaustive oracle: enumerates the simple cycles once, then evaluates any
// number of shores by searching all disjoint subfamilies.
class CycleOracle {
 public:
  explicit CycleOracle(const Digraph& d, CycleOracleOptions options = {});
  int porosity(std::span<const int> shore) const;
  const std::vector<Cycle>& cycles() const { return cycles_; }

 private:
  int vertex_disjoint(const std::vector<int>& weight) const;
  int edge_disjoint(const std::vector<int>& weight) const;

  const Digraph& d_;
  CycleOracleOptions options_;
  std::vector<Cycle> cycles_;
  std::vector<std::uint32_t> vertex_mask_;
  std::vector<std::vector<int>> arc_ids_;
};

int cycle_porosity_bruteforce(const Digraph& d, std::span<const int> shore,
                              CycleOracleOptions options = {});

// Certificate recounts.
int crossing_count(const Graph& g, std::span<const int> shore, const Matching& m);
int crossing_count(const Digraph& d, std::span<const int> shore, const std::vector<Cycle>& cycles);
bool is_disjoint_cycle_family(const Digraph& d, const std::vector<Cycle>& cycles);

}  // namespace matchwidth
