#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "matchwidth/decomposition.h"
#include "matchwidth/graph.h"
#include "matchwidth/porosity.h"

namespace matchwidth {

enum class SolveMode { kExact, kHeuristic };

struct SolveStats {
  std::int64_t partial_trees = 0;   // search nodes visited
  std::int64_t complete_trees = 0;  // full trees reached
  std::int64_t prunes = 0;
  std::int64_t cache_hits = 0;
  std::int64_t cache_misses = 0;
  double elapsed_ms = 0;
};

struct SolveResult {
  int width = 0;
  CubicDecomposition decomposition;
  SolveMode mode = SolveMode::kExact;
  SolveStats stats;
};

// Porosity values of (partial) cuts of one graph, keyed by the vertex masks
// of both sides. Safe for concurrent use; reusable across solver runs on
// the same graph and porosity kind (a mismatching fingerprint clears it).
class PorosityCache {
 public:
  bool lookup(std::uint64_t a, std::uint64_t b, int* value) const;
  void insert(std::uint64_t a, std::uint64_t b, int value);
  void bind(const std::string& fingerprint);
  std::size_t size() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };
  mutable std::shared_mutex mutex_;
  std::string fingerprint_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, KeyHash> values_;
};

struct SolverOptions {
  // Largest accepted vertex count; <= 0 means the MATCHWIDTH_CAP
  // environment variable if set, else 10.
  int cap = 0;
  int jobs = 1;
  // Enumerate every tree without bounds or an initial incumbent.
  bool naive = false;
  std::shared_ptr<PorosityCache> cache;
};

// Cap actually applied for the given options.
int effective_cap(const SolverOptions& options);

// Minimum width over all cubic trees with leaves labelled by the vertices.
// Throws kCapExceeded.
SolveResult exact_cyclewidth(const Digraph& d, const SolverOptions& options = {});

// Throws kNotMatchingCovered and kCapExceeded.
SolveResult exact_pmw(const Graph& g, const SolverOptions& options = {});

// Minimum width over decompositions whose inner cuts have M-conformal
// shores. With at least four vertices the matched pairs of such a tree are
// sibling leaves, so the search runs over cubic trees on the matching edges.
// Throws kNotPerfect, kNotMatchingCovered and kCapExceeded.
SolveResult exact_mpmw(const Graph& g, const Matching& m, const SolverOptions& options = {});

// Top-down greedy bisection; the width is an upper bound.
SolveResult heuristic_width(const Digraph& d);
SolveResult heuristic_width(const Graph& g);
SolveResult heuristic_mpmw(const Graph& g, const Matching& m);

}  // namespace matchwidth
