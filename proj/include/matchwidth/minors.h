#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchwidth/graph.h"

namespace matchwidth {

Digraph reverse(const Digraph& d);

// Copy of d without the given arc.
Digraph delete_arc(const Digraph& d, int tail, int head);

// True iff (u, v) is the only arc leaving u or the only arc entering v.
// Throws kInvalidInput when the arc does not exist.
bool is_butterfly_contractible(const Digraph& d, int tail, int head);

// Merges u and v into one vertex named "u+v" at the smaller of the two
// indices. Parallel arcs collapse and the loop from a digon is dropped.
// Throws kNotContractible.
Digraph butterfly_contract(const Digraph& d, int tail, int head);

// Contracts both edges at a degree-two vertex v0 with neighbours v1, v2 into
// one vertex named "v1+v0+v2" at the smallest of the three indices. A
// bipartition, if present, is carried over. Throws kWrongDegree.
Graph bicontract(const Graph& g, int v);

struct MinorSearchOptions {
  int vertex_cap = 14;
  std::int64_t state_budget = 2'000'000;
};

struct MinorWitness {
  bool found = false;
  // The search stopped early; a negative answer is then inconclusive.
  bool budget_exhausted = false;
  std::int64_t states = 0;
  std::vector<int> removed;               // vertices of g outside the conformal subgraph
  std::vector<Edge> deleted;              // edges of g deleted from it
  std::vector<std::string> bicontracted;  // names at the time of bicontraction
};

// Bounded exhaustive search for h as a matching minor of g: a conformal
// subgraph (g minus a set with a perfect matching, minus some edges),
// followed by bicontractions. Throws kCapExceeded when g has more than
// vertex_cap vertices.
MinorWitness matching_minor_check(const Graph& g, const Graph& h,
                                  const MinorSearchOptions& options = {});

}  // namespace matchwidth
