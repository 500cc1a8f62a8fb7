#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "matchwidth/graph.h"

namespace matchwidth {

using Rng = std::mt19937_64;

// Each ordered pair becomes an arc with probability p.
Digraph random_digraph(Rng& rng, int n, double p);

// Rejection sampling on random_digraph; after a number of failed draws
// a random Hamiltonian cycle is added to force strong connectivity.
Digraph random_strongly_connected_digraph(Rng& rng, int n, double p);

Graph random_graph(Rng& rng, int n, double p);

// Bipartite matching covered graph on 2*half vertices: the split of a
// random strongly connected digraph (every bipartite matching covered
// graph arises this way). The returned graph carries its bipartition.
Graph random_bipartite_matching_covered(Rng& rng, int half, double p);

// Matching covered graph on n (even) vertices, not necessarily bipartite:
// a random graph plus a random perfect matching, restricted to edges that
// lie in some perfect matching, retried until connected.
Graph random_matching_covered(Rng& rng, int n, double p);

// A uniformly random non-empty proper subset.
std::vector<int> random_shore(Rng& rng, int n);

// Uniform random perfect matching among those of g (g must have one).
Matching random_perfect_matching(Rng& rng, const Graph& g);

// One representative of every isomorphism class of digraphs on n <= 5
// vertices (orbit marking over all vertex permutations).
std::vector<Digraph> all_digraphs_up_to_isomorphism(int n);

}  // namespace matchwidth
