#pragma once

#include <vector>

#include "matchwidth/graph.h"

namespace matchwidth {

// D(G,M): one digraph vertex per matching edge, arc (v_i, v_j) whenever
// a_i b_j is an edge of G with i != j.
struct MDirection {
  Digraph digraph;
  std::vector<Edge> label;    // digraph vertex -> matching edge of G
  std::vector<int> vertex_of;  // graph vertex -> digraph vertex
  std::vector<int> a_end;      // digraph vertex -> its endpoint in class A
  std::vector<int> b_end;      // digraph vertex -> its endpoint in class B
};

// Throws kNotBipartite without a bipartition and kNotPerfect unless m is a
// perfect matching of g. Digraph vertices follow the order of their
// A-endpoints and are named "a~b".
MDirection m_direction(const Graph& g, const Matching& m);

struct MatchedGraph {
  Graph graph;
  Matching matching;
};

// Inverse of m_direction up to isomorphism: vertex v becomes the matching
// edge a_v b_v and arc (u, v) becomes the edge a_u b_v. Throws
// kNotStronglyConnected.
MatchedGraph split_digraph(const Digraph& d);

// Maps a vertex set of G that is M-conformal to the corresponding set of
// digraph vertices (and back).
std::vector<int> shore_to_digraph(const MDirection& dir, std::span<const int> shore);
std::vector<int> shore_from_digraph(const MDirection& dir, std::span<const int> shore);

}  // namespace matchwidth
