#pragma once

#include <vector>

#include "matchwidth/graph.h"

namespace matchwidth {

// Vertex- and arc-coloured digraph used as the common currency of the
// isomorphism routine. arc[u][v] == 0 means "no arc".
struct ColoredDigraph {
  int n = 0;
  std::vector<int> vertex_color;
  std::vector<std::vector<int>> arc;

  explicit ColoredDigraph(int size = 0)
      : n(size), vertex_color(size, 0), arc(size, std::vector<int>(size, 0)) {}
};

ColoredDigraph to_colored(const Digraph& d);
// Edges become symmetric arcs; with a bipartition the classes are coloured,
// and edges of `m` (if given) get their own arc colour.
ColoredDigraph to_colored(const Graph& g, const Matching* m = nullptr);

// Colour refinement followed by backtracking over refined classes.
// When `mapping` is non-null it receives a witness: a's vertex i maps to
// b's vertex mapping[i].
bool are_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b,
                    std::vector<int>* mapping = nullptr);

bool are_isomorphic(const Digraph& a, const Digraph& b);
bool are_isomorphic(const Graph& a, const Graph& b);
// Matched graphs: isomorphism must carry matching onto matching and
// respect the bipartition classes.
bool are_isomorphic(const Graph& a, const Matching& ma, const Graph& b, const Matching& mb);

}  // namespace matchwidth
