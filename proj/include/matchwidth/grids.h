#pragma once

#include <string>
#include <vector>

#include "matchwidth/direction.h"
#include "matchwidth/graph.h"

namespace matchwidth {

// Vertex (i, j), ring i in 1..k (1 outermost) and spoke j in 0..2k-1, is
// named "r{i}s{j}". Rings are directed by increasing j; spokes with odd j
// run inwards and those with even j outwards. For k = 1 the result is the
// digon r1s0 <-> r1s1 and a warning is appended when `warnings` is given.
Digraph cylindrical_grid(int k, std::vector<std::string>* warnings = nullptr);

struct RetractedGrid {
  Digraph digraph;
  std::vector<std::pair<std::string, std::string>> outer;  // E_o as named arcs
  std::vector<std::pair<std::string, std::string>> inner;  // E_i
  int outer_offset = 0;  // E_o starts at spoke j = outer_offset
  int inner_offset = 0;
  // Which alignment rule held: "tail-to-tail" (the literal one) or
  // "head-to-tail" (path from the head of e_o to the tail of e_i).
  std::string alignment;
};

// Butterfly contracts every second arc of the outer and of the inner ring.
// Offsets are searched in order; a choice is accepted when all its arcs are
// contractible and aligned. Throws kInvalidInput for k < 2 and
// kAlignmentUnsatisfiable if no choice works.
RetractedGrid retracted_grid_construction(int k);
Digraph retracted_grid(int k);

// split_digraph of the retracted grid.
MatchedGraph bipartite_matching_grid(int k);

}  // namespace matchwidth
