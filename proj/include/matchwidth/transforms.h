#pragma once

#include <span>
#include <vector>

#include "matchwidth/decomposition.h"
#include "matchwidth/direction.h"
#include "matchwidth/graph.h"

namespace matchwidth {

// Adds the m-partner of every vertex of x whose matching edge crosses ∂(x).
// The result contains x and is M-conformal. It is all of V(g) exactly
// when x is a transversal of m, in which case no proper conformal superset
// exists.
std::vector<int> conformalize_shore(const Graph& g, const Matching& m, std::span<const int> x);

// Makes every matched pair a pair of sibling leaves. For each matching edge
// xy whose leaves are not siblings, with x the endpoint met first in a DFS
// of the tree from node 0, the leaf of y is removed (suppressing the node
// left with degree two) and the leaf of x becomes an inner node carrying
// two new leaves x and y.
CubicDecomposition pmd_to_conformal_pmd(const Graph& g, const Matching& m,
                                        const CubicDecomposition& pd);

// Deletes all leaves; the common neighbour of the leaves of x and y
// becomes the leaf of the digraph vertex xy of D(g, m). Throws
// kMatchedPairNotSiblings when some matched pair has no common neighbour.
CubicDecomposition conformal_pmd_to_cycle_decomp(const Graph& g, const Matching& m,
                                                 const CubicDecomposition& pd);

// Every leaf of cd (over D(g, m)) gets two pendant leaves for the
// endpoints of its matching edge.
CubicDecomposition cycle_decomp_to_conformal_pmd(const Graph& g, const Matching& m,
                                                 const CubicDecomposition& cd);

}  // namespace matchwidth
