#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchwidth/generators.h"
#include "matchwidth/graph.h"

namespace matchwidth {

// ------------------------------------------------------------------ trees

// Rooted tree with edges directed away from the root. A leaf is a
// non-root node without children, so a single-node tree has no leaves.
struct Arborescence {
  int root = 0;
  std::vector<int> parent;  // -1 for the root
  std::vector<std::vector<int>> children;

  int num_nodes() const { return static_cast<int>(parent.size()); }
  bool is_leaf(int t) const { return t != root && children[t].empty(); }
  int add_child(int t);  // returns the new node

  // Throws kInvalidDecomposition unless `parents` describes one rooted tree.
  static Arborescence from_parents(const std::vector<int>& parents);
  static Arborescence single_node();
};

struct TreeSplit {
  std::vector<int> first;   // side of the root (rooted) or of t (unrooted)
  std::vector<int> second;  // side of the head / of t'
};

// For an arborescence the edge is (parent, child).
TreeSplit split_tree(const Arborescence& tree, int tail, int head);
TreeSplit split_tree(const std::vector<std::vector<int>>& adjacency, int t, int t_prime);

// ------------------------------------------- directed tree decompositions

struct DirTreeDecomposition {
  Arborescence tree;
  std::vector<std::vector<int>> bags;
  // guards[c] is the guard of the edge (parent(c), c); unused for the root.
  std::vector<std::vector<int>> guards;

  // β(t) together with the guards of all edges incident with t.
  std::vector<int> gamma(int t) const;
  // Union of the bags in the subtree rooted at t.
  std::vector<int> below(int t) const;
  int width() const;
};

struct NormalityViolation {
  int child = -1;  // the edge (parent(child), child)
  int start = -1;  // walk from `start` in the below-set ...
  int via = -1;    // ... through `via` outside it and the guard ...
  int end = -1;    // ... back to `end` in the below-set
};

struct DtdReport {
  bool valid = true;
  int width = -1;
  std::vector<std::string> bag_errors;
  std::vector<NormalityViolation> normality;
  std::string summary(const Digraph& d) const;
};

// Checks the near-partition and every normality condition. The below-set S
// of an edge with guard Z is checked as S \ Z (the standard constructions
// put guard vertices into S): in D - Z no vertex outside S ∪ Z may be
// reachable from S \ Z and reach S \ Z.
DtdReport validate_dtd(const Digraph& d, const DirTreeDecomposition& dtd);

// Hangs every non-empty inner bag onto a new leaf whose edge guard is that
// bag. Throws kInvalidInput for an invalid decomposition.
DirTreeDecomposition to_leaf_dtd(const Digraph& d, const DirTreeDecomposition& dtd);

bool is_leaf_dtd(const DirTreeDecomposition& dtd);

// True when s \ z is z-normal in the sense used by validate_dtd.
bool is_normal(const Digraph& d, std::span<const int> s, std::span<const int> z);

// An inclusion-minimal guard for below-set s, found greedily from the
// smaller of two always-valid guards (s itself, or every vertex outside s
// on a walk that leaves s and returns).
std::vector<int> minimal_guard(Rng& rng, const Digraph& d, std::span<const int> s);

// Random arborescence on `num_nodes` nodes with a random near partition of
// the vertices into its bags and minimal guards on every edge.
DirTreeDecomposition random_dtd(Rng& rng, const Digraph& d, int num_nodes);

// Subcubic leaf decomposition with bags of size at most one and the same
// width. Requires a valid leaf decomposition (kInvalidInput otherwise).
DirTreeDecomposition cubify(const Digraph& d, const DirTreeDecomposition& dtd);

// --------------------------------------------------- cubic decompositions

enum class DecompositionKind { kCycle, kMatching };

// Unrooted tree whose leaves map bijectively to vertices (items). For one
// item the tree is a single node; for two items a single edge.
struct CubicDecomposition {
  DecompositionKind kind = DecompositionKind::kCycle;
  std::vector<std::vector<int>> adjacency;
  std::vector<int> leaf_item;  // -1 for inner nodes

  int num_nodes() const { return static_cast<int>(adjacency.size()); }
  int add_node(int item = -1);
  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  std::vector<std::pair<int, int>> edges() const;  // each once, a < b
  std::vector<int> leaves() const;
  bool is_leaf(int t) const { return leaf_item[t] >= 0; }
  // Items on the side of `t` after deleting the edge t t'.
  std::vector<int> shore(int t, int t_prime) const;
  // Drops unused node slots, renumbering the rest in order.
  void compact();
};

// Throws kLeafMapMismatch / kInvalidDecomposition when cd is not a cubic
// tree with a leaf bijection onto {0, ..., num_items-1}.
void validate_cubic(const CubicDecomposition& cd, int num_items);

struct EdgePorosity {
  int a = -1;
  int b = -1;
  std::vector<int> shore;  // items on a's side
  int value = 0;
};

struct WidthReport {
  int width = 0;
  std::vector<EdgePorosity> edges;
};

WidthReport decomposition_width(const Digraph& d, const CubicDecomposition& cd);
WidthReport decomposition_width(const Graph& g, const CubicDecomposition& cd);

// Every inner tree edge has M-conformal shores.
bool is_m_conformal_decomposition(const Graph& g, const Matching& m,
                                  const CubicDecomposition& cd);

// An edge whose shores each hold at least a third of the leaves, located
// via a sink of the "towards the heavier side" orientation.
std::pair<int, int> find_balanced_edge(const CubicDecomposition& cd);

// Forgets orientation and bags, prunes leaves without a vertex and
// suppresses degree-2 nodes. Input must be a subcubic leaf decomposition
// with bags of size at most one.
CubicDecomposition dtd_to_cycle_decomposition(const Digraph& d, const DirTreeDecomposition& dtd);

// Removes item-less leaves and suppresses degree-2 nodes until the tree is
// cubic again.
void normalize_cubic(CubicDecomposition& cd);

// Random cubic tree over items 0..n-1 built by inserting leaves into
// uniformly chosen edges, in random item order.
CubicDecomposition random_cubic_decomposition(Rng& rng, int num_items, DecompositionKind kind);

// Caterpillar with items in the given order along the spine.
CubicDecomposition caterpillar(const std::vector<int>& order, DecompositionKind kind);

// Structural isomorphism preserving leaf items.
bool same_decomposition(const CubicDecomposition& a, const CubicDecomposition& b);

}  // namespace matchwidth
