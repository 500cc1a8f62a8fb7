#include "matchwidth/direction.h"

#include <algorithm>

#include "matchwidth/error.h"

namespace matchwidth {

MDirection m_direction(const Graph& g, const Matching& m) {
  if (!g.bipartition()) throw Error(ErrorCode::kNotBipartite, "graph has no bipartition");
  if (!is_perfect_matching(g, m)) {
    throw Error(ErrorCode::kNotPerfect, "matching is not a perfect matching of the graph");
  }
  const auto& sides = *g.bipartition();
  MDirection dir;
  dir.vertex_of.assign(g.num_vertices(), -1);
  std::vector<int> mate = m.mates(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (sides[v] != Side::kA) continue;
    int w = mate[v];
    int id = dir.digraph.add_vertex(g.name(v) + "~" + g.name(w));
    dir.label.emplace_back(v, w);
    dir.a_end.push_back(v);
    dir.b_end.push_back(w);
    dir.vertex_of[v] = dir.vertex_of[w] = id;
  }
  for (const Edge& e : g.edges()) {
    int a = sides[e.u] == Side::kA ? e.u : e.v;
    int b = e.other(a);
    int from = dir.vertex_of[a];
    int to = dir.vertex_of[b];
    if (from != to) dir.digraph.add_arc(from, to);
  }
  return dir;
}

MatchedGraph split_digraph(const Digraph& d) {
  if (!d.is_strongly_connected()) {
    throw Error(ErrorCode::kNotStronglyConnected, "digraph is not strongly connected");
  }
  MatchedGraph out;
  std::vector<Side> sides;
  for (int v = 0; v < d.num_vertices(); ++v) {
    out.graph.add_vertex("a_" + d.name(v));
    out.graph.add_vertex("b_" + d.name(v));
    sides.push_back(Side::kA);
    sides.push_back(Side::kB);
  }
  out.graph.set_bipartition(sides);
  for (int v = 0; v < d.num_vertices(); ++v) {
    out.graph.add_edge(2 * v, 2 * v + 1);
    out.matching.edges.emplace_back(2 * v, 2 * v + 1);
  }
  for (const Arc& a : d.arcs()) out.graph.add_edge(2 * a.tail, 2 * a.head + 1);
  return out;
}

std::vector<int> shore_to_digraph(const MDirection& dir, std::span<const int> shore) {
  std::vector<int> out;
  for (int v : shore) out.push_back(dir.vertex_of[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> shore_from_digraph(const MDirection& dir, std::span<const int> shore) {
  std::vector<int> out;
  for (int x : shore) {
    out.push_back(dir.label[x].u);
    out.push_back(dir.label[x].v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matchwidth
