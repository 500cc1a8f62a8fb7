#include "matchwidth/isomorphism.h"

#include <algorithm>
#include <map>
#include <tuple>

namespace matchwidth {

ColoredDigraph to_colored(const Digraph& d) {
  ColoredDigraph c(d.num_vertices());
  for (const Arc& a : d.arcs()) c.arc[a.tail][a.head] = 1;
  return c;
}

ColoredDigraph to_colored(const Graph& g, const Matching* m) {
  ColoredDigraph c(g.num_vertices());
  if (g.bipartition()) {
    for (int v = 0; v < g.num_vertices(); ++v) {
      c.vertex_color[v] = static_cast<int>((*g.bipartition())[v]);
    }
  }
  for (const Edge& e : g.edges()) c.arc[e.u][e.v] = c.arc[e.v][e.u] = 1;
  if (m) {
    for (const Edge& e : m->edges) c.arc[e.u][e.v] = c.arc[e.v][e.u] = 2;
  }
  return c;
}

namespace {

// Refines the colours of the disjoint union of a and b until stable.
// Returns the final colour of every vertex (a's first, then b's).
std::vector<int> refine(const ColoredDigraph& a, const ColoredDigraph& b) {
  const int total = a.n + b.n;
  auto graph_of = [&](int v) -> std::pair<const ColoredDigraph*, int> {
    return v < a.n ? std::make_pair(&a, v) : std::make_pair(&b, v - a.n);
  };
  std::vector<int> colour(total);
  {
    std::map<int, int> ids;
    for (int v = 0; v < total; ++v) {
      auto [g, i] = graph_of(v);
      colour[v] = ids.emplace(g->vertex_color[i], static_cast<int>(ids.size())).first->second;
    }
  }
  int classes = -1;
  while (true) {
    using Signature = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;
    std::map<Signature, int> ids;
    std::vector<int> next(total);
    for (int v = 0; v < total; ++v) {
      auto [g, i] = graph_of(v);
      int offset = v < a.n ? 0 : a.n;
      std::vector<std::pair<int, int>> out;
      std::vector<std::pair<int, int>> in;
      for (int j = 0; j < g->n; ++j) {
        if (g->arc[i][j]) out.emplace_back(g->arc[i][j], colour[offset + j]);
        if (g->arc[j][i]) in.emplace_back(g->arc[j][i], colour[offset + j]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      Signature sig{colour[v], std::move(out), std::move(in)};
      next[v] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
    }
    colour = std::move(next);
    int now = static_cast<int>(ids.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const ColoredDigraph& a, const ColoredDigraph& b, std::vector<int> colour)
      : a_(a), b_(b), colour_(std::move(colour)), map_(a.n, -1), used_(b.n, 0) {
    build_order();
  }

  bool run(std::vector<int>* mapping) {
    if (!extend(0)) return false;
    if (mapping) *mapping = map_;
    return true;
  }

 private:
  // Next vertex: most already-ordered neighbours, then smallest class.
  void build_order() {
    std::vector<int> class_size(a_.n + b_.n, 0);
    for (int v = 0; v < a_.n; ++v) ++class_size[colour_[v]];
    std::vector<char> placed(a_.n, 0);
    std::vector<int> links(a_.n, 0);
    for (int step = 0; step < a_.n; ++step) {
      int best = -1;
      for (int v = 0; v < a_.n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] && class_size[colour_[v]] < class_size[colour_[best]])) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int w = 0; w < a_.n; ++w) {
        if (a_.arc[best][w] || a_.arc[w][best]) ++links[w];
      }
    }
  }

  bool consistent(int v, int image) const {
    for (int u = 0; u < a_.n; ++u) {
      int mu = map_[u];
      if (mu < 0) continue;
      if (a_.arc[v][u] != b_.arc[image][mu] || a_.arc[u][v] != b_.arc[mu][image]) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == a_.n) return true;
    int v = order_[depth];
    for (int w = 0; w < b_.n; ++w) {
      if (used_[w] || colour_[a_.n + w] != colour_[v]) continue;
      if (!consistent(v, w)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      map_[v] = -1;
      used_[w] = 0;
    }
    return false;
  }

  const ColoredDigraph& a_;
  const ColoredDigraph& b_;
  std::vector<int> colour_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<int> order_;
};

}  // namespace

bool are_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b, std::vector<int>* mapping) {
  if (a.n != b.n) return false;
  auto colour = refine(a, b);
  std::vector<int> ha(a.n + b.n, 0);
  std::vector<int> hb(a.n + b.n, 0);
  for (int v = 0; v < a.n; ++v) ++ha[colour[v]];
  for (int v = 0; v < b.n; ++v) ++hb[colour[a.n + v]];
  if (ha != hb) return false;
  Matcher matcher(a, b, std::move(colour));
  return matcher.run(mapping);
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arcs() != b.num_arcs()) return false;
  return are_isomorphic(to_colored(a), to_colored(b));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  Graph ua = a;
  Graph ub = b;
  ua.clear_bipartition();
  ub.clear_bipartition();
  return are_isomorphic(to_colored(ua), to_colored(ub));
}

bool are_isomorphic(const Graph& a, const Matching& ma, const Graph& b, const Matching& mb) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      ma.size() != mb.size()) {
    return false;
  }
  return are_isomorphic(to_colored(a, &ma), to_colored(b, &mb));
}

}  // namespace matchwidth
