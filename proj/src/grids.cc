#include "matchwidth/grids.h"

#include <deque>
#include <string>

#include "matchwidth/error.h"
#include "matchwidth/minors.h"

namespace matchwidth {

namespace {

std::string vertex_name(int ring, int spoke) {
  return "r" + std::to_string(ring) + "s" + std::to_string(spoke);
}

std::vector<int> distances_from(const Digraph& d, int source) {
  std::vector<int> dist(d.num_vertices(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : d.out_neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Arcs (ring, j) -> (ring, j+1) for j = offset, offset + 2, ...
std::vector<Arc> every_second_arc(const Digraph& grid, int k, int ring, int offset) {
  std::vector<Arc> out;
  for (int j = offset; j < 2 * k; j += 2) {
    out.push_back({grid.index_of(vertex_name(ring, j)),
                   grid.index_of(vertex_name(ring, (j + 1) % (2 * k)))});
  }
  return out;
}

bool all_contractible(const Digraph& d, const std::vector<Arc>& arcs) {
  for (const Arc& a : arcs) {
    if (!is_butterfly_contractible(d, a.tail, a.head)) return false;
  }
  return true;
}

// Every e_i has some e_o whose chosen endpoints are at distance k - 1.
bool aligned(const Digraph& d, int k, const std::vector<Arc>& outer, const std::vector<Arc>& inner,
             bool literal) {
  for (const Arc& ei : inner) {
    bool ok = false;
    for (const Arc& eo : outer) {
      int dist = literal ? distances_from(d, ei.tail)[eo.tail] : distances_from(d, eo.head)[ei.tail];
      if (dist == k - 1) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Digraph cylindrical_grid(int k, std::vector<std::string>* warnings) {
  if (k < 1) throw Error(ErrorCode::kInvalidInput, "grid order must be at least 1");
  Digraph d;
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j < 2 * k; ++j) d.add_vertex(vertex_name(i, j));
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j < 2 * k; ++j) d.add_arc(vertex_name(i, j), vertex_name(i, (j + 1) % (2 * k)));
  }
  for (int j = 0; j < 2 * k; ++j) {
    for (int i = 1; i < k; ++i) {
      if (j % 2 == 1) {
        d.add_arc(vertex_name(i, j), vertex_name(i + 1, j));
      } else {
        d.add_arc(vertex_name(i + 1, j), vertex_name(i, j));
      }
    }
  }
  if (k == 1 && warnings != nullptr) {
    warnings->push_back("order 1 grid degenerates to a digon with trivial spokes");
  }
  return d;
}

RetractedGrid retracted_grid_construction(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "retracted grid needs order at least 2");
  Digraph grid = cylindrical_grid(k);
  RetractedGrid out;
  bool chosen = false;
  for (bool literal : {true, false}) {
    for (int ro = 0; ro < 2 && !chosen; ++ro) {
      for (int ri = 0; ri < 2 && !chosen; ++ri) {
        auto outer = every_second_arc(grid, k, 1, ro);
        auto inner = every_second_arc(grid, k, k, ri);
        if (!all_contractible(grid, outer) || !all_contractible(grid, inner)) continue;
        if (!aligned(grid, k, outer, inner, literal)) continue;
        chosen = true;
        out.outer_offset = ro;
        out.inner_offset = ri;
        out.alignment = literal ? "tail-to-tail" : "head-to-tail";
        for (const Arc& a : outer) out.outer.emplace_back(grid.name(a.tail), grid.name(a.head));
        for (const Arc& a : inner) out.inner.emplace_back(grid.name(a.tail), grid.name(a.head));
      }
    }
    if (chosen) break;
  }
  if (!chosen) {
    throw Error(ErrorCode::kAlignmentUnsatisfiable,
                "no choice of contracted arcs is contractible and aligned for order " +
                    std::to_string(k));
  }
  Digraph d = grid;
  auto contract_all = [&](const std::vector<std::pair<std::string, std::string>>& arcs) {
    for (const auto& [tail, head] : arcs) {
      int t = d.index_of(tail);
      int h = d.index_of(head);
      if (t < 0 || h < 0 || !is_butterfly_contractible(d, t, h)) {
        throw Error(ErrorCode::kNotContractible, "arc " + tail + " -> " + head + " not contractible");
      }
      d = butterfly_contract(d, t, h);
    }
  };
  contract_all(out.outer);
  contract_all(out.inner);
  out.digraph = std::move(d);
  return out;
}

Digraph retracted_grid(int k) { return retracted_grid_construction(k).digraph; }

MatchedGraph bipartite_matching_grid(int k) { return split_digraph(retracted_grid(k)); }

}  // namespace matchwidth
