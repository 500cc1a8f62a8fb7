#include "matchwidth/generators.h"

#include <algorithm>
#include <numeric>

#include "matchwidth/direction.h"
#include "matchwidth/error.h"
#include "matchwidth/matching.h"

namespace matchwidth {

Digraph random_digraph(Rng& rng, int n, double p) {
  Digraph d(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && coin(rng)) d.add_arc(i, j);
    }
  }
  return d;
}

Digraph random_strongly_connected_digraph(Rng& rng, int n, double p) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    Digraph d = random_digraph(rng, n, p);
    if (d.is_strongly_connected()) return d;
  }
  Digraph d = random_digraph(rng, n, p);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; n > 1 && i < n; ++i) d.add_arc(order[i], order[(i + 1) % n]);
  return d;
}

Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph random_bipartite_matching_covered(Rng& rng, int half, double p) {
  return split_digraph(random_strongly_connected_digraph(rng, half, p)).graph;
}

Graph random_matching_covered(Rng& rng, int n, double p) {
  if (n <= 0 || n % 2) throw Error(ErrorCode::kInvalidInput, "need an even positive order");
  while (true) {
    Graph g = random_graph(rng, n, p);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < n; i += 2) g.add_edge(order[i], order[i + 1]);
    Graph kept(n);
    for (const Edge& e : g.edges()) {
      const int removed[2] = {e.u, e.v};
      if (has_perfect_matching(remove_vertices(g, removed))) kept.add_edge(e.u, e.v);
    }
    if (kept.is_connected()) {
      kept.compute_bipartition();
      return kept;
    }
  }
}

std::vector<int> random_shore(Rng& rng, int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidShore, "no proper shore on fewer than 2 vertices");
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 2);
  std::uint64_t mask = pick(rng);
  std::vector<int> shore;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1) shore.push_back(v);
  }
  return shore;
}

Matching random_perfect_matching(Rng& rng, const Graph& g) {
  try {
    auto all = enumerate_perfect_matchings(g, 20'000);
    if (all.empty()) throw Error(ErrorCode::kNoPerfectMatching, "graph has no perfect matching");
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCapExceeded) throw;
  }
  std::uniform_int_distribution<int> weight(1, 1000);
  std::vector<WeightedEdge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, weight(rng)});
  auto mate = max_weight_matching(g.num_vertices(), edges, true);
  Matching m;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v < mate[v]) m.edges.emplace_back(v, mate[v]);
  }
  return m;
}

std::vector<Digraph> all_digraphs_up_to_isomorphism(int n) {
  if (n < 0 || n > 5) throw Error(ErrorCode::kCapExceeded, "exhaustive digraphs only up to 5 vertices");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_id(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      pair_id[i][j] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  }
  const int bits = static_cast<int>(pairs.size());
  // Bit images of every vertex permutation.
  std::vector<std::vector<int>> images;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> image(bits);
    for (int b = 0; b < bits; ++b) image[b] = pair_id[perm[pairs[b].first]][perm[pairs[b].second]];
    images.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Digraph> out;
  std::vector<char> seen(std::size_t{1} << bits, 0);
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << bits); ++code) {
    if (seen[code]) continue;
    for (const auto& image : images) {
      std::uint32_t mapped = 0;
      for (int b = 0; b < bits; ++b) {
        if (code >> b & 1) mapped |= std::uint32_t{1} << image[b];
      }
      seen[mapped] = 1;
    }
    Digraph d(n);
    for (int b = 0; b < bits; ++b) {
      if (code >> b & 1) d.add_arc(pairs[b].first, pairs[b].second);
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace matchwidth
