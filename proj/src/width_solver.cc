#include "matchwidth/width_solver.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include "matchwidth/error.h"
#include "matchwidth/matching.h"

namespace matchwidth {

// ----------------------------------------------------------------- cache

bool PorosityCache::lookup(std::uint64_t a, std::uint64_t b, int* value) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find({a, b});
  if (it == values_.end()) return false;
  *value = it->second;
  return true;
}

void PorosityCache::insert(std::uint64_t a, std::uint64_t b, int value) {
  std::unique_lock lock(mutex_);
  values_.emplace(std::make_pair(a, b), value);
}

void PorosityCache::bind(const std::string& fingerprint) {
  std::unique_lock lock(mutex_);
  if (fingerprint_ != fingerprint) {
    values_.clear();
    fingerprint_ = fingerprint;
  }
}

std::size_t PorosityCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

int effective_cap(const SolverOptions& options) {
  if (options.cap > 0) return options.cap;
  if (const char* env = std::getenv("MATCHWIDTH_CAP")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 10;
}

namespace {

using Clock = std::chrono::steady_clock;

// A width problem over items, each item being a set of vertices. Items are
// the leaves of the trees searched; `expand` turns an item tree into the
// decomposition that is returned.
struct Problem {
  int num_vertices = 0;
  std::vector<std::uint64_t> item_mask;
  std::function<int(const SideVector&)> porosity;
  std::function<CubicDecomposition(const CubicDecomposition&)> expand;
  std::shared_ptr<PorosityCache> cache;
  int floor = 0;  // added lower bound from cuts inside expanded items
  int num_items() const { return static_cast<int>(item_mask.size()); }
};

SideVector side_vector(int n, std::uint64_t a, std::uint64_t b) {
  SideVector side(n, -1);
  for (int v = 0; v < n; ++v) {
    if ((a >> v) & 1u) side[v] = 0;
    if ((b >> v) & 1u) side[v] = 1;
  }
  return side;
}

int evaluate(const Problem& p, std::uint64_t a, std::uint64_t b, SolveStats& stats) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t low = (a | b) & (~(a | b) + 1);
  if (b & low) std::swap(a, b);
  int value = 0;
  if (p.cache->lookup(a, b, &value)) {
    ++stats.cache_hits;
    return value;
  }
  ++stats.cache_misses;
  value = p.porosity(side_vector(p.num_vertices, a, b));
  p.cache->insert(a, b, value);
  return value;
}

// ------------------------------------------------------------- heuristic

class Bisection {
 public:
  explicit Bisection(const Problem& p) : p_(p) {}

  CubicDecomposition run(SolveStats& stats) {
    stats_ = &stats;
    const int k = p_.num_items();
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    CubicDecomposition cd;
    if (k == 1) {
      cd.add_node(0);
      return cd;
    }
    auto [first, second] = split(all);
    int a = build(cd, first);
    int b = build(cd, second);
    cd.add_edge(a, b);
    return cd;
  }

 private:
  int porosity(const std::vector<char>& in) {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (int i = 0; i < p_.num_items(); ++i) (in[i] ? a : b) |= p_.item_mask[i];
    return evaluate(p_, a, b, *stats_);
  }

  // Grows a side from the first item, always adding the item that keeps
  // the cut smallest, and returns the best prefix with both sides at least
  // a third of the set.
  std::pair<std::vector<int>, std::vector<int>> split(const std::vector<int>& set) {
    const int s = static_cast<int>(set.size());
    if (s == 2) return {{set[0]}, {set[1]}};
    const int min_side = std::max(1, s / 3);
    std::vector<char> grown(p_.num_items(), 0);
    std::vector<char> used(s, 0);
    std::vector<int> order{set[0]};
    grown[set[0]] = 1;
    used[0] = 1;
    int best_score = INT_MAX;
    int best_len = 1;
    for (int len = 1; len < s; ++len) {
      if (len >= min_side && s - len >= min_side) {
        std::vector<char> rest(p_.num_items(), 0);
        for (int i = 0; i < s; ++i) rest[set[i]] = !grown[set[i]];
        int score = std::max(porosity(grown), porosity(rest));
        if (score < best_score) {
          best_score = score;
          best_len = len;
        }
      }
      if (len == s - 1) break;
      int pick = -1;
      int pick_value = INT_MAX;
      for (int i = 0; i < s; ++i) {
        if (used[i]) continue;
        grown[set[i]] = 1;
        int value = porosity(grown);
        grown[set[i]] = 0;
        if (value < pick_value) {
          pick_value = value;
          pick = i;
        }
      }
      used[pick] = 1;
      grown[set[pick]] = 1;
      order.push_back(set[pick]);
    }
    std::vector<int> first(order.begin(), order.begin() + best_len);
    std::vector<int> second;
    for (int x : set) {
      if (std::find(first.begin(), first.end(), x) == first.end()) second.push_back(x);
    }
    std::sort(first.begin(), first.end());
    return {first, second};
  }

  int build(CubicDecomposition& cd, const std::vector<int>& set) {
    if (set.size() == 1) return cd.add_node(set[0]);
    int t = cd.add_node();
    auto [first, second] = split(set);
    cd.add_edge(t, build(cd, first));
    cd.add_edge(t, build(cd, second));
    return t;
  }

  const Problem& p_;
  SolveStats* stats_ = nullptr;
};

// Width of an item tree (without the floor).
int item_tree_width(const Problem& p, const CubicDecomposition& cd, SolveStats& stats) {
  int width = 0;
  for (auto [a, b] : cd.edges()) {
    std::uint64_t side = 0;
    for (int item : cd.shore(a, b)) side |= p.item_mask[item];
    std::uint64_t all = 0;
    for (auto mask : p.item_mask) all |= mask;
    width = std::max(width, evaluate(p, side, all & ~side, stats));
  }
  return width;
}

// ---------------------------------------------------------- exact search

// Labelled cubic trees grown by inserting item i into an edge of a tree on
// items 0..i-1; every labelled tree arises exactly once.
struct TreeState {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> node_item;

  void insert(int item, int e) {
    auto [a, b] = edges[e];
    int m = static_cast<int>(node_item.size());
    node_item.push_back(-1);
    int leaf = static_cast<int>(node_item.size());
    node_item.push_back(item);
    edges[e] = {a, m};
    edges.emplace_back(m, b);
    edges.emplace_back(m, leaf);
  }

  void undo(int e) {
    edges.pop_back();
    int b = edges.back().second;
    edges.pop_back();
    edges[e].second = b;
    node_item.pop_back();
    node_item.pop_back();
  }

  CubicDecomposition to_decomposition() const {
    CubicDecomposition cd;
    for (int item : node_item) cd.add_node(item);
    for (auto [a, b] : edges) cd.add_edge(a, b);
    return cd;
  }
};

class ExactSearch {
 public:
  ExactSearch(const Problem& p, bool naive, int jobs) : p_(p), naive_(naive), jobs_(jobs) {}

  // Returns the best item tree; `incumbent` may hold an initial tree of
  // width `bound` (INT_MAX for none).
  CubicDecomposition run(int bound, CubicDecomposition incumbent, int lower_bound, SolveStats& stats) {
    best_ = bound;
    best_tree_ = std::move(incumbent);
    lower_bound_ = lower_bound;
    const int k = p_.num_items();
    if (!naive_ && best_ <= lower_bound_) return best_tree_;
    TreeState start;
    start.node_item = {0, 1, 2, -1};
    start.edges = {{3, 0}, {3, 1}, {3, 2}};
    std::vector<std::vector<int>> frontier;
    if (jobs_ <= 1) {
      Worker w(*this);
      w.state = start;
      w.search(3);
      stats_add(stats, w.stats);
    } else {
      // Collect partial trees at a depth with enough work for all workers.
      int depth = 3;
      std::int64_t count = 1;
      while (depth < k && count < 8 * jobs_) count *= 2 * (depth++) - 3;
      Worker collector(*this);
      collector.state = start;
      collector.collect(3, depth, frontier);
      stats_add(stats, collector.stats);
      std::atomic<std::size_t> next{0};
      std::vector<Worker> workers;
      for (int j = 0; j < jobs_; ++j) workers.emplace_back(*this);
      std::vector<std::thread> threads;
      for (int j = 0; j < jobs_; ++j) {
        threads.emplace_back([&, j] {
          Worker& w = workers[j];
          while (true) {
            std::size_t i = next++;
            if (i >= frontier.size() || done_) break;
            w.state = start;
            for (int item = 3; item < depth; ++item) w.state.insert(item, frontier[i][item - 3]);
            w.search(depth);
          }
        });
      }
      for (auto& t : threads) t.join();
      for (auto& w : workers) stats_add(stats, w.stats);
    }
    return best_tree_;
  }

  int best() const { return best_; }

 private:
  static void stats_add(SolveStats& into, const SolveStats& from) {
    into.partial_trees += from.partial_trees;
    into.complete_trees += from.complete_trees;
    into.prunes += from.prunes;
    into.cache_hits += from.cache_hits;
    into.cache_misses += from.cache_misses;
  }

  struct Worker {
    explicit Worker(ExactSearch& s) : search_(&s) {}

    // Maximum porosity over the edges of the current (partial) tree, or a
    // value >= limit as soon as one edge reaches limit.
    int width(int limit) {
      const auto& p = search_->p_;
      const int nodes = static_cast<int>(state.node_item.size());
      adjacency.assign(nodes, {});
      for (auto [a, b] : state.edges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
      }
      parent.assign(nodes, -1);
      mask.assign(nodes, 0);
      order.clear();
      order.push_back(0);
      parent[0] = 0;
      for (size_t i = 0; i < order.size(); ++i) {
        for (int s : adjacency[order[i]]) {
          if (parent[s] < 0) {
            parent[s] = order[i];
            order.push_back(s);
          }
        }
      }
      std::uint64_t all = 0;
      for (int t = nodes - 1; t >= 0; --t) {
        int v = order[t];
        if (state.node_item[v] >= 0) mask[v] |= p.item_mask[state.node_item[v]];
        if (t > 0) mask[parent[v]] |= mask[v];
      }
      all = mask[0];
      int best = 0;
      for (int t = 1; t < nodes; ++t) {
        int v = order[t];
        best = std::max(best, evaluate(p, mask[v], all & ~mask[v], stats));
        if (best >= limit) return best;
      }
      return best;
    }

    void search(int item) {
      ++stats.partial_trees;
      auto& s = *search_;
      const int k = s.p_.num_items();
      if (s.done_) return;
      if (item == k) {
        ++stats.complete_trees;
        int w = std::max(s.p_.floor, width(INT_MAX));
        std::lock_guard lock(s.mutex_);
        if (w < s.best_) {
          s.best_ = w;
          s.best_tree_ = state.to_decomposition();
          if (w <= s.lower_bound_ && !s.naive_) s.done_ = true;
        }
        return;
      }
      const int num_edges = static_cast<int>(state.edges.size());
      for (int e = 0; e < num_edges; ++e) {
        state.insert(item, e);
        if (!s.naive_ && std::max(s.p_.floor, width(s.best_)) >= s.best_) {
          ++stats.prunes;
        } else {
          search(item + 1);
        }
        state.undo(e);
        if (s.done_) return;
      }
    }

    void collect(int item, int depth, std::vector<std::vector<int>>& out) {
      if (item == depth) {
        out.push_back(path);
        return;
      }
      const int num_edges = static_cast<int>(state.edges.size());
      for (int e = 0; e < num_edges; ++e) {
        state.insert(item, e);
        path.push_back(e);
        if (!search_->naive_ && std::max(search_->p_.floor, width(search_->best_)) >= search_->best_) {
          ++stats.prunes;
        } else {
          collect(item + 1, depth, out);
        }
        path.pop_back();
        state.undo(e);
      }
    }

    ExactSearch* search_;
    TreeState state;
    SolveStats stats;
    std::vector<int> path;
    std::vector<std::vector<int>> adjacency;
    std::vector<int> parent;
    std::vector<std::uint64_t> mask;
    std::vector<int> order;
  };

  const Problem& p_;
  bool naive_;
  int jobs_;
  std::atomic<int> best_{INT_MAX};
  std::atomic<bool> done_{false};
  std::mutex mutex_;
  CubicDecomposition best_tree_;
  int lower_bound_ = 0;
};

SolveResult solve_exact(const Problem& p, const SolverOptions& options, DecompositionKind kind) {
  auto start = Clock::now();
  SolveResult result;
  result.mode = SolveMode::kExact;
  const int k = p.num_items();
  CubicDecomposition items;
  if (k <= 2) {
    items.add_node(0);
    if (k == 2) items.add_edge(0, items.add_node(1));
    result.width = std::max(p.floor, item_tree_width(p, items, result.stats));
  } else {
    std::uint64_t all = 0;
    for (auto mask : p.item_mask) all |= mask;
    int lower = p.floor;
    for (auto mask : p.item_mask) lower = std::max(lower, evaluate(p, mask, all & ~mask, result.stats));
    int bound = INT_MAX;
    CubicDecomposition incumbent;
    if (!options.naive) {
      incumbent = Bisection(p).run(result.stats);
      bound = std::max(p.floor, item_tree_width(p, incumbent, result.stats));
    }
    ExactSearch search(p, options.naive, std::max(1, options.jobs));
    items = search.run(bound, std::move(incumbent), lower, result.stats);
    result.width = search.best();
  }
  result.decomposition = p.expand(items);
  result.decomposition.kind = kind;
  result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

SolveResult solve_heuristic(const Problem& p, DecompositionKind kind) {
  auto start = Clock::now();
  SolveResult result;
  result.mode = SolveMode::kHeuristic;
  CubicDecomposition items = Bisection(p).run(result.stats);
  result.width = p.num_items() == 1 ? p.floor : std::max(p.floor, item_tree_width(p, items, result.stats));
  result.decomposition = p.expand(items);
  result.decomposition.kind = kind;
  result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

std::string fingerprint(const char* kind, int n, const std::vector<std::pair<int, int>>& pairs) {
  std::string out = std::string(kind) + ":" + std::to_string(n) + ":";
  for (auto [a, b] : pairs) out += std::to_string(a) + "," + std::to_string(b) + ";";
  return out;
}

void check_cap(int n, const SolverOptions& options) {
  int cap = effective_cap(options);
  if (n > cap || n > 64) {
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(n) + " vertices exceed the solver cap of " + std::to_string(std::min(cap, 64)));
  }
}

std::shared_ptr<PorosityCache> bound_cache(const SolverOptions& options, const std::string& print) {
  auto cache = options.cache ? options.cache : std::make_shared<PorosityCache>();
  cache->bind(print);
  return cache;
}

CubicDecomposition identity_expand(const CubicDecomposition& cd) { return cd; }

Problem cycle_problem(const Digraph& d, std::shared_ptr<PorosityCache> cache) {
  Problem p;
  p.num_vertices = d.num_vertices();
  for (int v = 0; v < p.num_vertices; ++v) p.item_mask.push_back(std::uint64_t{1} << v);
  p.porosity = [&d](const SideVector& side) { return cycle_porosity(d, side).value; };
  p.expand = identity_expand;
  p.cache = std::move(cache);
  return p;
}

Problem pmw_problem(const Graph& g, std::shared_ptr<PorosityCache> cache) {
  Problem p;
  p.num_vertices = g.num_vertices();
  for (int v = 0; v < p.num_vertices; ++v) p.item_mask.push_back(std::uint64_t{1} << v);
  p.porosity = [&g](const SideVector& side) { return matching_porosity(g, side).value; };
  p.expand = identity_expand;
  p.cache = std::move(cache);
  return p;
}

// Items are the matching edges; every item leaf gets two vertex leaves.
Problem mpmw_problem(const Graph& g, const Matching& m, std::shared_ptr<PorosityCache> cache) {
  Problem p = pmw_problem(g, std::move(cache));
  auto pairs = m.normalized().edges;
  p.item_mask.clear();
  for (const Edge& e : pairs) p.item_mask.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
  p.floor = 1;
  p.expand = [pairs](const CubicDecomposition& items) {
    CubicDecomposition out;
    if (items.num_nodes() == 1) {
      out.add_node(pairs[0].u);
      out.add_edge(0, out.add_node(pairs[0].v));
      return out;
    }
    for (int t = 0; t < items.num_nodes(); ++t) out.add_node();
    for (auto [a, b] : items.edges()) out.add_edge(a, b);
    for (int t = 0; t < items.num_nodes(); ++t) {
      int item = items.leaf_item[t];
      if (item < 0) continue;
      out.add_edge(t, out.add_node(pairs[item].u));
      out.add_edge(t, out.add_node(pairs[item].v));
    }
    return out;
  };
  return p;
}

std::vector<std::pair<int, int>> arc_pairs(const Digraph& d) {
  std::vector<std::pair<int, int>> out;
  for (const Arc& a : d.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

void require_matching_covered(const Graph& g) {
  if (!is_matching_covered(g)) throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
}

}  // namespace

SolveResult exact_cyclewidth(const Digraph& d, const SolverOptions& options) {
  check_cap(d.num_vertices(), options);
  if (d.num_vertices() == 0) throw Error(ErrorCode::kInvalidInput, "empty digraph");
  auto cache = bound_cache(options, fingerprint("cycle", d.num_vertices(), arc_pairs(d)));
  return solve_exact(cycle_problem(d, cache), options, DecompositionKind::kCycle);
}

SolveResult exact_pmw(const Graph& g, const SolverOptions& options) {
  check_cap(g.num_vertices(), options);
  require_matching_covered(g);
  auto cache = bound_cache(options, fingerprint("matching", g.num_vertices(), edge_pairs(g)));
  return solve_exact(pmw_problem(g, cache), options, DecompositionKind::kMatching);
}

SolveResult exact_mpmw(const Graph& g, const Matching& m, const SolverOptions& options) {
  check_cap(g.num_vertices(), options);
  if (!is_perfect_matching(g, m)) throw Error(ErrorCode::kNotPerfect, "matching is not perfect");
  require_matching_covered(g);
  // Same porosity function as pmw, so the cache can be shared.
  auto cache = bound_cache(options, fingerprint("matching", g.num_vertices(), edge_pairs(g)));
  return solve_exact(mpmw_problem(g, m, cache), options, DecompositionKind::kMatching);
}

SolveResult heuristic_width(const Digraph& d) {
  if (d.num_vertices() == 0) throw Error(ErrorCode::kInvalidInput, "empty digraph");
  if (d.num_vertices() > 64) throw Error(ErrorCode::kCapExceeded, "heuristic supports up to 64 vertices");
  auto cache = std::make_shared<PorosityCache>();
  return solve_heuristic(cycle_problem(d, cache), DecompositionKind::kCycle);
}

SolveResult heuristic_width(const Graph& g) {
  if (g.num_vertices() > 64) throw Error(ErrorCode::kCapExceeded, "heuristic supports up to 64 vertices");
  require_matching_covered(g);
  auto cache = std::make_shared<PorosityCache>();
  return solve_heuristic(pmw_problem(g, cache), DecompositionKind::kMatching);
}

SolveResult heuristic_mpmw(const Graph& g, const Matching& m) {
  if (g.num_vertices() > 64) throw Error(ErrorCode::kCapExceeded, "heuristic supports up to 64 vertices");
  if (!is_perfect_matching(g, m)) throw Error(ErrorCode::kNotPerfect, "matching is not perfect");
  require_matching_covered(g);
  auto cache = std::make_shared<PorosityCache>();
  return solve_heuristic(mpmw_problem(g, m, cache), DecompositionKind::kMatching);
}

}  // namespace matchwidth
