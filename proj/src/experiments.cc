#include "matchwidth/experiments.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "matchwidth/decomposition.h"
#include "matchwidth/direction.h"
#include "matchwidth/error.h"
#include "matchwidth/grids.h"
#include "matchwidth/isomorphism.h"
#include "matchwidth/matching.h"
#include "matchwidth/minors.h"
#include "matchwidth/porosity.h"
#include "matchwidth/transforms.h"
#include "matchwidth/width_solver.h"

namespace matchwidth {

std::string ExperimentReport::csv() const {
  std::ostringstream out;
  for (size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

std::string ExperimentReport::summary() const {
  std::ostringstream out;
  out << name << ": " << instances << " instances, " << violations << " violations, "
      << (passed() ? "PASS" : "FAIL");
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

template <typename... T>
std::vector<std::string> row(const T&... values) {
  std::vector<std::string> out;
  auto add = [&out](const auto& v) {
    std::ostringstream s;
    s << v;
    out.push_back(s.str());
  };
  (add(values), ...);
  return out;
}

const char* ok(bool good) { return good ? "ok" : "VIOLATION"; }

void record(ExperimentReport& r, bool good, std::vector<std::string> cells) {
  ++r.instances;
  if (!good) ++r.violations;
  cells.push_back(ok(good));
  r.rows.push_back(std::move(cells));
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string shore_bits(int n, const std::vector<int>& shore) {
  std::string s(n, '0');
  for (int v : shore) s[v] = '1';
  return s;
}

// --------------------------------------------------- oracle equivalence

// Cycle porosity against the cycle-packing oracle on every digraph with at
// most max_n vertices (all shores up to complement), then on random
// digraphs with 6 to 8 vertices; matching porosity against enumeration on
// random matching covered graphs.
ExperimentReport oracle_equivalence(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "oracle-equivalence";
  r.columns = {"part", "instance", "n", "size", "shores", "mismatches", "status"};
  Rng rng(p.seed);
  const int max_n = std::min(pick(p.max_n, 5), 5);
  const int samples = pick(p.samples, 1000);
  int id = 0;
  auto check_cycles = [&](const char* part, const Digraph& d, const std::vector<std::vector<int>>& shores) {
    CycleOracle oracle(d);
    int mismatches = 0;
    for (const auto& shore : shores) {
      if (cycle_porosity(d, shore).value != oracle.porosity(shore)) ++mismatches;
    }
    record(r, mismatches == 0, row(part, id++, d.num_vertices(), d.num_arcs(), shores.size(), mismatches));
  };
  for (int n = 2; n <= max_n; ++n) {
    // Shores containing vertex 0 cover every cut once.
    std::vector<std::vector<int>> shores;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); mask += 2) {
      std::vector<int> shore;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1u) shore.push_back(v);
      }
      shores.push_back(shore);
    }
    for (const Digraph& d : all_digraphs_up_to_isomorphism(n)) check_cycles("exhaustive", d, shores);
  }
  for (int i = 0; i < samples; ++i) {
    int n = uniform_int(rng, 6, 8);
    Digraph d = random_digraph(rng, n, uniform(rng, 0.15, 0.4));
    std::vector<std::vector<int>> shores;
    for (int s = 0; s < 4; ++s) shores.push_back(random_shore(rng, n));
    check_cycles("random", d, shores);
  }
  for (int i = 0; i < samples; ++i) {
    int n = 2 * uniform_int(rng, 1, std::max(1, pick(p.n, 10) / 2));
    Graph g = random_matching_covered(rng, n, uniform(rng, 0.3, 0.8));
    int mismatches = 0;
    const int shores = 3;
    for (int s = 0; s < shores; ++s) {
      auto shore = random_shore(rng, n);
      if (matching_porosity(g, shore).value != matching_porosity_bruteforce(g, shore)) ++mismatches;
    }
    record(r, mismatches == 0, row("matching", id++, n, g.num_edges(), shores, mismatches));
  }
  return r;
}

// ------------------------------------------------------------ pipeline

ExperimentReport pipeline(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "pipeline";
  r.columns = {"instance", "n", "arcs", "tree_nodes", "dtw_width", "leaf_width", "cubic_width",
               "cycle_width", "bound", "status"};
  Rng rng(p.seed);
  const int samples = pick(p.samples, 200);
  const int max_n = pick(p.n, 8);
  int worst_ratio_num = 0;
  int worst_ratio_den = 1;
  for (int id = 0; id < samples;) {
    int n = uniform_int(rng, 2, max_n);
    Digraph d = random_digraph(rng, n, uniform(rng, 0.15, 0.5));
    auto dtd = random_dtd(rng, d, uniform_int(rng, 1, 8));
    int k = validate_dtd(d, dtd).width;
    if (k > 4) continue;
    auto leaf = to_leaf_dtd(d, dtd);
    auto leaf_report = validate_dtd(d, leaf);
    auto cubic = cubify(d, leaf);
    auto cubic_report = validate_dtd(d, cubic);
    auto cd = dtd_to_cycle_decomposition(d, cubic);
    bool valid_cd = true;
    try {
      validate_cubic(cd, n);
    } catch (const Error&) {
      valid_cd = false;
    }
    int cw = valid_cd ? decomposition_width(d, cd).width : -1;
    bool good = leaf_report.valid && leaf_report.width == k && cubic_report.valid && cubic_report.width == k &&
                valid_cd && cw <= 2 * k;
    if (k > 0 && cw * worst_ratio_den > worst_ratio_num * k) {
      worst_ratio_num = cw;
      worst_ratio_den = k;
    }
    record(r, good,
           row(id++, n, d.num_arcs(), dtd.tree.num_nodes(), k, leaf_report.width, cubic_report.width, cw, 2 * k));
  }
  r.notes.push_back("largest cycle width / dtd width ratio: " + std::to_string(worst_ratio_num) + "/" +
                    std::to_string(worst_ratio_den));
  return r;
}

// ---------------------------------------------------- equality, sandwich

struct MatchedWidths {
  int graph_id;
  int n;
  int edges;
  int matching_id;
  int pmw;
  int mpmw;
  int cw;
};

std::vector<MatchedWidths> matched_widths(const ExperimentParams& p, int default_samples, int default_n) {
  Rng rng(p.seed);
  SolverOptions options;
  options.jobs = std::max(1, p.jobs);
  options.cap = std::max(10, pick(p.n, default_n));
  auto corpus = bipartite_corpus(rng, pick(p.samples, default_samples), pick(p.n, default_n));
  std::vector<MatchedWidths> out;
  for (size_t id = 0; id < corpus.size(); ++id) {
    const Graph& g = corpus[id];
    options.cache = std::make_shared<PorosityCache>();
    int pmw = exact_pmw(g, options).width;
    auto matchings = enumerate_perfect_matchings(g);
    if (matchings.size() > 20) matchings.resize(20);
    for (size_t mi = 0; mi < matchings.size(); ++mi) {
      int mpmw = exact_mpmw(g, matchings[mi], options).width;
      int cw = exact_cyclewidth(m_direction(g, matchings[mi]).digraph, options).width;
      out.push_back({static_cast<int>(id), g.num_vertices(), g.num_edges(), static_cast<int>(mi), pmw, mpmw, cw});
    }
  }
  return out;
}

ExperimentReport equality(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "equality";
  r.columns = {"graph", "n", "edges", "matching", "mpmw", "cw_m_direction", "status"};
  for (const auto& w : matched_widths(p, 300, 10)) {
    record(r, w.mpmw == w.cw, row(w.graph_id, w.n, w.edges, w.matching_id, w.mpmw, w.cw));
  }
  return r;
}

ExperimentReport sandwich(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "sandwich";
  r.columns = {"graph", "n", "edges", "matching", "pmw", "mpmw", "cw_m_direction", "status"};
  for (const auto& w : matched_widths(p, 300, 10)) {
    bool good = w.pmw <= w.mpmw && w.mpmw <= 2 * w.pmw && w.pmw <= w.cw && w.cw <= 2 * w.pmw;
    record(r, good, row(w.graph_id, w.n, w.edges, w.matching_id, w.pmw, w.mpmw, w.cw));
  }
  return r;
}

// --------------------------------------------------------- monotonicity

ExperimentReport monotonicity(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "monotonicity";
  r.columns = {"instance", "n", "arcs", "operation", "cw", "cw_minor", "status"};
  Rng rng(p.seed);
  const int samples = pick(p.samples, 500);
  const int max_n = pick(p.n, 7);
  SolverOptions options;
  options.jobs = std::max(1, p.jobs);
  options.cap = std::max(10, max_n);
  for (int id = 0; id < samples; ++id) {
    int n = uniform_int(rng, 2, max_n);
    Digraph d = random_digraph(rng, n, uniform(rng, 0.2, 0.55));
    std::vector<Arc> contractible;
    for (const Arc& a : d.arcs()) {
      if (is_butterfly_contractible(d, a.tail, a.head)) contractible.push_back(a);
    }
    std::vector<int> kinds{0};  // vertex deletion is always possible
    if (d.num_arcs() > 0) kinds.push_back(1);
    if (!contractible.empty()) kinds.push_back(2);
    int kind = kinds[uniform_int(rng, 0, static_cast<int>(kinds.size()) - 1)];
    Digraph minor;
    std::string op;
    if (kind == 0) {
      int v = uniform_int(rng, 0, n - 1);
      std::vector<char> keep(n, 1);
      keep[v] = 0;
      minor = induced_subgraph(d, keep);
      op = "delete-vertex " + d.name(v);
    } else if (kind == 1) {
      const Arc& a = d.arcs()[uniform_int(rng, 0, d.num_arcs() - 1)];
      minor = delete_arc(d, a.tail, a.head);
      op = "delete-arc " + d.name(a.tail) + ">" + d.name(a.head);
    } else {
      const Arc& a = contractible[uniform_int(rng, 0, static_cast<int>(contractible.size()) - 1)];
      minor = butterfly_contract(d, a.tail, a.head);
      op = "contract " + d.name(a.tail) + ">" + d.name(a.head);
    }
    int cw = exact_cyclewidth(d, options).width;
    int cw_minor = minor.num_vertices() == 0 ? 0 : exact_cyclewidth(minor, options).width;
    record(r, cw_minor <= cw, row(id, n, d.num_arcs(), op, cw, cw_minor));
  }
  return r;
}

// ---------------------------------------------------------- grid bounds

ExperimentReport grid_bounds(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "grid-bounds";
  r.columns = {"k", "check", "value", "bound", "status"};
  const int k = pick(p.k, 2);
  const int bound = (2 * k + 2) / 3;  // ceil(2k/3)
  Digraph grid = cylindrical_grid(k);
  const int n = grid.num_vertices();
  if (n <= 10) {
    SolverOptions options;
    options.jobs = std::max(1, p.jobs);
    auto exact = exact_cyclewidth(grid, options);
    record(r, exact.width >= bound, row(k, "exact", exact.width, bound));
  }
  Rng rng(p.seed);
  const int samples = pick(p.samples, 100);
  for (int i = 0; i < samples; ++i) {
    auto cd = random_cubic_decomposition(rng, n, DecompositionKind::kCycle);
    auto [a, b] = find_balanced_edge(cd);
    auto shore = cd.shore(a, b);
    int size = static_cast<int>(shore.size());
    bool balanced = 3 * size >= n && 3 * (n - size) >= n;
    int value = cycle_porosity(grid, shore).value;
    record(r, balanced && value >= bound, row(k, "balanced-edge", value, bound));
  }
  if (n <= 64) {
    auto h = heuristic_width(grid);
    record(r, h.width >= bound, row(k, "heuristic", h.width, bound));
  }
  return r;
}

// ---------------------------------------------------------- round trip

ExperimentReport roundtrip(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "roundtrip";
  r.columns = {"instance", "n", "arcs", "status"};
  Rng rng(p.seed);
  const int samples = pick(p.samples, 300);
  const int max_n = pick(p.n, 6);
  for (int id = 0; id < samples; ++id) {
    int n = uniform_int(rng, 1, max_n);
    Digraph d = random_strongly_connected_digraph(rng, n, uniform(rng, 0.2, 0.6));
    auto split = split_digraph(d);
    bool good = is_matching_covered(split.graph) && are_isomorphic(m_direction(split.graph, split.matching).digraph, d);
    record(r, good, row(id, n, d.num_arcs()));
  }
  return r;
}

// --------------------------------------------------------- grid fidelity

ExperimentReport grid_fidelity(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "grid-fidelity";
  r.columns = {"k", "check", "value", "expected", "status"};
  const int k = pick(p.k, 3);
  Digraph grid = cylindrical_grid(k);
  record(r, grid.num_vertices() == 2 * k * k, row(k, "cylindrical-vertices", grid.num_vertices(), 2 * k * k));
  record(r, grid.num_arcs() == 2 * k * k + 2 * k * (k - 1),
         row(k, "cylindrical-arcs", grid.num_arcs(), 2 * k * k + 2 * k * (k - 1)));
  auto retracted = retracted_grid_construction(k);
  record(r, retracted.digraph.num_vertices() == 2 * k * k - 2 * k,
         row(k, "retracted-vertices", retracted.digraph.num_vertices(), 2 * k * k - 2 * k));
  int certified = 0;
  for (const auto& arcs : {retracted.outer, retracted.inner}) {
    for (const auto& [tail, head] : arcs) {
      certified += is_butterfly_contractible(grid, grid.index_of(tail), grid.index_of(head));
    }
  }
  record(r, certified == 2 * k, row(k, "contractible-arcs", certified, 2 * k));
  auto matched = bipartite_matching_grid(k);
  record(r, matched.graph.num_vertices() == 4 * k * k - 4 * k,
         row(k, "matching-grid-vertices", matched.graph.num_vertices(), 4 * k * k - 4 * k));
  record(r, is_matching_covered(matched.graph), row(k, "matching-covered", is_matching_covered(matched.graph), 1));
  bool iso = are_isomorphic(m_direction(matched.graph, matched.matching).digraph, retracted.digraph);
  record(r, iso, row(k, "m-direction-isomorphic", iso, 1));
  r.notes.push_back("alignment rule: " + retracted.alignment + ", offsets " + std::to_string(retracted.outer_offset) +
                    "/" + std::to_string(retracted.inner_offset));
  return r;
}

// --------------------------------------------------------- conformalize

ExperimentReport conformalize(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "conformalize";
  r.columns = {"instance", "n", "shore", "porosity", "new_shore", "new_porosity", "status"};
  Rng rng(p.seed);
  const int samples = pick(p.samples, 1000);
  const int max_n = pick(p.n, 10);
  for (int id = 0; id < samples; ++id) {
    int n = 2 * uniform_int(rng, 2, std::max(2, max_n / 2));
    Graph g = random_matching_covered(rng, n, uniform(rng, 0.3, 0.7));
    Matching m = random_perfect_matching(rng, g);
    auto x = random_shore(rng, n);
    auto result = conformalize_shore(g, m, x);
    int before = matching_porosity(g, x).value;
    int after = static_cast<int>(result.size()) == n ? 0 : matching_porosity(g, result).value;
    bool good = std::includes(result.begin(), result.end(), x.begin(), x.end()) &&
                static_cast<int>(result.size()) <= static_cast<int>(x.size()) + before &&
                is_m_conformal(g, m, result) && after <= 2 * before;
    record(r, good, row(id, n, shore_bits(n, x), before, shore_bits(n, result), after));
  }
  return r;
}

// ---------------------------------------------------------- minor bound

ExperimentReport minor_bound(const ExperimentParams& p) {
  ExperimentReport r;
  r.name = "minor-bound";
  r.columns = {"pair", "g_n", "g_edges", "h_n", "h_edges", "pmw_g", "pmw_h", "status"};
  Rng rng(p.seed);
  const int wanted = pick(p.samples, 50);
  const int max_n = pick(p.n, 10);
  MinorSearchOptions search;
  search.state_budget = 200'000;
  int attempts = 0;
  int exhausted = 0;
  while (r.instances < wanted && attempts < 100 * wanted) {
    ++attempts;
    auto gs = bipartite_corpus(rng, 1, max_n);
    auto hs = bipartite_corpus(rng, 1, std::max(4, gs[0].num_vertices() - 2));
    const Graph& g = gs[0];
    const Graph& h = hs[0];
    if (h.num_vertices() > g.num_vertices() || h.num_edges() > g.num_edges()) continue;
    auto witness = matching_minor_check(g, h, search);
    if (witness.budget_exhausted) ++exhausted;
    if (!witness.found) continue;
    int pmw_g = exact_pmw(g).width;
    int pmw_h = exact_pmw(h).width;
    record(r, pmw_h <= 2 * pmw_g,
           row(r.instances, g.num_vertices(), g.num_edges(), h.num_vertices(), h.num_edges(), pmw_g, pmw_h));
  }
  r.notes.push_back(std::to_string(attempts) + " candidate pairs tried, " + std::to_string(exhausted) +
                    " searches hit the state budget");
  return r;
}

const std::map<std::string, std::function<ExperimentReport(const ExperimentParams&)>>& registry() {
  static const std::map<std::string, std::function<ExperimentReport(const ExperimentParams&)>> table = {
      {"oracle-equivalence", oracle_equivalence},
      {"pipeline", pipeline},
      {"equality", equality},
      {"sandwich", sandwich},
      {"monotonicity", monotonicity},
      {"grid-bounds", grid_bounds},
      {"roundtrip", roundtrip},
      {"grid-fidelity", grid_fidelity},
      {"conformalize", conformalize},
      {"minor-bound", minor_bound},
  };
  return table;
}

}  // namespace

std::vector<std::string> experiment_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentParams& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::kUnknownExperiment, "unknown experiment '" + name + "'");
  auto start = Clock::now();
  ExperimentReport report = it->second(params);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

std::vector<Graph> bipartite_corpus(Rng& rng, int count, int max_vertices) {
  std::vector<Graph> out;
  const int max_half = std::max(2, max_vertices / 2);
  for (int i = 0; i < count; ++i) {
    int half = uniform_int(rng, 2, max_half);
    out.push_back(random_bipartite_matching_covered(rng, half, uniform(rng, 0.2, 0.6)));
  }
  return out;
}

}  // namespace matchwidth
