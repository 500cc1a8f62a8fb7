#include "matchwidth/graph.h"

#include <algorithm>
#include <deque>

#include "matchwidth/error.h"

namespace matchwidth {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kInvalidShore: return "InvalidShore";
    case ErrorCode::kNotPerfect: return "NotPerfect";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kNotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::kNotAlternating: return "NotAlternating";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kNoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::kNotMatchingCovered: return "NotMatchingCovered";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kEdgeNotInTree: return "EdgeNotInTree";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kLeafMapMismatch: return "LeafMapMismatch";
    case ErrorCode::kMatchedPairNotSiblings: return "MatchedPairNotSiblings";
    case ErrorCode::kNotContractible: return "NotContractible";
    case ErrorCode::kWrongDegree: return "WrongDegree";
    case ErrorCode::kAlignmentUnsatisfiable: return "AlignmentUnsatisfiable";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kOddComponent: return "OddComponent";
    case ErrorCode::kSchema: return "SchemaViolation";
    case ErrorCode::kUnknownExperiment: return "UnknownExperiment";
  }
  return "Unknown";
}

int VertexNames::add(std::string_view name) {
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  int id = static_cast<int>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

int VertexNames::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) {
  for (int i = 0; i < n; ++i) add_vertex(std::to_string(i));
}

std::uint64_t Graph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

int Graph::add_vertex(std::string_view name) {
  int before = names_.size();
  int id = names_.add(name);
  if (id == before) {
    adjacency_.emplace_back();
    if (sides_) sides_->push_back(Side::kA);
  }
  return id;
}

bool Graph::add_edge(int u, int v) {
  if (u == v) throw Error(ErrorCode::kInvalidInput, "self-loop at " + name(u));
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw Error(ErrorCode::kInvalidInput, "edge endpoint out of range");
  }
  auto [it, inserted] = edge_lookup_.emplace(key(u, v), num_edges());
  if (!inserted) return false;
  edges_.emplace_back(u, v);
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  if (sides_ && (*sides_)[u] == (*sides_)[v]) sides_.reset();
  return true;
}

bool Graph::add_edge(std::string_view u, std::string_view v) {
  int a = add_vertex(u);
  int b = add_vertex(v);
  return add_edge(a, b);
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  auto it = edge_lookup_.find(key(u, v));
  return it == edge_lookup_.end() ? -1 : it->second;
}

void Graph::set_bipartition(std::vector<Side> sides) {
  if (static_cast<int>(sides.size()) != num_vertices()) {
    throw Error(ErrorCode::kInvalidInput, "bipartition size mismatch");
  }
  for (const Edge& e : edges_) {
    if (sides[e.u] == sides[e.v]) {
      throw Error(ErrorCode::kNotBipartite,
                  "edge " + name(e.u) + " " + name(e.v) + " inside one class");
    }
  }
  sides_ = std::move(sides);
}

bool Graph::compute_bipartition() {
  std::vector<int> colour(num_vertices(), -1);
  for (int s = 0; s < num_vertices(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adjacency_[v]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          sides_.reset();
          return false;
        }
      }
    }
  }
  std::vector<Side> sides(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) sides[v] = colour[v] ? Side::kB : Side::kA;
  sides_ = std::move(sides);
  return true;
}

bool Graph::is_connected() const {
  if (num_vertices() == 0) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == num_vertices();
}

// -------------------------------------------------------------- Digraph

Digraph::Digraph(int n) {
  for (int i = 0; i < n; ++i) add_vertex(std::to_string(i));
}

std::uint64_t Digraph::key(int u, int v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

int Digraph::add_vertex(std::string_view name) {
  int before = names_.size();
  int id = names_.add(name);
  if (id == before) {
    out_.emplace_back();
    in_.emplace_back();
  }
  return id;
}

bool Digraph::add_arc(int tail, int head) {
  if (tail == head) throw Error(ErrorCode::kInvalidInput, "self-loop at " + name(tail));
  if (tail < 0 || head < 0 || tail >= num_vertices() || head >= num_vertices()) {
    throw Error(ErrorCode::kInvalidInput, "arc endpoint out of range");
  }
  auto [it, inserted] = arc_lookup_.emplace(key(tail, head), num_arcs());
  if (!inserted) return false;
  arcs_.push_back({tail, head});
  out_[tail].push_back(head);
  in_[head].push_back(tail);
  return true;
}

bool Digraph::add_arc(std::string_view tail, std::string_view head) {
  int a = add_vertex(tail);
  int b = add_vertex(head);
  return add_arc(a, b);
}

bool Digraph::has_arc(int tail, int head) const { return arc_index(tail, head) >= 0; }

int Digraph::arc_index(int tail, int head) const {
  auto it = arc_lookup_.find(key(tail, head));
  return it == arc_lookup_.end() ? -1 : it->second;
}

std::vector<char> Digraph::reachable_from(std::span<const int> sources,
                                          const std::vector<char>* blocked,
                                          bool backwards) const {
  std::vector<char> seen(num_vertices(), 0);
  std::vector<int> stack;
  for (int s : sources) {
    if (blocked && (*blocked)[s]) continue;
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  const auto& adjacency = backwards ? in_ : out_;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v]) {
      if (seen[w] || (blocked && (*blocked)[w])) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

bool Digraph::is_strongly_connected() const {
  if (num_vertices() == 0) return true;
  const int start = 0;
  auto fwd = reachable_from(std::span<const int>(&start, 1));
  auto bwd = reachable_from(std::span<const int>(&start, 1), nullptr, true);
  for (int v = 0; v < num_vertices(); ++v) {
    if (!fwd[v] || !bwd[v]) return false;
  }
  return true;
}

bool Digraph::is_acyclic() const {
  std::vector<int> indegree(num_vertices());
  for (const Arc& a : arcs_) ++indegree[a.head];
  std::vector<int> ready;
  for (int v = 0; v < num_vertices(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : out_[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == num_vertices();
}

// ------------------------------------------------------------- Matching

bool Matching::contains(Edge e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

std::vector<int> Matching::mates(int num_vertices) const {
  std::vector<int> mate(num_vertices, -1);
  for (const Edge& e : edges) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

Matching Matching::normalized() const {
  Matching out = *this;
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  std::vector<char> used(g.num_vertices(), 0);
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v >= g.num_vertices() || !g.has_edge(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  return is_matching_of(g, m) && 2 * m.size() == g.num_vertices();
}

std::vector<char> membership(int n, std::span<const int> vertices) {
  std::vector<char> in(n, 0);
  for (int v : vertices) in[v] = 1;
  return in;
}

bool is_valid_shore(int n, std::span<const int> shore) {
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int v : shore) {
    if (v < 0 || v >= n) return false;
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  }
  return count > 0 && count < n;
}

void require_valid_shore(int n, std::span<const int> shore) {
  if (!is_valid_shore(n, shore)) {
    throw Error(ErrorCode::kInvalidShore, "shore must be a non-empty proper vertex subset");
  }
}

std::vector<int> cut_edges(const Graph& g, std::span<const int> shore) {
  auto in = membership(g.num_vertices(), shore);
  std::vector<int> out;
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (in[e.u] != in[e.v]) out.push_back(i);
  }
  return out;
}

std::vector<int> cut_arcs(const Digraph& d, std::span<const int> shore) {
  auto in = membership(d.num_vertices(), shore);
  std::vector<int> out;
  for (int i = 0; i < d.num_arcs(); ++i) {
    const Arc& a = d.arcs()[i];
    if (in[a.tail] != in[a.head]) out.push_back(i);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<char>& keep) {
  Graph out;
  std::vector<int> map(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (keep[v]) map[v] = out.add_vertex(g.name(v));
  }
  for (const Edge& e : g.edges()) {
    if (map[e.u] >= 0 && map[e.v] >= 0) out.add_edge(map[e.u], map[e.v]);
  }
  if (g.bipartition()) {
    std::vector<Side> sides;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (keep[v]) sides.push_back((*g.bipartition())[v]);
    }
    out.set_bipartition(std::move(sides));
  }
  return out;
}

Digraph induced_subgraph(const Digraph& d, const std::vector<char>& keep) {
  Digraph out;
  std::vector<int> map(d.num_vertices(), -1);
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (keep[v]) map[v] = out.add_vertex(d.name(v));
  }
  for (const Arc& a : d.arcs()) {
    if (map[a.tail] >= 0 && map[a.head] >= 0) out.add_arc(map[a.tail], map[a.head]);
  }
  return out;
}

Graph remove_vertices(const Graph& g, std::span<const int> removed) {
  std::vector<char> keep(g.num_vertices(), 1);
  for (int v : removed) keep[v] = 0;
  return induced_subgraph(g, keep);
}

}  // namespace matchwidth
