#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace matchwidth {

// Unordered edge between two dense vertex indices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  int other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Vertex ids are opaque strings; every structure keeps them in insertion
// order and refers to them internally by dense index.
class VertexNames {
 public:
  int add(std::string_view name);  // existing index if already present
  int index_of(std::string_view name) const;  // -1 when absent
  const std::string& name(int v) const { return names_[v]; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& all() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

enum class Side : std::int8_t { kA = 0, kB = 1 };

class Graph {
 public:
  Graph() = default;
  // Vertices named "0", "1", ..., "n-1".
  explicit Graph(int n);

  int add_vertex(std::string_view name);
  // Returns false when the edge already exists. Self-loops throw.
  bool add_edge(int u, int v);
  bool add_edge(std::string_view u, std::string_view v);

  int num_vertices() const { return names_.size(); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;
  // Index into edges(), or -1.
  int edge_index(int u, int v) const;

  const std::string& name(int v) const { return names_.name(v); }
  int index_of(std::string_view name) const { return names_.index_of(name); }
  const VertexNames& names() const { return names_; }

  const std::optional<std::vector<Side>>& bipartition() const { return sides_; }
  // Throws kNotBipartite when an edge joins two vertices of the same class.
  void set_bipartition(std::vector<Side> sides);
  // 2-colours every component (lowest index gets kA); false if not bipartite.
  bool compute_bipartition();
  void clear_bipartition() { sides_.reset(); }

  bool is_connected() const;

 private:
  static std::uint64_t key(int u, int v);

  VertexNames names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::uint64_t, int> edge_lookup_;
  std::optional<std::vector<Side>> sides_;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int add_vertex(std::string_view name);
  // Returns false when the arc already exists. Self-loops throw.
  bool add_arc(int tail, int head);
  bool add_arc(std::string_view tail, std::string_view head);

  int num_vertices() const { return names_.size(); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  bool has_arc(int tail, int head) const;
  int arc_index(int tail, int head) const;

  const std::string& name(int v) const { return names_.name(v); }
  int index_of(std::string_view name) const { return names_.index_of(name); }
  const VertexNames& names() const { return names_; }

  // Vertices reachable from `sources` without entering `blocked` (if given).
  std::vector<char> reachable_from(std::span<const int> sources,
                                   const std::vector<char>* blocked = nullptr,
                                   bool backwards = false) const;
  bool is_strongly_connected() const;
  bool is_acyclic() const;

 private:
  static std::uint64_t key(int u, int v);

  VertexNames names_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::unordered_map<std::uint64_t, int> arc_lookup_;
};

struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  bool contains(Edge e) const;
  // mate[v] = partner or -1.
  std::vector<int> mates(int num_vertices) const;
  // Edges sorted; makes equality independent of construction order.
  Matching normalized() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.normalized().edges == b.normalized().edges;
  }
};

// A vertex cycle v0 v1 ... v_{l-1} (closing edge v_{l-1} v0 implied).
using Cycle = std::vector<int>;

bool is_matching_of(const Graph& g, const Matching& m);
bool is_perfect_matching(const Graph& g, const Matching& m);

// Membership vector for a vertex subset.
std::vector<char> membership(int n, std::span<const int> vertices);

// A shore is valid when it is non-empty, proper and in range.
bool is_valid_shore(int n, std::span<const int> shore);
void require_valid_shore(int n, std::span<const int> shore);

// ∂(X): indices of edges with exactly one endpoint in `shore`.
std::vector<int> cut_edges(const Graph& g, std::span<const int> shore);
std::vector<int> cut_arcs(const Digraph& d, std::span<const int> shore);

// Subgraph helpers; vertex names and relative order are preserved.
Graph induced_subgraph(const Graph& g, const std::vector<char>& keep);
Digraph induced_subgraph(const Digraph& d, const std::vector<char>& keep);
Graph remove_vertices(const Graph& g, std::span<const int> removed);

}  // namespace matchwidth
