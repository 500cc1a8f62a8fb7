#include "matchwidth/io.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "matchwidth/error.h"

namespace matchwidth {

namespace {

using nlohmann::json;

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    std::string word;
    while (words >> word) line.tokens.push_back(word);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  Graph g;
  // Vertices are numbered in order of first appearance in the edge lines;
  // the header only assigns classes.
  std::vector<std::string> header_order;
  std::map<std::string, Side> header_side;
  bool header = false;
  int header_line = 0;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "bipartition:") {
      if (header) parse_error(line.number, "second bipartition header");
      header = true;
      header_line = line.number;
      for (size_t i = 1; i < t.size(); ++i) {
        Side side = Side::kA;
        if (t[i].rfind("A=", 0) == 0) {
          side = Side::kA;
        } else if (t[i].rfind("B=", 0) == 0) {
          side = Side::kB;
        } else {
          parse_error(line.number, "expected A=... or B=..., got '" + t[i] + "'");
        }
        for (const auto& name : split_names(t[i].substr(2))) {
          if (!header_side.emplace(name, side).second) {
            parse_error(line.number, "vertex " + name + " listed twice");
          }
          header_order.push_back(name);
        }
      }
      continue;
    }
    if (t.size() == 1) {
      g.add_vertex(t[0]);
      continue;
    }
    if (t.size() != 2) parse_error(line.number, "expected 'u v'");
    if (t[0] == t[1]) parse_error(line.number, "self-loop at " + t[0]);
    if (!g.add_edge(t[0], t[1]) && warnings != nullptr) {
      warnings->push_back("line " + std::to_string(line.number) + ": duplicate edge " + t[0] + " " +
                          t[1] + " ignored");
    }
  }
  if (header) {
    for (const auto& name : header_order) g.add_vertex(name);
    std::vector<Side> sides(g.num_vertices(), Side::kA);
    for (int v = 0; v < g.num_vertices(); ++v) {
      auto it = header_side.find(g.name(v));
      if (it == header_side.end()) parse_error(header_line, "vertex " + g.name(v) + " missing from bipartition");
      sides[v] = it->second;
    }
    for (const Edge& e : g.edges()) {
      if (sides[e.u] == sides[e.v]) {
        throw Error(ErrorCode::kOddComponent, "edge " + g.name(e.u) + " " + g.name(e.v) +
                                                  " lies inside one class of the bipartition");
      }
    }
    g.set_bipartition(std::move(sides));
  } else {
    g.compute_bipartition();
  }
  return g;
}

Digraph parse_digraph(std::string_view text, std::vector<std::string>* warnings) {
  Digraph d;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t.size() == 1) {
      d.add_vertex(t[0]);
      continue;
    }
    if (t.size() != 3 || t[1] != "->") parse_error(line.number, "expected 'u -> v'");
    if (t[0] == t[2]) parse_error(line.number, "self-loop at " + t[0]);
    if (!d.add_arc(t[0], t[2]) && warnings != nullptr) {
      warnings->push_back("line " + std::to_string(line.number) + ": duplicate arc " + t[0] + " -> " +
                          t[2] + " ignored");
    }
  }
  return d;
}

Matching parse_matching(const Graph& g, std::string_view text) {
  Matching m;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t.size() != 2) parse_error(line.number, "expected 'u v'");
    int u = g.index_of(t[0]);
    int v = g.index_of(t[1]);
    if (u < 0 || v < 0) parse_error(line.number, "unknown vertex");
    if (!g.has_edge(u, v)) parse_error(line.number, t[0] + " " + t[1] + " is not an edge");
    m.edges.emplace_back(u, v);
  }
  if (!is_matching_of(g, m)) throw Error(ErrorCode::kParse, "edges share an endpoint");
  return m;
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  if (g.bipartition()) {
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (int v = 0; v < g.num_vertices(); ++v) {
      ((*g.bipartition())[v] == Side::kA ? a : b).push_back(g.name(v));
    }
    out += "bipartition: A=" + join(a, ",") + " B=" + join(b, ",") + "\n";
  }
  for (const Edge& e : g.edges()) out += g.name(e.u) + " " + g.name(e.v) + "\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out += g.name(v) + "\n";
  }
  return out;
}

std::string serialize_digraph(const Digraph& d) {
  std::string out;
  for (const Arc& a : d.arcs()) out += d.name(a.tail) + " -> " + d.name(a.head) + "\n";
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (d.out_degree(v) == 0 && d.in_degree(v) == 0) out += d.name(v) + "\n";
  }
  return out;
}

std::string serialize_matching(const Graph& g, const Matching& m) {
  std::string out;
  for (const Edge& e : m.normalized().edges) out += g.name(e.u) + " " + g.name(e.v) + "\n";
  return out;
}

// ------------------------------------------------------------------ JSON

namespace {

json names_of(const std::vector<int>& vertices, const VertexNames& names) {
  json out = json::array();
  for (int v : vertices) out.push_back(names.name(v));
  return out;
}

const char* kind_name(DecompositionKind kind) {
  return kind == DecompositionKind::kCycle ? "cycle" : "matching";
}

class SchemaReader {
 public:
  explicit SchemaReader(const VertexNames& names) : names_(names) {}

  void problem(const std::string& what) { problems_.push_back(what); }

  void finish() const {
    if (problems_.empty()) return;
    std::string message = "decomposition violates the schema:";
    for (const auto& p : problems_) message += "\n  " + p;
    throw Error(ErrorCode::kSchema, message);
  }

  int vertex(const json& value, const std::string& where) {
    if (!value.is_string()) {
      problem(where + ": vertex ids must be strings");
      return -1;
    }
    int v = names_.index_of(value.get<std::string>());
    if (v < 0) problem(where + ": unknown vertex '" + value.get<std::string>() + "'");
    return v;
  }

  std::vector<int> vertex_list(const json& value, const std::string& where) {
    std::vector<int> out;
    if (!value.is_array()) {
      problem(where + " must be an array");
      return out;
    }
    for (const auto& item : value) {
      int v = vertex(item, where);
      if (v >= 0) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool ok() const { return problems_.empty(); }

 private:
  const VertexNames& names_;
  std::vector<std::string> problems_;
};

}  // namespace

std::string serialize_decomposition(const CubicDecomposition& cd, const VertexNames& names) {
  json doc;
  doc["kind"] = kind_name(cd.kind);
  doc["nodes"] = json::array();
  for (int t = 0; t < cd.num_nodes(); ++t) {
    json node;
    node["id"] = t;
    auto neighbors = cd.adjacency[t];
    std::sort(neighbors.begin(), neighbors.end());
    node["neighbors"] = neighbors;
    node["bag"] = json::array();
    node["leaf_of"] = cd.leaf_item[t] >= 0 ? json(names.name(cd.leaf_item[t])) : json(nullptr);
    doc["nodes"].push_back(node);
  }
  doc["root"] = nullptr;
  return doc.dump(2) + "\n";
}

std::string serialize_decomposition(const DirTreeDecomposition& dtd, const VertexNames& names) {
  json doc;
  doc["kind"] = "dtd";
  doc["nodes"] = json::array();
  for (int t = 0; t < dtd.tree.num_nodes(); ++t) {
    json node;
    node["id"] = t;
    node["neighbors"] = dtd.tree.children[t];
    node["bag"] = names_of(dtd.bags[t], names);
    node["leaf_of"] = nullptr;
    doc["nodes"].push_back(node);
  }
  doc["root"] = dtd.tree.root;
  doc["guards"] = json::array();
  for (int t = 0; t < dtd.tree.num_nodes(); ++t) {
    if (t == dtd.tree.root) continue;
    doc["guards"].push_back({{"edge", {dtd.tree.parent[t], t}}, {"set", names_of(dtd.guards[t], names)}});
  }
  return doc.dump(2) + "\n";
}

AnyDecomposition parse_decomposition(std::string_view text, const VertexNames& names) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, std::string("invalid JSON: ") + e.what());
  }
  SchemaReader reader(names);
  if (!doc.is_object()) {
    reader.problem("top level must be an object");
    reader.finish();
  }
  std::string kind;
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    reader.problem("missing string field 'kind'");
  } else {
    kind = doc["kind"].get<std::string>();
    if (kind != "cycle" && kind != "matching" && kind != "dtd") {
      reader.problem("unknown kind '" + kind + "'");
    }
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array() || doc["nodes"].empty()) {
    reader.problem("missing non-empty array 'nodes'");
  }
  reader.finish();

  // Node ids may be any distinct integers or strings; they are renumbered
  // in order of appearance.
  const auto& nodes = doc["nodes"];
  std::map<std::string, int> index;
  auto id_key = [](const json& id) { return id.is_string() ? "s:" + id.get<std::string>() : "n:" + id.dump(); };
  for (size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    std::string where = "nodes[" + std::to_string(i) + "]";
    if (!node.is_object() || !node.contains("id") || !(node["id"].is_number_integer() || node["id"].is_string())) {
      reader.problem(where + ": missing integer or string 'id'");
      continue;
    }
    if (!index.emplace(id_key(node["id"]), static_cast<int>(i)).second) {
      reader.problem(where + ": duplicate id " + node["id"].dump());
    }
  }
  reader.finish();
  auto node_ref = [&](const json& id, const std::string& where) {
    if (!(id.is_number_integer() || id.is_string())) {
      reader.problem(where + ": bad node reference " + id.dump());
      return -1;
    }
    auto it = index.find(id_key(id));
    if (it == index.end()) {
      reader.problem(where + ": unknown node " + id.dump());
      return -1;
    }
    return it->second;
  };

  const int count = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> neighbors(count);
  std::vector<std::vector<int>> bags(count);
  std::vector<int> leaf(count, -1);
  for (int i = 0; i < count; ++i) {
    const auto& node = nodes[i];
    std::string where = "nodes[" + std::to_string(i) + "]";
    if (node.contains("neighbors")) {
      if (!node["neighbors"].is_array()) {
        reader.problem(where + ".neighbors must be an array");
      } else {
        for (const auto& id : node["neighbors"]) {
          int s = node_ref(id, where + ".neighbors");
          if (s >= 0) neighbors[i].push_back(s);
        }
      }
    }
    if (node.contains("bag")) bags[i] = reader.vertex_list(node["bag"], where + ".bag");
    if (node.contains("leaf_of") && !node["leaf_of"].is_null()) {
      leaf[i] = reader.vertex(node["leaf_of"], where + ".leaf_of");
    }
  }

  if (kind != "dtd") {
    for (int i = 0; i < count; ++i) {
      if (!bags[i].empty()) reader.problem("nodes[" + std::to_string(i) + "]: bags are only allowed for kind dtd");
      for (int s : neighbors[i]) {
        if (std::count(neighbors[s].begin(), neighbors[s].end(), i) != 1) {
          reader.problem("neighbor lists of nodes " + std::to_string(i) + " and " + std::to_string(s) +
                         " disagree");
        }
      }
    }
    if (doc.contains("guards") && !doc["guards"].empty()) reader.problem("guards are only allowed for kind dtd");
    reader.finish();
    CubicDecomposition cd;
    cd.kind = kind == "cycle" ? DecompositionKind::kCycle : DecompositionKind::kMatching;
    for (int i = 0; i < count; ++i) cd.add_node(leaf[i]);
    for (int i = 0; i < count; ++i) {
      for (int s : neighbors[i]) {
        if (i < s) cd.add_edge(i, s);
      }
    }
    return cd;
  }

  DirTreeDecomposition dtd;
  std::vector<int> parents(count, -1);
  for (int i = 0; i < count; ++i) {
    if (leaf[i] >= 0) reader.problem("nodes[" + std::to_string(i) + "]: leaf_of is not used for kind dtd");
    for (int s : neighbors[i]) {
      if (parents[s] >= 0) reader.problem("node " + std::to_string(s) + " has two parents");
      parents[s] = i;
    }
  }
  int root = -1;
  if (!doc.contains("root") || doc["root"].is_null()) {
    reader.problem("kind dtd needs a root");
  } else {
    root = node_ref(doc["root"], "root");
    if (root >= 0 && parents[root] >= 0) reader.problem("root has a parent");
  }
  std::vector<std::vector<int>> guards(count);
  std::vector<char> guarded(count, 0);
  if (doc.contains("guards")) {
    if (!doc["guards"].is_array()) {
      reader.problem("guards must be an array");
    } else {
      for (size_t g = 0; g < doc["guards"].size(); ++g) {
        const auto& entry = doc["guards"][g];
        std::string where = "guards[" + std::to_string(g) + "]";
        if (!entry.is_object() || !entry.contains("edge") || !entry["edge"].is_array() ||
            entry["edge"].size() != 2 || !entry.contains("set")) {
          reader.problem(where + ": expected {\"edge\": [parent, child], \"set\": [...]}");
          continue;
        }
        int p = node_ref(entry["edge"][0], where + ".edge");
        int c = node_ref(entry["edge"][1], where + ".edge");
        if (p < 0 || c < 0) continue;
        if (parents[c] != p) {
          reader.problem(where + ": not a tree edge");
          continue;
        }
        guards[c] = reader.vertex_list(entry["set"], where + ".set");
        guarded[c] = 1;
      }
    }
  }
  reader.finish();
  parents[root] = -1;
  try {
    auto tree = Arborescence::from_parents(parents);
    if (tree.root != root) throw Error(ErrorCode::kInvalidDecomposition, "root mismatch");
    dtd.tree = std::move(tree);
  } catch (const Error& e) {
    throw Error(ErrorCode::kSchema, std::string("decomposition violates the schema:\n  ") + e.what());
  }
  dtd.bags = std::move(bags);
  dtd.guards = std::move(guards);
  return dtd;
}

// ------------------------------------------------------------------- DOT

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, const Matching* m) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out += "  " + quote(g.name(v));
    if (g.bipartition()) out += (*g.bipartition())[v] == Side::kA ? " [shape=circle]" : " [shape=box]";
    out += ";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  " + quote(g.name(e.u)) + " -- " + quote(g.name(e.v));
    if (m != nullptr && m->contains(e)) out += " [penwidth=3]";
    out += ";\n";
  }
  return out + "}\n";
}

std::string to_dot(const Digraph& d) {
  std::string out = "digraph D {\n";
  for (int v = 0; v < d.num_vertices(); ++v) out += "  " + quote(d.name(v)) + ";\n";
  for (const Arc& a : d.arcs()) out += "  " + quote(d.name(a.tail)) + " -> " + quote(d.name(a.head)) + ";\n";
  return out + "}\n";
}

std::string to_dot(const CubicDecomposition& cd, const VertexNames& names) {
  std::string out = "graph T {\n";
  for (int t = 0; t < cd.num_nodes(); ++t) {
    out += "  t" + std::to_string(t);
    if (cd.leaf_item[t] >= 0) {
      out += " [shape=box, label=" + quote(names.name(cd.leaf_item[t])) + "]";
    } else {
      out += " [shape=point]";
    }
    out += ";\n";
  }
  for (auto [a, b] : cd.edges()) out += "  t" + std::to_string(a) + " -- t" + std::to_string(b) + ";\n";
  return out + "}\n";
}

std::string to_dot(const DirTreeDecomposition& dtd, const VertexNames& names) {
  auto set_label = [&](const std::vector<int>& vs) {
    std::vector<std::string> parts;
    for (int v : vs) parts.push_back(names.name(v));
    return "{" + join(parts, ",") + "}";
  };
  std::string out = "digraph T {\n";
  for (int t = 0; t < dtd.tree.num_nodes(); ++t) {
    out += "  t" + std::to_string(t) + " [label=" + quote(set_label(dtd.bags[t])) + "];\n";
  }
  for (int t = 0; t < dtd.tree.num_nodes(); ++t) {
    if (t == dtd.tree.root) continue;
    out += "  t" + std::to_string(dtd.tree.parent[t]) + " -> t" + std::to_string(t) +
           " [label=" + quote(set_label(dtd.guards[t])) + "];\n";
  }
  return out + "}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace matchwidth
