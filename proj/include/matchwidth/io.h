#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matchwidth/decomposition.h"
#include "matchwidth/graph.h"

namespace matchwidth {

// Edge lists: one "u v" (or "u -> v") per line, '#' starts a comment, a
// line with a single token declares an isolated vertex. Graph files may
// start with "bipartition: A=u1,u2,... B=w1,...". Duplicate edges are
// dropped with a warning; malformed lines throw kParse naming the line.
Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
Digraph parse_digraph(std::string_view text, std::vector<std::string>* warnings = nullptr);
// Lines "u v" naming edges of g.
Matching parse_matching(const Graph& g, std::string_view text);

std::string serialize_graph(const Graph& g);
std::string serialize_digraph(const Digraph& d);
std::string serialize_matching(const Graph& g, const Matching& m);

using AnyDecomposition = std::variant<CubicDecomposition, DirTreeDecomposition>;

// JSON schema: {"kind": "cycle" | "matching" | "dtd", "nodes": [{"id",
// "neighbors", "bag", "leaf_of"}], "root", "guards": [{"edge", "set"}]}.
// For a DTD, "neighbors" lists the children. Vertex references are names
// from `names`. Violations throw kSchema listing every problem found.
AnyDecomposition parse_decomposition(std::string_view json, const VertexNames& names);
std::string serialize_decomposition(const CubicDecomposition& cd, const VertexNames& names);
std::string serialize_decomposition(const DirTreeDecomposition& dtd, const VertexNames& names);

std::string to_dot(const Graph& g, const Matching* m = nullptr);
std::string to_dot(const Digraph& d);
std::string to_dot(const CubicDecomposition& cd, const VertexNames& names);
std::string to_dot(const DirTreeDecomposition& dtd, const VertexNames& names);

// Whole file as a string; throws kInvalidInput when unreadable.
std::string read_file(const std::string& path);

}  // namespace matchwidth
