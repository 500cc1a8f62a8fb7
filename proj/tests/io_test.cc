#include <gtest/gtest.h>

#include "matchwidth/error.h"
#include "matchwidth/generators.h"
#include "matchwidth/grids.h"
#include "matchwidth/io.h"
#include "matchwidth/porosity.h"
#include "test_graphs.h"

#ifndef MATCHWIDTH_GOLDEN_DIR
#error "MATCHWIDTH_GOLDEN_DIR must be defined"
#endif

namespace matchwidth {
namespace {

std::string golden(const std::string& name) { return read_file(std::string(MATCHWIDTH_GOLDEN_DIR) + "/" + name); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidInput;
}

TEST(EdgeListTest, DigraphRoundTrip) {
  const std::string text = "a -> b\nb -> c\nc -> a\n";
  Digraph d = parse_digraph(text);
  EXPECT_EQ(d.num_vertices(), 3);
  EXPECT_EQ(d.num_arcs(), 3);
  EXPECT_EQ(serialize_digraph(d), text);
}

TEST(EdgeListTest, GraphCommentsIsolatedVerticesAndDuplicates) {
  std::vector<std::string> warnings;
  Graph g = parse_graph("# square\nx y\ny z\n\nz w # closing\nw x\ny x\nlonely\n", &warnings);
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.num_edges(), 4);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("line 7"), std::string::npos);
  ASSERT_TRUE(g.bipartition().has_value());
  Graph again = parse_graph(serialize_graph(g));
  EXPECT_EQ(serialize_graph(again), serialize_graph(g));
}

TEST(EdgeListTest, BipartitionHeader) {
  Graph g = parse_graph("bipartition: A=a1,a2 B=b1,b2\na1 b1\na2 b2\na1 b2\n");
  ASSERT_TRUE(g.bipartition().has_value());
  EXPECT_EQ((*g.bipartition())[g.index_of("b2")], Side::kB);
  EXPECT_EQ(code_of([] { parse_graph("bipartition: A=a1,a2 B=b1\na1 b1\na1 a2\n"); }),
            ErrorCode::kOddComponent);
  EXPECT_EQ(code_of([] { parse_graph("bipartition: A=a1 B=b1\na1 b1\nb1 c\n"); }), ErrorCode::kParse);
  Graph triangle = parse_graph("a b\nb c\nc a\n");
  EXPECT_FALSE(triangle.bipartition().has_value());
}

TEST(EdgeListTest, ErrorsNameTheLine) {
  try {
    parse_graph("a b\nb c d\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { parse_digraph("a -> b\na b\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_digraph("a -> a\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_graph("q q\n"); }), ErrorCode::kParse);
}

TEST(EdgeListTest, Matchings) {
  Graph c6 = testing::cycle_graph(6);
  Matching m = parse_matching(c6, "v1 v2\nv4 v3\nv5 v6\n");
  EXPECT_TRUE(is_perfect_matching(c6, m));
  EXPECT_EQ(serialize_matching(c6, m), "v1 v2\nv3 v4\nv5 v6\n");
  EXPECT_EQ(code_of([&] { parse_matching(c6, "v1 v3\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { parse_matching(c6, "v1 v2\nv2 v3\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([&] { parse_matching(c6, "v1 nope\n"); }), ErrorCode::kParse);
}

TEST(EdgeListTest, GridGoldenFiles) {
  EXPECT_EQ(serialize_digraph(cylindrical_grid(3)), golden("cylindrical_3.txt"));
  EXPECT_EQ(serialize_digraph(retracted_grid(3)), golden("retracted_3.txt"));
  auto m3 = bipartite_matching_grid(3);
  EXPECT_EQ(serialize_graph(m3.graph), golden("matching_grid_3.txt"));
  EXPECT_EQ(serialize_matching(m3.graph, m3.matching), golden("matching_grid_3.matching"));
  // The golden files parse back to the same objects.
  Graph parsed = parse_graph(golden("matching_grid_3.txt"));
  EXPECT_EQ(serialize_graph(parsed), golden("matching_grid_3.txt"));
  EXPECT_TRUE(is_perfect_matching(parsed, parse_matching(parsed, golden("matching_grid_3.matching"))));
}

TEST(DecompositionJsonTest, RoundTrips) {
  Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 9;
    Digraph d = random_digraph(rng, n, 0.3);
    auto cd = random_cubic_decomposition(rng, n, DecompositionKind::kCycle);
    std::string text = serialize_decomposition(cd, d.names());
    auto parsed = std::get<CubicDecomposition>(parse_decomposition(text, d.names()));
    EXPECT_TRUE(same_decomposition(parsed, cd));
    EXPECT_EQ(serialize_decomposition(parsed, d.names()), text);

    auto dtd = random_dtd(rng, d, 1 + trial % 5);
    std::string dtd_text = serialize_decomposition(dtd, d.names());
    auto parsed_dtd = std::get<DirTreeDecomposition>(parse_decomposition(dtd_text, d.names()));
    EXPECT_EQ(parsed_dtd.tree.parent, dtd.tree.parent);
    EXPECT_EQ(parsed_dtd.bags, dtd.bags);
    EXPECT_EQ(parsed_dtd.guards, dtd.guards);
    EXPECT_EQ(serialize_decomposition(parsed_dtd, d.names()), dtd_text);
  }
}

TEST(DecompositionJsonTest, HandWrittenTriangle) {
  Digraph d = parse_digraph("x -> y\ny -> z\nz -> x\n");
  const char* text = R"({
    "kind": "cycle",
    "nodes": [
      {"id": "c", "neighbors": ["lx", "ly", "lz"]},
      {"id": "lx", "neighbors": ["c"], "leaf_of": "x"},
      {"id": "ly", "neighbors": ["c"], "leaf_of": "y"},
      {"id": "lz", "neighbors": ["c"], "leaf_of": "z"}
    ]
  })";
  auto cd = std::get<CubicDecomposition>(parse_decomposition(text, d.names()));
  EXPECT_EQ(decomposition_width(d, cd).width, 2);
}

TEST(DecompositionJsonTest, SchemaViolations) {
  Digraph d = parse_digraph("x -> y\ny -> x\n");
  auto bad = [&](const char* text) {
    return code_of([&] { parse_decomposition(text, d.names()); });
  };
  EXPECT_EQ(bad(R"({"nodes": [{"id": 0}]})"), ErrorCode::kSchema);
  EXPECT_EQ(bad(R"({"kind": "tree", "nodes": [{"id": 0}]})"), ErrorCode::kSchema);
  EXPECT_EQ(bad(R"({"kind": "cycle", "nodes": [{"id": 0, "leaf_of": "q"}]})"), ErrorCode::kSchema);
  EXPECT_EQ(bad(R"({"kind": "cycle", "nodes": [{"id": 0, "neighbors": [1]}, {"id": 1}]})"),
            ErrorCode::kSchema);
  EXPECT_EQ(bad(R"({"kind": "cycle", "nodes": [{"id": 0}],
                   "guards": [{"edge": [0, 0], "set": []}]})"),
            ErrorCode::kSchema);
  EXPECT_EQ(bad(R"({"kind": "dtd", "nodes": [{"id": 0, "bag": ["x", "y"]}]})"), ErrorCode::kSchema);
  EXPECT_EQ(bad("{not json"), ErrorCode::kSchema);
  try {
    parse_decomposition(R"({"kind": "cycle", "nodes": [{"id": 0, "leaf_of": "q", "bag": ["y"]}]})",
                        d.names());
    FAIL();
  } catch (const Error& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("unknown vertex 'q'"), std::string::npos);
    EXPECT_NE(what.find("bags are only allowed"), std::string::npos);
  }
}

TEST(DotTest, Shapes) {
  Graph c6 = testing::cycle_graph(6);
  Matching m = testing::matching_of(c6, {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}});
  std::string dot = to_dot(c6, &m);
  EXPECT_NE(dot.find("\"v1\" -- \"v2\" [penwidth=3];"), std::string::npos);
  EXPECT_NE(dot.find("\"v2\" -- \"v3\";"), std::string::npos);
  EXPECT_NE(to_dot(testing::directed_cycle(2)).find("\"0\" -> \"1\";"), std::string::npos);
  auto cd = caterpillar({0, 1, 2}, DecompositionKind::kCycle);
  EXPECT_NE(to_dot(cd, c6.names()).find("label=\"v1\""), std::string::npos);
}

}  // namespace
}  // namespace matchwidth
