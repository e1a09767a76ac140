#include <gtest/gtest.h>

#include <sstream>

#include "medianprod/grid_embed.hpp"
#include "medianprod/io.hpp"
#include "oracles.hpp"

using namespace medianprod;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    read_graph_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(ReadGraph, BasicFormat) {
  auto doc = read_graph_string("# a path with an end loop\n\nn 3\n0 0\n0 1   # first link\n2 1\n");
  EXPECT_EQ(doc.graph, make_pattern(PatternKind::E, 3));
  EXPECT_FALSE(doc.embedding.has_value());

  auto empty = read_graph_string("n 4\n");
  EXPECT_EQ(empty.graph.order(), 4u);
  EXPECT_EQ(empty.graph.size(), 0u);

  auto tabs = read_graph_string("n\t2\r\n0\t1\r\n");
  EXPECT_EQ(tabs.graph, make_pattern(PatternKind::Path, 2));
}

TEST(ReadGraph, Coordinates) {
  auto doc = read_graph_string("n 2\n0 1\nv 1 1 0\nv 0 0 0\n");
  ASSERT_TRUE(doc.embedding.has_value());
  EXPECT_EQ(doc.embedding->coords, (std::vector<GridPoint>{{0, 0}, {1, 0}}));

  auto neg = read_graph_string("n 1\nv 0 -3 7\n");
  EXPECT_EQ(neg.embedding->coords[0], (GridPoint{-3, 7}));
}

TEST(ReadGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("n 3\n0 1\n1 7\n"), 3u);
  EXPECT_EQ(error_line("n 3\n0 1\n1 0\n"), 3u);
  EXPECT_EQ(error_line("# c\nm 3\n"), 2u);
  EXPECT_EQ(error_line("n x\n"), 1u);
  EXPECT_EQ(error_line("n 3\n0 1 2\n"), 2u);
  EXPECT_EQ(error_line("n 3\n0 -1\n"), 2u);
  EXPECT_EQ(error_line("n 3\n0 1\n\nv 0 1\n"), 4u);
  EXPECT_EQ(error_line("n 3\nv 5 0 0\n"), 2u);
  EXPECT_EQ(error_line("n 2\nv 0 0 0\nv 0 1 0\n"), 3u);
  EXPECT_EQ(error_line("n 2\nv 0 0 x\n"), 2u);
  EXPECT_EQ(error_line("n 2\n2 2\n"), 2u);
  EXPECT_EQ(error_line("# nothing\n"), 1u);
  EXPECT_EQ(error_line(""), 0u);
  EXPECT_EQ(error_line("n 2\nv 0 0 0\n"), 0u);
}

TEST(ReadGraph, MessageNamesSourceAndLine) {
  std::istringstream in("n 2\n0 5\n");
  try {
    read_graph(in, "g.txt");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("g.txt: line 2: ", 0), 0u) << e.what();
  }
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), Error);
}

TEST(WriteGraph, SortedEdgesRoundTrip) {
  auto g = Graph::from_edges(4, {{3, 1}, {2, 2}, {1, 0}});
  EXPECT_EQ(to_text(g), "n 4\n0 1\n1 3\n2 2\n");

  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    auto r = oracle::random_graph(rng, trial % 12, 0.3, 0.3);
    EXPECT_EQ(read_graph_string(to_text(r)).graph, r);
  }
}

TEST(WriteGraph, EmbeddingRoundTrip) {
  auto u = unfold(4, 3);
  std::ostringstream out;
  write_graph(out, u.product.graph);
  write_embedding(out, u.embedding);
  auto doc = read_graph_string(out.str());
  EXPECT_EQ(doc.graph, u.product.graph);
  ASSERT_TRUE(doc.embedding.has_value());
  EXPECT_EQ(*doc.embedding, u.embedding);
}

TEST(WriteDot, PlainAndPinned) {
  auto g = make_pattern(PatternKind::E, 2);
  std::ostringstream plain;
  write_dot(plain, g);
  EXPECT_EQ(plain.str(), "graph G {\n  0;\n  1;\n  0 -- 0;\n  0 -- 1;\n}\n");

  std::ostringstream pinned;
  GridEmbedding emb{{{0, 0}, {1, 0}}};
  write_dot(pinned, make_pattern(PatternKind::Path, 2), [](Vertex v) { return "v" + std::to_string(v); }, &emb);
  EXPECT_NE(pinned.str().find("1 [label=\"v1\", pos=\"1,0!\"];"), std::string::npos) << pinned.str();
}
