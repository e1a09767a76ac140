#include <gtest/gtest.h>

#include "medianprod/grid_embed.hpp"
#include "medianprod/median.hpp"
#include "oracles.hpp"

using namespace medianprod;

namespace {

// Subgraph of the w x h complete grid on the kept cells, keeping each
// lattice edge with probability p_edge. Vertices are numbered in cell order.
struct GridSample {
  Graph g;
  GridEmbedding emb;
};

GridSample grid_subgraph(const std::vector<GridPoint>& cells, double p_edge, std::mt19937& rng) {
  std::bernoulli_distribution keep(p_edge);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < cells.size(); ++u)
    for (Vertex v = u + 1; v < cells.size(); ++v)
      if (l1_distance(cells[u], cells[v]) == 1 && keep(rng)) edges.emplace_back(u, v);
  return {Graph::from_edges(cells.size(), edges), GridEmbedding{cells}};
}

GridSample induced_grid(const std::vector<GridPoint>& cells) {
  std::mt19937 unused(0);
  return grid_subgraph(cells, 1.0, unused);
}

std::vector<GridPoint> rect(long w, long h) {
  std::vector<GridPoint> out;
  for (long a = 0; a < w; ++a)
    for (long b = 0; b < h; ++b) out.push_back({a, b});
  return out;
}

}  // namespace

TEST(Squares, Examples) {
  EXPECT_EQ(count_squares(make_pattern(PatternKind::Cycle, 4)), 1u);
  EXPECT_EQ(count_squares(direct_product(make_pattern(PatternKind::Path, 3), make_pattern(PatternKind::E, 3)).graph),
            2u);
  EXPECT_EQ(count_squares(make_pattern(PatternKind::K23)), 3u);
  EXPECT_EQ(count_squares(make_pattern(PatternKind::Cycle, 5)), 0u);
  EXPECT_EQ(count_squares(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 0}, {1, 1}})), 1u);
}

TEST(Squares, MatchesFourSetScan) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = oracle::random_graph(rng, 1 + trial % 9, 0.2 + 0.1 * (trial % 5), 0.2);
    ASSERT_EQ(count_squares(g), oracle::squares(g));
  }
}

TEST(KsMedianTest, HandBuiltExamples) {
  GridEmbedding sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  EXPECT_TRUE(ks_median_test(make_pattern(PatternKind::Cycle, 4), sq));

  GridEmbedding line{{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}};
  EXPECT_TRUE(ks_median_test(make_pattern(PatternKind::Path, 5), line));

  // 3x3 block without its centre: an 8-cycle with no squares.
  std::vector<GridPoint> ring;
  for (auto p : rect(3, 3))
    if (!(p.a == 1 && p.b == 1)) ring.push_back(p);
  auto c8 = induced_grid(ring);
  EXPECT_EQ(c8.g.size(), 8u);
  EXPECT_EQ(count_squares(c8.g), 0u);
  EXPECT_FALSE(ks_median_test(c8.g, c8.emb));
  EXPECT_FALSE(median_check(c8.g).is_median());
}

TEST(KsMedianTest, AgreesWithMedianCheckOnGridCorpus) {
  std::vector<GridSample> corpus;
  for (long w = 1; w <= 4; ++w)
    for (long h = 1; h <= 4; ++h) corpus.push_back(induced_grid(rect(w, h)));
  corpus.push_back(induced_grid({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}}));
  corpus.push_back(induced_grid({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}));
  corpus.push_back(induced_grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}, {1, 2}}));
  {
    std::vector<GridPoint> ring;
    for (auto p : rect(3, 3))
      if (!(p.a == 1 && p.b == 1)) ring.push_back(p);
    corpus.push_back(induced_grid(ring));
  }
  {
    std::vector<GridPoint> frame;
    for (auto p : rect(4, 3))
      if (!(p.b == 1 && (p.a == 1 || p.a == 2))) frame.push_back(p);
    corpus.push_back(induced_grid(frame));
  }

  std::mt19937 rng(52);
  while (corpus.size() < 400) {
    std::vector<GridPoint> cells;
    for (auto p : rect(4, 4))
      if (rng() % 4 != 0) cells.push_back(p);
    if (cells.empty()) continue;
    auto s = grid_subgraph(cells, rng() % 2 ? 1.0 : 0.8, rng);
    if (!is_connected(s.g)) continue;
    corpus.push_back(std::move(s));
  }

  int medians = 0, non_medians = 0;
  for (const auto& s : corpus) {
    bool ks = ks_median_test(s.g, s.emb);
    ASSERT_EQ(ks, median_check(s.g).is_median()) << "n=" << s.g.order() << " m=" << s.g.size();
    (ks ? medians : non_medians)++;
  }
  EXPECT_GT(medians, 20);
  EXPECT_GT(non_medians, 20);
}

TEST(KsMedianTest, RejectsInvalidEmbeddings) {
  auto c4 = make_pattern(PatternKind::Cycle, 4);
  EXPECT_THROW(ks_median_test(c4, GridEmbedding{{{0, 0}, {1, 0}, {1, 1}}}), InvalidEmbedding);
  EXPECT_THROW(ks_median_test(c4, GridEmbedding{{{0, 0}, {1, 0}, {1, 1}, {1, 0}}}), InvalidEmbedding);
  EXPECT_THROW(ks_median_test(c4, GridEmbedding{{{0, 0}, {1, 0}, {1, 1}, {0, 2}}}), InvalidEmbedding);
  EXPECT_THROW(ks_median_test(make_pattern(PatternKind::E, 2), GridEmbedding{{{0, 0}, {1, 0}}}),
               InvalidEmbedding);
  EXPECT_THROW(ks_median_test(Graph::from_edges(2, std::span<const Edge>{}), GridEmbedding{{{0, 0}, {5, 5}}}),
               Error);
}

TEST(Unfold, CountsEmbeddingAndVerdictOverRange) {
  for (std::size_t k = 3; k <= 8; ++k)
    for (std::size_t l = 2; l <= 6; ++l) {
      auto u = unfold(k, l);
      const auto& g = u.product.graph;
      EXPECT_EQ(g.order(), k * l);
      EXPECT_EQ(g.size(), (2 * l - 1) * (k - 1));
      EXPECT_EQ(count_squares(g), (k - 2) * (l - 1));
      EXPECT_EQ(g.size() + 1, g.order() + count_squares(g));
      EXPECT_FALSE(embedding_error(g, u.embedding).has_value());
      EXPECT_TRUE(ks_median_test(g, u.embedding));
      EXPECT_TRUE(median_check(g).is_median());
      long min_a = 1, min_b = 1;
      for (auto p : u.embedding.coords) {
        min_a = std::min(min_a, p.a);
        min_b = std::min(min_b, p.b);
      }
      EXPECT_EQ(min_a, 0);
      EXPECT_EQ(min_b, 0);
    }
}

TEST(Unfold, SmallInstances) {
  auto u = unfold(3, 2);
  EXPECT_EQ(u.product.graph.order(), 6u);
  EXPECT_EQ(u.product.graph.size(), 6u);
  EXPECT_EQ(count_squares(u.product.graph), 1u);

  auto big = unfold(6, 5);
  EXPECT_EQ(big.product.graph.size() + 1 - big.product.graph.order(), 16u);
  EXPECT_EQ(count_squares(big.product.graph), 16u);
}

TEST(Unfold, AnyCoordinateShiftIsDetected) {
  for (std::size_t k = 3; k <= 8; ++k)
    for (std::size_t l = 2; l <= 6; ++l) {
      auto u = unfold(k, l);
      for (Vertex v = 0; v < u.embedding.coords.size(); ++v)
        for (int axis = 0; axis < 2; ++axis)
          for (long delta : {-1L, 1L}) {
            auto bad = u.embedding;
            (axis == 0 ? bad.coords[v].a : bad.coords[v].b) += delta;
            ASSERT_TRUE(embedding_error(u.product.graph, bad).has_value())
                << "k=" << k << " l=" << l << " v=" << v;
            ASSERT_THROW(ks_median_test(u.product.graph, bad), InvalidEmbedding);
          }
    }
}

TEST(Unfold, RangeErrors) {
  EXPECT_THROW(unfold(2, 3), Error);
  EXPECT_THROW(unfold(3, 1), Error);
}
