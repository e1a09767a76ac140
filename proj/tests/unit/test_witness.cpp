#include <gtest/gtest.h>

#include "medianprod/witness.hpp"

using namespace medianprod;

namespace {

WitnessOptions with_k(std::size_t k) { return {k, std::nullopt}; }
WitnessOptions with_kl(std::size_t k, std::size_t l) { return {k, l}; }

}  // namespace

TEST(Witness, EveryIdValidatesWithDefaults) {
  for (auto id : kWitnessIds) {
    auto b = make_witness(id);
    EXPECT_EQ(b.id, id);
    EXPECT_EQ(check_witness(b), "") << id;
    auto text = describe(b);
    EXPECT_NE(text.find("status VALID\n"), std::string::npos) << text;
  }
}

TEST(Witness, TwoLoopsAdjacentIsATriangle) {
  auto b = make_witness("two-loops-adjacent");
  const auto& w = std::get<OddCycleWitness>(b.certificate);
  EXPECT_EQ(w.cycle.size(), 3u);
}

TEST(Witness, OddCycleLift) {
  for (std::size_t k = 3; k <= 9; k += 2)
    for (std::size_t l = 2; l <= 4; ++l) {
      auto b = make_witness("odd-cycle-lift", with_kl(k, l));
      EXPECT_EQ(std::get<OddCycleWitness>(b.certificate).cycle.size(), k);
      EXPECT_EQ(check_witness(b), "");
    }
  EXPECT_THROW(make_witness("odd-cycle-lift", with_k(4)), Error);
}

TEST(Witness, DkDoubleMedian) {
  auto b = make_witness("dk-double-median");
  const auto& t = std::get<BadTriple>(b.certificate);
  const auto& m = b.product.map;
  EXPECT_EQ(t.triple, (std::array<Vertex, 3>{m.encode(1, 0), m.encode(1, 1), m.encode(1, 2)}));
  EXPECT_EQ(t.medians, (std::vector<Vertex>{m.encode(0, 0), m.encode(2, 0)}));
  for (std::size_t k = 3; k <= 8; ++k) EXPECT_EQ(check_witness(make_witness("dk-double-median", with_k(k))), "") << k;
}

TEST(Witness, K23Embeddings) {
  auto h1 = make_witness("h1-k23");
  const auto& m = h1.product.map;
  EXPECT_EQ(std::get<K23Embedding>(h1.certificate),
            (K23Embedding{{m.encode(0, 1), m.encode(2, 1)}, {m.encode(1, 0), m.encode(1, 1), m.encode(1, 2)}}));
  for (auto id : {"h2-k23", "h1-k23", "star-k23"}) {
    auto b = make_witness(id);
    EXPECT_EQ(check_k23(b.product.graph, std::get<K23Embedding>(b.certificate)), "") << id;
  }
}

TEST(Witness, StarOnTheFirstFactorSide) {
  auto p = direct_product(make_pattern(PatternKind::Star, 3), make_pattern(PatternKind::E, 3));
  auto e = contains_k23_subgraph(p.graph);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(check_k23(p.graph, *e), "");
}

TEST(Witness, H3EmptyMedianSet) {
  auto b = make_witness("h3-no-median");
  EXPECT_TRUE(std::get<BadTriple>(b.certificate).medians.empty());
}

TEST(Witness, HPrimePathsBothParities) {
  for (std::size_t k = 4; k <= 10; ++k) {
    auto b = make_witness("hpk-paths", with_k(k));
    EXPECT_EQ(check_witness(b), "") << "k=" << k;
    EXPECT_EQ(std::get<BadTriple>(b.certificate).medians.size(), 2u);
  }
  EXPECT_THROW(make_witness("hpk-paths", with_k(3)), Error);
}

TEST(Witness, CycleCaseIsNeverMedian) {
  for (std::size_t k = 3; k <= 6; ++k)
    for (std::size_t l = 3; l <= 4; ++l) {
      auto b = make_witness("cycle-case", with_kl(k, l));
      EXPECT_FALSE(std::get<MedianVerdict>(b.certificate).is_median());
      EXPECT_EQ(check_witness(b), "");
    }
  EXPECT_THROW(make_witness("cycle-case", with_kl(4, 2)), Error);
}

TEST(Witness, MunariniBoundaryIsMedian) {
  auto b = make_witness("munarini-boundary");
  EXPECT_TRUE(b.claims_median);
  EXPECT_TRUE(std::get<MedianVerdict>(b.certificate).is_median());
  EXPECT_EQ(b.product.graph.size(), 4u);
}

TEST(Witness, ParameterAndIdErrors) {
  EXPECT_THROW(make_witness("no-such-id"), Error);
  EXPECT_THROW(make_witness("h3-no-median", with_k(3)), Error);
  EXPECT_THROW(make_witness("two-loops-adjacent", WitnessOptions{std::nullopt, 3}), Error);
  EXPECT_THROW(make_witness("hpk-paths", with_kl(4, 3)), Error);
}

TEST(Witness, TamperingIsDetected) {
  auto b = make_witness("dk-double-median");
  std::get<BadTriple>(b.certificate).medians.pop_back();
  EXPECT_NE(check_witness(b), "");

  auto c = make_witness("h1-k23");
  std::get<K23Embedding>(c.certificate).triple[0] = std::get<K23Embedding>(c.certificate).pair[0];
  EXPECT_NE(check_witness(c), "");

  auto d = make_witness("two-loops-adjacent");
  d.g = make_pattern(PatternKind::Path, 2);
  EXPECT_EQ(check_witness(d), "product does not match its factors");

  auto e = make_witness("munarini-boundary");
  e.claims_median = false;
  EXPECT_NE(check_witness(e), "");
  EXPECT_NE(describe(e).find("status INVALID"), std::string::npos);
}
