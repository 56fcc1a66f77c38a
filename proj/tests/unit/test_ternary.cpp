#include <gtest/gtest.h>

#include "oracles.hpp"
#include "udh/ternary.hpp"

namespace {

using namespace udh;

TEST(Ternary, EdgeCounts) {
  const std::size_t expected[] = {1, 30, 819};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto t = build_ternary(3, n);
    EXPECT_EQ(t.edge_count(), expected[n - 1]);
    EXPECT_EQ(kary_edge_count(3, n), BigInt(expected[n - 1]));
  }
  EXPECT_EQ(kary_edge_count(3, 10), (big_pow(27, 10) - big_pow(3, 10)) / 24);
}

TEST(Ternary, BuildMatchesEdgeRule) {
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(build_ternary(3, n), oracle::ternary_by_rule(3, n));
  for (std::size_t n = 1; n <= 2; ++n) EXPECT_EQ(build_ternary(4, n), oracle::ternary_by_rule(4, n));
}

TEST(Ternary, EdgeRule) {
  auto v = [](const char* s) { return KaryVector::from_digits(3, s); };
  EXPECT_TRUE(kary_edge(3, std::vector{v("0"), v("1"), v("2")}));
  EXPECT_TRUE(kary_edge(3, std::vector{v("01"), v("12"), v("20")}));
  EXPECT_FALSE(kary_edge(3, std::vector{v("00"), v("01"), v("12")}));
  EXPECT_TRUE(kary_edge(3, std::vector{v("10"), v("11"), v("12")}));
  EXPECT_THROW(kary_edge(3, std::vector{v("0"), v("1"), v("22")}), Error);
  EXPECT_THROW(kary_edge(3, std::vector{v("0"), v("0"), v("1")}), Error);
}

TEST(Ternary, EncodeDecode) {
  for (std::size_t id = 0; id < 27; ++id) EXPECT_EQ(KaryVector::decode(3, 3, id).encode(), id);
  EXPECT_EQ(KaryVector::from_digits(3, "210").encode(), 21u);
}

TEST(Ternary, SizeGuard) { EXPECT_THROW(build_ternary(3, 6), Error); }

TEST(Frequency, AgreesWithContainmentInLevelFour) {
  const auto t4 = build_ternary(3, 4);
  std::size_t frequent = 0;
  enumerate_hypergraphs(3, 4, [&](const Hypergraph& f) {
    const auto w = decide_ternary_embeddable(f);
    EXPECT_EQ(w.has_value(), contains_copy(f, t4).has_value()) << serialize_hypergraph(f);
    if (w) {
      EXPECT_TRUE(verify_embedding(f, *w));
      ++frequent;
    }
  });
  EXPECT_EQ(frequent, 11u);
}

TEST(Frequency, NamedPatterns) {
  EXPECT_FALSE(is_frequent(catalog::complete(3, 4)));
  EXPECT_FALSE(is_frequent(catalog::c5_minus()));
  EXPECT_FALSE(is_frequent(catalog::tight_cycle5()));
  const auto w = decide_ternary_embeddable(catalog::single_edge());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->length, 1u);
  EXPECT_EQ(w->image[0].digits(), "0");
  EXPECT_EQ(w->image[2].digits(), "2");
  EXPECT_TRUE(is_frequent(catalog::edgeless(3, 5)));
}

TEST(Frequency, WitnessesOfRandomSubgraphsOfTernary) {
  // Any induced piece of T_2 is frequent, and the witness must check out.
  const auto t2 = build_ternary(3, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> pick(9);
    std::iota(pick.begin(), pick.end(), 0);
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(6);
    std::vector<Vertex> where(9, 99);
    for (Vertex i = 0; i < 6; ++i) where[pick[i]] = i;
    std::vector<Tuple> edges;
    for (const auto& e : t2.edges()) {
      Tuple img;
      for (Vertex v : e)
        if (where[v] != 99) img.push_back(where[v]);
      if (img.size() == 3) edges.push_back(img);
    }
    const Hypergraph f(3, 6, edges);
    const auto w = decide_ternary_embeddable(f);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_embedding(f, *w));
  }
}

}  // namespace
