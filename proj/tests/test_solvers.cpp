#include <gtest/gtest.h>

#include <random>

#include "defdom/solvers.hpp"
#include "oracles.hpp"

using namespace defdom;

TEST(MinSetDefense, Examples) {
  EXPECT_EQ(min_set_defense(star_graph(5), 2).optimum, 5);
  EXPECT_EQ(min_set_defense(Graph(1), 3).optimum, 1);
  EXPECT_EQ(min_set_defense(cycle_graph(4), 1).optimum, 2);
  EXPECT_THROW(min_set_defense(cycle_graph(4), 0), InputError);
}

TEST(MinMultisetDefense, Examples) {
  auto star = min_multiset_defense(star_graph(5), 2);
  EXPECT_EQ(star.optimum, 2);
  EXPECT_EQ(star.witness.count(1), 2);
  EXPECT_EQ(star.witness.total(), 2);
  // P4 value from the independent enumeration over all multiplicity vectors.
  const long long p4 = oracle::min_defense(path_graph(4), 2, 2);
  EXPECT_EQ(p4, 2);
  EXPECT_EQ(min_multiset_defense(path_graph(4), 2).optimum, p4);
}

TEST(MinConstrainedMultiset, Examples) {
  auto g = star_graph(5);
  auto none = min_constrained_multiset(g, std::vector<VertexSet>{}, {}, {});
  ASSERT_TRUE(none);
  EXPECT_EQ(none->optimum, 0);
  EXPECT_TRUE(none->witness.empty());

  std::vector<VertexSet> pairs;
  for (Vertex a = 2; a <= 6; ++a)
    for (Vertex b = a + 1; b <= 6; ++b) pairs.push_back({a, b});
  VertexMultiset upper;
  upper.add(1, 2);
  auto r = min_constrained_multiset(g, pairs, {}, upper);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->optimum, 2);

  VertexMultiset forced;
  forced.add(1, 1);
  forced.add(2, 1);
  auto f = min_constrained_multiset(g, std::vector<VertexSet>{{2, 3}}, forced, forced);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->optimum, 2);

  VertexMultiset one;
  one.add(1, 1);
  EXPECT_FALSE(min_constrained_multiset(g, pairs, {}, one));
  EXPECT_THROW(min_constrained_multiset(g, pairs, upper, one), InputError);
}

TEST(DominationNumber, Examples) {
  EXPECT_EQ(domination_number(complete_graph(5)).optimum, 1);
  EXPECT_EQ(domination_number(cycle_graph(4)).optimum, 2);
  EXPECT_EQ(domination_number(star_graph(6)).optimum, 1);
  EXPECT_EQ(domination_number(petersen_graph()).optimum, 3);
}

TEST(SolverProperties, AgreeWithEnumerationOracle) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 40; ++round) {
    int n = 1 + static_cast<int>(rng() % 5);
    auto g = random_graph(n, 0.4, rng());
    int k = 1 + static_cast<int>(rng() % 3);
    EXPECT_EQ(min_multiset_defense(g, k).optimum, oracle::min_defense(g, k, k));
    EXPECT_EQ(min_set_defense(g, k).optimum, oracle::min_defense(g, k, 1));
  }
}

TEST(SolverProperties, OrderingAndMinimality) {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = random_graph(n, 0.4, rng());
    long long prev_set = 0, prev_multi = 0;
    for (int k = 1; k <= 3; ++k) {
      auto set = min_set_defense(g, k);
      auto multi = min_multiset_defense(g, k);
      EXPECT_LE(multi.optimum, set.optimum);
      EXPECT_GE(set.optimum, prev_set);
      EXPECT_GE(multi.optimum, prev_multi);
      if (n >= k) { EXPECT_GE(multi.optimum, k); }
      prev_set = set.optimum;
      prev_multi = multi.optimum;
      EXPECT_TRUE(set.witness.is_set());
      for (const auto* r : {&set, &multi}) {
        EXPECT_TRUE(good_defense(g, r->witness, k));
        for (auto [v, c] : r->witness.entries()) {
          auto less = r->witness;
          less.remove(v);
          EXPECT_FALSE(good_defense(g, less, k));
        }
      }
    }
    EXPECT_EQ(min_set_defense(g, 1).optimum, min_multiset_defense(g, 1).optimum);
  }
}
