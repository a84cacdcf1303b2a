#include <gtest/gtest.h>

#include "mcc/errors.hpp"
#include "mcc/generators.hpp"
#include "mcc/oracle.hpp"
#include "support/brute_force.hpp"

namespace mcc {
namespace {

void expect_witness(const Graph& g, const OracleResult& r, int t) {
  EXPECT_TRUE(validate_coloring(g, r.witness, t));
  EXPECT_EQ(testing::naive_max_component(g, r.witness.colors), r.value);
}

TEST(Oracle, HandExamples) {
  Graph k4 = gen_wheel(4);
  EXPECT_EQ(exact_mcc(k4, 2).value, 2);
  EXPECT_EQ(exact_mcc(k4, 3).value, 2);
  EXPECT_EQ(exact_mcc(k4, 4).value, 1);
  OracleResult w5 = exact_mcc(gen_wheel(5), 2);
  EXPECT_EQ(w5.value, 3);
  expect_witness(gen_wheel(5), w5, 2);
  EXPECT_GT(w5.nodes_explored, 0u);
}

TEST(Oracle, Decision) {
  Graph k3 = gen_random_mop(3, 0);
  EXPECT_FALSE(exact_mcc_decision(k3, 2, 1));
  EXPECT_TRUE(exact_mcc_decision(k3, 2, 2));
  EXPECT_TRUE(exact_mcc_decision(k3, 3, 1));
  EXPECT_TRUE(exact_mcc_decision(gen_complete_3tree(2).first, 3, 4));
  EXPECT_FALSE(exact_mcc_decision(gen_wheel(5), 2, 2));
  EXPECT_FALSE(exact_mcc_decision(k3, 2, 0));
}

TEST(Oracle, EmptyAndEdgelessGraphs) {
  EXPECT_EQ(exact_mcc(Graph(0), 2).value, 0);
  OracleResult r = exact_mcc(Graph(5), 1);
  EXPECT_EQ(r.value, 1);
  expect_witness(Graph(5), r, 1);
}

TEST(Oracle, RejectsZeroColors) {
  EXPECT_THROW(exact_mcc(gen_wheel(5), 0), InvalidParameter);
  EXPECT_THROW(exact_mcc_decision(gen_wheel(5), 0, 3), InvalidParameter);
}

TEST(Oracle, BudgetExhaustion) {
  Graph g = testing::random_graph(26, 0.3, 5);
  OracleOptions tiny;
  tiny.budget = 50;
  EXPECT_THROW(exact_mcc(g, 2, tiny), BudgetExhausted);
  // Any witness needs one search node per vertex.
  Graph sparse = testing::random_graph(60, 0.1, 6);
  EXPECT_THROW(exact_mcc_decision(sparse, 2, 60, tiny), BudgetExhausted);
}

class OracleRandom : public ::testing::TestWithParam<int> {};

TEST_P(OracleRandom, MatchesBruteForce) {
  const std::uint64_t seed = GetParam();
  const int n = 4 + GetParam() % 7;
  Graph g = testing::random_graph(n, 0.35 + 0.02 * (GetParam() % 10), seed);
  for (int t = 1; t <= 3; ++t) {
    OracleResult r = exact_mcc(g, t);
    EXPECT_EQ(r.value, testing::brute_force_mcc(g, t)) << "t=" << t;
    expect_witness(g, r, t);
  }
}

TEST_P(OracleRandom, OneColorIsTheLargestComponent) {
  Graph g = testing::random_graph(12, 0.15, GetParam() + 50);
  EXPECT_EQ(static_cast<std::size_t>(exact_mcc(g, 1).value), largest_connected_component(g));
}

TEST_P(OracleRandom, MonotoneInColors) {
  Graph g = testing::random_graph(11, 0.45, GetParam() + 90);
  int previous = exact_mcc(g, 1).value;
  for (int t = 2; t <= 5; ++t) {
    const int v = exact_mcc(g, t).value;
    EXPECT_LE(v, previous);
    previous = v;
  }
}

TEST_P(OracleRandom, DecisionAgreesWithOptimum) {
  Graph g = gen_random_mop(8 + GetParam() % 6, GetParam());
  const int opt = exact_mcc(g, 2).value;
  EXPECT_TRUE(exact_mcc_decision(g, 2, opt));
  EXPECT_FALSE(exact_mcc_decision(g, 2, opt - 1));
}

TEST_P(OracleRandom, WitnessIndependentOfThreads) {
  Graph g = testing::random_graph(16, 0.3, GetParam() + 400);
  OracleOptions one, many;
  many.threads = 4;
  OracleResult a = exact_mcc(g, 2, one), b = exact_mcc(g, 2, many);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  OracleResult c = exact_mcc(g, 3, one), d = exact_mcc(g, 3, many);
  EXPECT_EQ(c.witness, d.witness);
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleRandom, ::testing::Range(1, 21));

TEST(Oracle, DoubleWheelsWithThreeColors) {
  for (int n = 5; n <= 8; ++n) {
    for (bool adjacent : {false, true}) {
      Graph g = gen_double_wheel(n, adjacent);
      OracleResult r = exact_mcc(g, 3);
      EXPECT_LE(r.value, 2);
      EXPECT_EQ(r.value, testing::brute_force_mcc(g, 3));
    }
  }
}

}  // namespace
}  // namespace mcc
