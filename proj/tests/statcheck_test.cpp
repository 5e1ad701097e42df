#include "hamlab/statcheck.hpp"

#include <random>

#include "gtest/gtest.h"
#include "hamlab/randgen.hpp"
#include "test_support.hpp"

namespace hamlab {
namespace {

Graph two_cliques(std::size_t half) {
  std::vector<Edge> es;
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t u = 0; u < half; ++u)
      for (std::size_t v = u + 1; v < half; ++v)
        es.emplace_back(static_cast<Vertex>(side * half + u), static_cast<Vertex>(side * half + v));
  return Graph::from_edges(2 * half, es);
}

Graph without_vertex_edges(const Graph& g, Vertex x) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (e.u != x && e.v != x) es.push_back(e);
  return Graph::from_edges(g.n(), es);
}

TEST(CheckDegreesTest, CompleteGraphPasses) {
  EXPECT_TRUE(check_degrees(Graph::complete(20), 1.0, 0.1).passed());
}

TEST(CheckDegreesTest, EmptyGraphFails) {
  const auto r = check_degrees(Graph(20), 0.5, 0.1);
  EXPECT_EQ(r.status, CheckStatus::fail);
  EXPECT_FALSE(r.bounds[0].holds());
}

TEST(CheckDegreesTest, RandomGraphsWithLargeDegreesPass) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    EXPECT_TRUE(check_degrees(sample_gnp({2000, 0.05, s}), 0.05, 0.5).passed()) << s;
  }
}

TEST(CheckDegreesTest, ExtremeDegreesAtNpTwentyFail) {
  // With np = 20 about 37 of 2000 vertices fall outside [10, 30] on average.
  int passes = 0;
  for (std::uint64_t s = 0; s < 10; ++s) passes += check_degrees(sample_gnp({2000, 0.01, s}), 0.01, 0.5).passed();
  EXPECT_LE(passes, 1);
}

TEST(CheckDensityTest, CompleteGraphHasNoDeviation) {
  const auto r = check_density(Graph::complete(40), 1.0, 30, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_LE(r.bounds[0].observed, -4.0);
  EXPECT_TRUE(r.surrogate);
}

TEST(CheckDensityTest, EmptyGraphFails) {
  EXPECT_EQ(check_density(Graph(400), 0.3, 20, 1).status, CheckStatus::fail);
}

TEST(CheckDensityTest, RandomGraphsPass) {
  int passes = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    passes += check_density(sample_gnp({1000, 0.05, s}), 0.05, 50, s).passed();
  }
  EXPECT_GE(passes, 19);
}

TEST(CheckSmallExpansionTest, CompleteGraphPasses) {
  // (log 10)^(-1/4) / 0.5 = 1.62, so only singletons are admissible.
  const auto r = check_small_expansion(Graph::complete(10), 0.5, 0.1, 10, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.samples, 10u);
}

TEST(CheckSmallExpansionTest, IsolatedVertexFails) {
  const Graph g = without_vertex_edges(Graph::complete(10), 4);
  const auto r = check_small_expansion(g, 0.5, 0.1, 10, 1);
  EXPECT_EQ(r.status, CheckStatus::fail);
  EXPECT_DOUBLE_EQ(r.bounds[0].observed, 0.0);
}

TEST(CheckSmallExpansionTest, DenseGraphHasEmptyRange) {
  EXPECT_EQ(check_small_expansion(Graph::complete(30), 1.0, 0.1, 10, 1).status,
            CheckStatus::not_applicable);
}

TEST(CheckLargeExpansionTest, TwoCliquesFail) {
  const auto r = check_large_expansion(two_cliques(50), 0.1, 100, 3);
  EXPECT_EQ(r.status, CheckStatus::fail);
  EXPECT_EQ(r.bounds[0].name, "connected");
  EXPECT_FALSE(r.bounds[0].holds());
}

TEST(CheckLargeExpansionTest, CompleteGraphDoesNotFail) {
  const auto r = check_large_expansion(Graph::complete(100), 0.1, 100, 3);
  EXPECT_NE(r.status, CheckStatus::fail);
  EXPECT_TRUE(r.bounds[0].holds());
}

TEST(RecomputeStatusTest, MatchesReportedStatus) {
  const Graph g = sample_gnp({300, 0.05, 8});
  for (const CheckReport& r :
       {check_degrees(g, 0.05, 0.3), check_density(g, 0.05, 40, 2), check_small_expansion(g, 0.05, 0.1, 40, 2),
        check_large_expansion(g, 0.1, 40, 2), check_large_expansion(two_cliques(10), 0.1, 5, 1)}) {
    EXPECT_EQ(recompute_status(r), r.status) << r.name;
  }
}

TEST(RecomputeStatusTest, FailingBoundWins) {
  CheckReport r;
  r.applicable = false;
  r.bounds.push_back({"x", 1.0, 2.0, Bound::Cmp::ge});
  EXPECT_EQ(recompute_status(r), CheckStatus::fail);
  r.bounds[0].observed = 3.0;
  EXPECT_EQ(recompute_status(r), CheckStatus::not_applicable);
  r.applicable = true;
  EXPECT_EQ(recompute_status(r), CheckStatus::pass);
}

TEST(StatcheckTest, DeterministicPerSeed) {
  const Graph g = sample_gnp({500, 0.05, 1});
  const auto a = check_density(g, 0.05, 30, 9);
  const auto b = check_density(g, 0.05, 30, 9);
  EXPECT_EQ(a.bounds[0].observed, b.bounds[0].observed);
  const auto c = check_small_expansion(g, 0.05, 0.1, 30, 9);
  const auto d = check_small_expansion(g, 0.05, 0.1, 30, 9);
  EXPECT_EQ(c.bounds[0].observed, d.bounds[0].observed);
}

TEST(StatcheckTest, AddingEdgesKeepsExpansionPassing) {
  std::mt19937 gen(5);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = sample_gnp({200, 0.05, s});
    const Graph more = unite(g, testing::random_small_graph(200, 0.01, gen));
    const auto before = check_small_expansion(g, 0.05, 0.1, 50, s);
    const auto after = check_small_expansion(more, 0.05, 0.1, 50, s);
    EXPECT_GE(after.bounds[0].observed, before.bounds[0].observed);
    if (before.passed()) {
      EXPECT_TRUE(after.passed());
    }
  }
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = testing::random_small_graph(16, 0.2, gen);
    const Graph more = unite(g, testing::random_small_graph(16, 0.1, gen));
    const auto before = check_small_expansion(g, 0.2, 0.1, 0, s);
    const auto after = check_small_expansion(more, 0.2, 0.1, 0, s);
    if (before.passed()) {
      EXPECT_TRUE(after.passed());
    }
  }
}

}  // namespace
}  // namespace hamlab
