#include "hamlab/solver.hpp"

#include <random>

#include "gtest/gtest.h"
#include "hamlab/oracle.hpp"
#include "hamlab/randgen.hpp"
#include "test_support.hpp"

namespace hamlab {
namespace {

using ::hamlab::testing::naive_hamiltonian;
using ::hamlab::testing::petersen;
using ::hamlab::testing::random_small_graph;

TEST(ExtendTest, PrependsAtHead) {
  const auto q = extend(Graph::complete(4), PathSeq({0, 1}));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->vector(), (std::vector<Vertex>{2, 0, 1}));
}

TEST(ExtendTest, SpanningPathHasNoExtension) {
  EXPECT_FALSE(extend(Graph::cycle(5), PathSeq({0, 1, 2, 3, 4})));
}

TEST(ExtendTest, FallsBackToTail) {
  const auto q = extend(Graph::path(3), PathSeq({0, 1}));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->vector(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(GreedyPathTest, IsMaximal) {
  std::mt19937 gen(3);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_small_graph(12, 0.3, gen);
    const PathSeq p = greedy_path(g, 0);
    EXPECT_TRUE(p.realized_in(g));
    EXPECT_FALSE(extend(g, p));
  }
}

TEST(HamiltonTest, CycleGraph) {
  const auto out = hamilton(Graph::cycle(7));
  ASSERT_TRUE(out.hamiltonian());
  EXPECT_TRUE(validate_cycle(Graph::cycle(7), out.cycle));
}

TEST(HamiltonTest, CompleteGraph) {
  const auto out = hamilton(Graph::complete(4));
  ASSERT_TRUE(out.hamiltonian());
  EXPECT_EQ(out.cycle.size(), 4u);
}

TEST(HamiltonTest, StarFailsOnMinDegree) {
  const Graph star = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto out = hamilton(star);
  EXPECT_FALSE(out.hamiltonian());
  EXPECT_EQ(out.reason, "min-degree");
}

TEST(HamiltonTest, FailureReasons) {
  EXPECT_EQ(hamilton(Graph::complete(2)).reason, "too-small");
  const Graph two_triangles =
      Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(hamilton(two_triangles).reason, "disconnected");
  EXPECT_EQ(hamilton(petersen()).reason, "exhausted");
}

TEST(HamiltonTest, DeterministicForFixedSeed) {
  const Graph g = sample_gnp({80, 0.1, 5});
  SolveConfig cfg;
  cfg.seed = 11;
  const auto a = hamilton(g, cfg);
  const auto b = hamilton(g, cfg);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.cycle, b.cycle);
  EXPECT_EQ(a.stats.rotations, b.stats.rotations);
}

TEST(HamiltonTest, OutputsAreValidCycles) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const std::size_t n = 6 + s % 45;
    const Graph g = sample_gnp({n, 0.2 + 0.1 * static_cast<double>(s % 7), s});
    SolveConfig cfg;
    cfg.seed = s;
    const auto out = hamilton(g, cfg);
    if (out.hamiltonian()) {
      EXPECT_TRUE(validate_cycle(g, out.cycle)) << s;
    }
  }
}

TEST(HamiltonTest, NeverContradictsBruteForce) {
  std::mt19937 gen(99);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_small_graph(3 + gen() % 7, 0.45, gen);
    if (hamilton(g).hamiltonian()) {
      EXPECT_TRUE(naive_hamiltonian(g));
    }
  }
}

TEST(HamiltonSplitTest, RotationsOnPathClosingFromReserve) {
  const Graph rot = Graph::path(5);
  const Graph ext = Graph::from_edges(5, std::vector<Edge>{{0, 4}});
  const auto out = hamilton_split(rot, ext);
  ASSERT_TRUE(out.hamiltonian());
  EXPECT_TRUE(validate_cycle(Graph::cycle(5), out.cycle));
  EXPECT_FALSE(hamilton(rot).hamiltonian());
}

TEST(HamiltonSplitTest, MismatchedVertexCountsThrow) {
  EXPECT_THROW(hamilton_split(Graph::cycle(5), Graph(6)), std::invalid_argument);
}

TEST(HamiltonSplitTest, EmptyReserveMatchesDirect) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = sample_gnp({10 + s % 30, 0.25, s});
    SolveConfig cfg;
    cfg.seed = s;
    const auto a = hamilton(g, cfg);
    const auto b = hamilton_split(g, Graph(g.n()), cfg);
    EXPECT_EQ(a.status, b.status) << s;
    EXPECT_EQ(a.cycle, b.cycle) << s;
  }
}

TEST(HamiltonSplitTest, SucceedsOnSprinkledRandomGraph) {
  const Graph g = sample_gnp({200, 0.15, 1});
  const auto parts = sprinkle(g, 0.3, 2);
  const auto out = hamilton_split(parts.kept, parts.rest);
  ASSERT_TRUE(out.hamiltonian());
  EXPECT_TRUE(validate_cycle(g, out.cycle));
}

TEST(ValidateCycleTest, Examples) {
  const Graph c4 = Graph::cycle(4);
  EXPECT_TRUE(validate_cycle(c4, std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(validate_cycle(c4, std::vector<Vertex>{2, 1, 0, 3}));
  EXPECT_FALSE(validate_cycle(c4, std::vector<Vertex>{0, 2, 1, 3}));
  EXPECT_FALSE(validate_cycle(c4, std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(validate_cycle(c4, std::vector<Vertex>{0, 1, 2, 2}));
  EXPECT_FALSE(validate_cycle(c4, std::vector<Vertex>{0, 1, 2, 7}));
}

}  // namespace
}  // namespace hamlab
