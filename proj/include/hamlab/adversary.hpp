#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Per-vertex caps on the number of deleted incident edges.
struct BudgetVector {
  std::vector<std::size_t> k;

  std::size_t size() const { return k.size(); }
  std::size_t operator[](Vertex v) const { return k[static_cast<std::size_t>(v)]; }
};

/// The removed edges H, a subgraph of the attacked graph.
struct DeletionGraph {
  Graph h;
  std::size_t source_n = 0;
};

/// k_v = floor(alpha * n * p) for every v. A 1e-9 guard absorbs products
/// like 0.3 * 200 * 0.2 landing just below an integer.
/// Throws std::invalid_argument for negative alpha or p.
BudgetVector uniform_budget(std::size_t n, double p, double alpha);

/// deg_h(v) <= k_v for every v.
bool check_budget(const DeletionGraph& h, const BudgetVector& k);

/// Deletes cross edges of the partition in ascending edge order, skipping
/// any edge whose deletion would exceed a budget. Throws
/// std::invalid_argument unless the parts partition V.
DeletionGraph bipartition_attack(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const BudgetVector& budget);

/// Deletes edges in a seeded uniformly random order while both ends have
/// budget left.
DeletionGraph random_attack(const Graph& g, const BudgetVector& budget, std::uint64_t seed);

/// Deletes edges at `target` in ascending neighbor order while the target
/// and the neighbor both have budget left.
DeletionGraph isolation_attack(const Graph& g, Vertex target, const BudgetVector& budget);

/// {0, ..., n/2 - 1} and the rest.
std::pair<VertexSet, VertexSet> equal_halves(std::size_t n);

/// Balanced bisection found by pair-swap local search that minimizes the
/// total budget overflow sum_v max(0, cross_deg(v) - k_v). Starts from
/// equal_halves(n); each step scores swaps of an overflowing vertex against
/// 64 sampled partners. Stops at zero overflow, after 10n steps without
/// improvement (50n once the best overflow is at most n/20), or after
/// max_iters steps (0 means 200n). With zero overflow the bipartition attack
/// removes every cross edge.
std::pair<VertexSet, VertexSet> min_excess_bisection(const Graph& g, const BudgetVector& budget,
                                                     std::uint64_t seed,
                                                     std::size_t max_iters = 0);

/// sum_v max(0, |N(v) ∩ other side| - k_v).
std::size_t bisection_excess(const Graph& g, const VertexSet& a, const BudgetVector& budget);

}  // namespace hamlab
