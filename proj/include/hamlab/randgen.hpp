#pragma once

#include <cstdint>

#include "hamlab/graph.hpp"

namespace hamlab {

struct GnpParams {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Edge-disjoint split of a graph: `kept` holds each edge with probability
/// delta, `rest` holds the others.
struct SplitResult {
  Graph kept;
  Graph rest;
};

/// G(n, p). Skips geometrically over the lexicographic pair order, so the cost
/// is O(n + m); for p > 1/2 the complement is sampled instead.
/// Throws std::invalid_argument for p outside [0, 1].
Graph sample_gnp(const GnpParams& params);

/// Throws std::invalid_argument for delta outside [0, 1].
SplitResult sprinkle(const Graph& g, double delta, std::uint64_t seed);

}  // namespace hamlab
