#pragma once

#include <cstddef>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

inline constexpr std::size_t kOracleDefaultLimit = 24;

struct OracleResult {
  bool hamiltonian = false;
  std::vector<Vertex> cycle;
  /// Reachable (subset, endpoint) states.
  std::size_t states_explored = 0;
};

/// Bytes of the reachability table for n vertices: 2^(n-1) 32-bit endpoint
/// masks, 32 MiB at n = 24.
std::size_t oracle_memory_bytes(std::size_t n);

/// Exact Hamiltonicity by dynamic programming over (subset, endpoint) states
/// of paths anchored at vertex 0. Throws std::invalid_argument when
/// n > limit_n or limit_n > 32.
OracleResult exact_hamiltonian(const Graph& g, std::size_t limit_n = kOracleDefaultLimit);

}  // namespace hamlab
