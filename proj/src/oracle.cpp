#include "hamlab/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamlab {

std::size_t oracle_memory_bytes(std::size_t n) {
  return n == 0 ? 0 : (std::size_t{1} << (n - 1)) * sizeof(std::uint32_t);
}

OracleResult exact_hamiltonian(const Graph& g, std::size_t limit_n) {
  const std::size_t n = g.n();
  if (limit_n > 32 || n > limit_n) {
    throw std::invalid_argument("exact_hamiltonian: n=" + std::to_string(n) +
                                " exceeds limit " + std::to_string(limit_n) +
                                "; use the rotation-extension solver instead");
  }
  OracleResult res;
  if (n < 3 || g.min_degree() < 2 || !connected(g)) return res;

  // Vertex v >= 1 is bit v-1 of a subset mask; vertex 0 is the implicit
  // start of every path.
  const std::size_t k = n - 1;
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (w != 0) adj[v] |= std::uint32_t{1} << (w - 1);
    }
  }
  std::uint32_t zero_nbrs = 0;
  for (Vertex w : g.neighbors(0)) zero_nbrs |= std::uint32_t{1} << (w - 1);

  // reach[S] = set of v in S such that some path 0 -> ... -> v covers
  // exactly {0} ∪ S.
  const std::size_t masks = std::size_t{1} << k;
  std::vector<std::uint32_t> reach(masks, 0);
  for (std::size_t v = 0; v < k; ++v) {
    if (zero_nbrs >> v & 1U) reach[std::size_t{1} << v] = std::uint32_t{1} << v;
  }
  for (std::size_t s = 1; s < masks; ++s) {
    std::uint32_t ends = reach[s];
    if (ends == 0) continue;
    res.states_explored += static_cast<std::size_t>(std::popcount(ends));
    const auto set = static_cast<std::uint32_t>(s);
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t next = adj[static_cast<std::size_t>(v) + 1] & ~set;
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        reach[s | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }

  const std::size_t full = masks - 1;
  const std::uint32_t closers = reach[full] & zero_nbrs;
  if (closers == 0) return res;

  res.hamiltonian = true;
  std::vector<Vertex> rev;
  std::size_t s = full;
  int v = std::countr_zero(closers);
  for (;;) {
    rev.push_back(static_cast<Vertex>(v + 1));
    const std::size_t rest = s & ~(std::size_t{1} << v);
    if (rest == 0) break;
    const std::uint32_t prev = reach[rest] & adj[static_cast<std::size_t>(v) + 1];
    v = std::countr_zero(prev);
    s = rest;
  }
  res.cycle.push_back(0);
  res.cycle.insert(res.cycle.end(), rev.rbegin(), rev.rend());
  return res;
}

}  // namespace hamlab
