#include "hamlab/randgen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamlab/rng.hpp"

namespace hamlab {

namespace {

// Pairs (u, v), u < v, each kept independently with probability q, visited in
// lexicographic order by geometric skips.
std::vector<Edge> sample_pairs(std::size_t n, double q, Rng& rng) {
  std::vector<Edge> out;
  if (n < 2 || q <= 0.0) return out;
  const double log_miss = std::log1p(-q);
  const auto total = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  out.reserve(static_cast<std::size_t>(total * q * 1.1) + 16);

  std::size_t u = 0;
  std::size_t v = 0;  // next candidate is (u, v + 1 + skip)
  for (;;) {
    std::size_t skip = 0;
    if (q < 1.0) {
      const double s = std::floor(std::log(rng.uniform_open_zero()) / log_miss);
      if (s >= total) break;
      skip = static_cast<std::size_t>(s);
    }
    v += 1 + skip;
    while (u < n - 1 && v >= n) {
      ++u;
      v = v - n + u + 1;
    }
    if (u >= n - 1) break;
    out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

Graph sample_gnp(const GnpParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw std::invalid_argument("sample_gnp: p=" + std::to_string(params.p) +
                                " outside [0,1]");
  }
  const std::size_t n = params.n;
  if (params.p == 1.0) return Graph::complete(n);
  Rng rng(params.seed);
  if (params.p <= 0.5) {
    return Graph::from_edges(n, sample_pairs(n, params.p, rng));
  }
  const Graph missing = Graph::from_edges(n, sample_pairs(n, 1.0 - params.p, rng));
  return subtract(Graph::complete(n), missing);
}

SplitResult sprinkle(const Graph& g, double delta, std::uint64_t seed) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("sprinkle: delta=" + std::to_string(delta) +
                                " outside [0,1]");
  }
  Rng rng(seed);
  std::vector<Edge> kept;
  std::vector<Edge> rest;
  for (const Edge& e : g.edges()) {
    (rng.uniform() < delta ? kept : rest).push_back(e);
  }
  return {Graph::from_edges(g.n(), kept), Graph::from_edges(g.n(), rest)};
}

}  // namespace hamlab
