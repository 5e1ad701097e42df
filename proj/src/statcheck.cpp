#include "hamlab/statcheck.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>

#include "hamlab/rng.hpp"

namespace hamlab {

namespace {

double pairs(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n - (n > 0)) / 2.0; }

CheckStatus from_bounds(const std::vector<Bound>& bounds) {
  return std::all_of(bounds.begin(), bounds.end(), [](const Bound& b) { return b.holds(); })
             ? CheckStatus::pass
             : CheckStatus::fail;
}

std::vector<Vertex> random_subset(std::size_t n, std::size_t size, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Partial Fisher-Yates: the first `size` slots are a uniform sample.
  for (std::size_t i = 0; i < size; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(perm[i], perm[j]);
  }
  perm.resize(size);
  return perm;
}

// Minimum of score(X) over the admissible X in [lo, hi]; exhaustive for small
// n, otherwise `samples` sets with uniformly random size. Returns the number
// of sets examined.
template <class Score>
std::size_t scan_sets(std::size_t n, std::size_t lo, std::size_t hi, std::size_t samples,
                      std::uint64_t seed, bool& exhaustive, double& worst, Score&& score) {
  worst = std::numeric_limits<double>::infinity();
  std::size_t seen = 0;
  if (n <= kExhaustiveExpansionLimit) {
    exhaustive = true;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      const auto k = static_cast<std::size_t>(std::popcount(mask));
      if (k < lo || k > hi) continue;
      VertexSet x(n);
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1U) x.insert(static_cast<Vertex>(v));
      }
      worst = std::min(worst, score(x));
      ++seen;
    }
    return seen;
  }
  exhaustive = false;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t k = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
    const auto members = random_subset(n, k, rng);
    worst = std::min(worst, score(VertexSet(n, members)));
    ++seen;
  }
  return seen;
}

}  // namespace

CheckStatus recompute_status(const CheckReport& report) {
  if (from_bounds(report.bounds) == CheckStatus::fail) return CheckStatus::fail;
  if (!report.applicable || report.bounds.empty()) return CheckStatus::not_applicable;
  return CheckStatus::pass;
}

CheckReport check_degrees(const Graph& g, double p, double eps) {
  CheckReport r;
  r.name = "degrees";
  const double np = static_cast<double>(g.n()) * p;
  const double expected_m = pairs(g.n()) * p;
  r.bounds.push_back({"min_degree", static_cast<double>(g.min_degree()), (1.0 - eps) * np, Bound::Cmp::ge});
  r.bounds.push_back({"max_degree", static_cast<double>(g.max_degree()), (1.0 + eps) * np, Bound::Cmp::le});
  r.bounds.push_back({"edge_deviation", std::abs(static_cast<double>(g.m()) - expected_m),
                      eps * expected_m, Bound::Cmp::le});
  r.samples = g.n();
  r.exhaustive = true;
  r.status = recompute_status(r);
  return r;
}

CheckReport check_density(const Graph& g, double p, std::size_t samples, std::uint64_t seed) {
  CheckReport r;
  r.name = "density";
  r.surrogate = true;
  const std::size_t n = g.n();
  if (n < 2 || samples == 0) {
    r.applicable = false;
    r.note = "needs n >= 2 and samples >= 1";
    return r;
  }
  Rng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t sx = 1 + static_cast<std::size_t>(rng.below(n / 2));
    const std::size_t sy = 1 + static_cast<std::size_t>(rng.below(n - sx));
    const auto members = random_subset(n, sx + sy, rng);
    const VertexSet x(n, std::span(members).first(sx));
    const VertexSet y(n, std::span(members).subspan(sx));
    const double mu = static_cast<double>(sx) * static_cast<double>(sy) * p;
    const double dev = std::abs(static_cast<double>(cross_edges(g, x, y)) - mu);
    // Distance past the allowed slack; positive means this pair failed.
    worst = std::max(worst, dev - (4.0 * std::sqrt(mu) + 4.0));
  }
  r.samples = samples;
  r.bounds.push_back({"max_excess_deviation", worst, 0.0, Bound::Cmp::le});
  r.status = recompute_status(r);
  return r;
}

CheckReport check_small_expansion(const Graph& gprime, double p, double eps,
                                  std::size_t samples, std::uint64_t seed) {
  CheckReport r;
  r.name = "small_expansion";
  r.surrogate = true;
  const std::size_t n = gprime.n();
  if (n < 2 || p <= 0.0) {
    r.applicable = false;
    r.note = "admissible size range is empty";
    return r;
  }
  const double limit = std::pow(std::log(static_cast<double>(n)), -0.25) / p;
  const auto hi = static_cast<std::size_t>(std::min(std::floor(limit), static_cast<double>(n)));
  if (hi < 1) {
    r.applicable = false;
    r.note = "admissible size range is empty";
    return r;
  }
  const double np = static_cast<double>(n) * p;
  double worst = 0.0;
  r.samples = scan_sets(n, 1, hi, samples, seed, r.exhaustive, worst, [&](const VertexSet& x) {
    return static_cast<double>(neighborhood(gprime, x).size()) /
           (static_cast<double>(x.size()) * np);
  });
  r.bounds.push_back({"min_expansion_ratio", worst, 0.5 + eps, Bound::Cmp::ge});
  r.status = recompute_status(r);
  return r;
}

CheckReport check_large_expansion(const Graph& gprime, double eps, std::size_t samples,
                                  std::uint64_t seed) {
  CheckReport r;
  r.name = "large_expansion";
  r.surrogate = true;
  const std::size_t n = gprime.n();
  r.bounds.push_back({"connected", connected(gprime) ? 1.0 : 0.0, 1.0, Bound::Cmp::ge});

  const double dn = static_cast<double>(n);
  const double lo_raw = n >= 2 ? dn / std::sqrt(std::log(dn)) : dn + 1.0;
  const auto lo = static_cast<std::size_t>(std::max(1.0, std::ceil(lo_raw)));
  const auto hi = static_cast<std::size_t>(std::floor(eps * dn / 2.0));
  if (lo <= hi && hi <= n) {
    double worst = 0.0;
    r.samples = scan_sets(n, lo, hi, samples, seed, r.exhaustive, worst, [&](const VertexSet& x) {
      return static_cast<double>(neighborhood(gprime, x).size()) / dn;
    });
    r.bounds.push_back({"min_neighborhood_fraction", worst, 0.5 + eps, Bound::Cmp::ge});
  } else {
    r.applicable = false;
    r.note = "expansion size range is empty; connectivity only";
  }
  r.status = recompute_status(r);
  return r;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

}  // namespace hamlab
