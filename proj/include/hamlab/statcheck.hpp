#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

enum class CheckStatus { pass, fail, not_applicable };

/// One comparison `observed (>= or <=) threshold`.
struct Bound {
  enum class Cmp { ge, le };
  std::string name;
  double observed = 0.0;
  double threshold = 0.0;
  Cmp cmp = Cmp::ge;

  bool holds() const { return cmp == Cmp::ge ? observed >= threshold : observed <= threshold; }
};

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<Bound> bounds;
  std::size_t samples = 0;
  bool exhaustive = false;
  /// Thresholds are finite-n stand-ins for asymptotic o(.) / Omega(.) terms.
  bool surrogate = false;
  /// False when the admissible range of the check is empty.
  bool applicable = true;
  std::string note;

  bool passed() const { return status == CheckStatus::pass; }
};

/// Status recomputed from the bounds and the applicability flag alone.
CheckStatus recompute_status(const CheckReport& report);

/// Every degree within [(1-eps)np, (1+eps)np] and |m - C(n,2)p| <= eps C(n,2)p.
CheckReport check_degrees(const Graph& g, double p, double eps);

/// Random disjoint (X, Y); each |e(X,Y) - |X||Y|p| must stay within
/// 4 sqrt(|X||Y|p) + 4.
CheckReport check_density(const Graph& g, double p, std::size_t samples, std::uint64_t seed);

/// Sets with 1 <= |X| <= (log n)^{-1/4} / p must have
/// |N(X)| >= (1/2 + eps)|X|np. Not applicable when that range is empty.
/// Graphs with n <= 20 are checked over every admissible X.
CheckReport check_small_expansion(const Graph& gprime, double p, double eps,
                                  std::size_t samples, std::uint64_t seed);

/// Sets with n (log n)^{-1/2} <= |X| <= eps n / 2 must have
/// |N(X)| >= (1/2 + eps) n, and gprime must be connected. The expansion
/// clause is not applicable when its range is empty; a disconnected graph
/// fails regardless.
CheckReport check_large_expansion(const Graph& gprime, double eps, std::size_t samples,
                                  std::uint64_t seed);

/// Largest n for which the expansion checks enumerate every X.
inline constexpr std::size_t kExhaustiveExpansionLimit = 20;

const char* to_string(CheckStatus s);

}  // namespace hamlab
