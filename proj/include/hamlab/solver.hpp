#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/rotation.hpp"

namespace hamlab {

struct SolveConfig {
  /// Sprinkle fraction used to build the rotation graph in split mode.
  double delta = 0.3;
  std::size_t max_restarts = 20;
  /// Endpoint cap per closure; 0 means n.
  std::size_t closure_cap = 0;
  std::uint64_t seed = 0;
  /// Members of S_P whose witness paths get their other end rotated when
  /// the first closure finds neither an extension nor a closing edge.
  std::size_t step3_samples = 8;
};

enum class SolveStatus { hamiltonian, failed };

struct SolveStats {
  std::size_t rotations = 0;
  std::size_t extensions = 0;
  std::size_t restarts = 0;
  std::size_t closures = 0;
  double millis = 0.0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::failed;
  std::vector<Vertex> cycle;
  /// Empty on success; "disconnected", "min-degree", "too-small" or
  /// "exhausted" on failure.
  std::string reason;
  SolveStats stats;

  bool hamiltonian() const { return status == SolveStatus::hamiltonian; }
};

/// One step of extension: the smallest-id neighbor outside the path,
/// prepended at the head if the head has one, else appended at the tail.
std::optional<PathSeq> extend(const Graph& g, const PathSeq& p);

/// Greedy walk from `start` to the smallest unvisited neighbor, then
/// extension at both ends until neither end has a neighbor off the path.
PathSeq greedy_path(const Graph& g, Vertex start);

/// Rotation-extension search for a Hamilton cycle of g. A `failed` outcome
/// is not a proof that g is non-Hamiltonian.
SolveOutcome hamilton(const Graph& g, const SolveConfig& cfg = {});

/// As hamilton(), but rotations only use g_rot while extensions and closing
/// edges may use g_rot ∪ g_ext. The cycle is validated against the union.
SolveOutcome hamilton_split(const Graph& g_rot, const Graph& g_ext, const SolveConfig& cfg = {});

/// cycle is a permutation of 0..n-1 whose cyclically consecutive pairs are
/// edges of g.
bool validate_cycle(const Graph& g, std::span<const Vertex> cycle);

const char* to_string(SolveStatus s);

}  // namespace hamlab
