#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamlab/solver.hpp"

namespace hamlab {

enum class AdversaryKind { none, bipartition, random, isolate };
enum class SolveMode { direct, split };

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::none;
  /// isolate only.
  Vertex target = 0;
  /// bipartition only: search for a bisection whose cross degrees fit the
  /// budget instead of cutting {0..n/2-1} from the rest.
  bool optimize_partition = true;
};

/// One Monte Carlo experiment over a list of deletion fractions alpha.
/// Each trial samples G(n, p), deletes H with per-vertex budget
/// floor(alpha n p) and runs the solver on G - H.
struct SweepConfig {
  std::size_t n = 0;
  double p = 0.0;
  std::vector<double> alphas;
  AdversarySpec adversary;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  SolveConfig solver;
  SolveMode mode = SolveMode::direct;
  /// Wall-clock means make output non-reproducible, so they are opt-in.
  bool timing = false;
  /// Also run the degree and large-expansion verifiers per trial.
  bool checks = false;
};

struct TrialRecord {
  std::size_t n = 0;
  double p = 0.0;
  double alpha = 0.0;
  AdversaryKind adversary = AdversaryKind::none;
  std::size_t trial_index = 0;
  std::uint64_t derived_seed = 0;
  SolveStatus status = SolveStatus::failed;
  /// Failure not confirmed as non-Hamiltonian by the exact oracle.
  bool unconfirmed = false;
  std::size_t deleted_edges = 0;
  bool remaining_connected = false;
  std::string checks;
  std::string error;
  double millis = 0.0;
};

struct CellRow {
  std::size_t n = 0;
  double p = 0.0;
  double alpha = 0.0;
  AdversaryKind adversary = AdversaryKind::none;
  SolveMode mode = SolveMode::direct;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t unconfirmed = 0;
  double wilson_lo = 0.0;
  double wilson_hi = 0.0;
  double mean_ms = 0.0;
  std::string error;

  double rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval; z = 1.959964 gives 95%.
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

/// mix(mix(master_seed, bits of alpha), trial_index).
std::uint64_t trial_seed(std::uint64_t master_seed, double alpha, std::size_t trial_index);

/// Worker count from HAMLAB_THREADS, else the hardware concurrency.
std::size_t default_workers();

/// Throws std::invalid_argument for trials == 0, unsorted alphas or p
/// outside [0, 1].
void validate(const SweepConfig& cfg);

TrialRecord run_trial(const SweepConfig& cfg, double alpha, std::size_t trial_index);

/// Runs every (alpha, trial) pair, `workers` at a time (0 = default_workers()),
/// and folds them in (alpha, trial) order. Output does not depend on the
/// worker count.
std::vector<CellRow> run_sweep(const SweepConfig& cfg, std::size_t workers = 0,
                               std::vector<TrialRecord>* records = nullptr);

CellRow run_cell(const SweepConfig& cfg, double alpha, std::size_t workers = 0);

inline constexpr const char* kCsvHeader =
    "n,p,alpha,adversary,mode,trials,successes,unconfirmed,wilson_lo,wilson_hi,mean_ms";

/// mean_ms is written as NA unless `timing`; rows with a cell error carry NA
/// intervals.
void write_csv(std::ostream& out, const std::vector<CellRow>& rows, bool timing);

enum class ThresholdStatus { bracketed, all_succeed, all_fail };

struct ThresholdEstimate {
  ThresholdStatus status = ThresholdStatus::bracketed;
  double estimate = 0.0;
  /// Last alpha with success rate >= 1/2 and first alpha below it.
  CellRow below;
  CellRow above;
  std::size_t evaluations = 0;
};

/// Bisection on alpha in [0, 1] for the point where the success rate drops
/// below 1/2, to additive tolerance tol. cfg.alphas is ignored.
ThresholdEstimate estimate_threshold(const SweepConfig& cfg, double tol, std::size_t workers = 0);

SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepConfig& cfg);

const char* to_string(AdversaryKind k);
const char* to_string(SolveMode m);
const char* to_string(ThresholdStatus s);
AdversaryKind adversary_from_string(const std::string& s);

}  // namespace hamlab
