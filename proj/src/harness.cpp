#include "hamlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hamlab/adversary.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/randgen.hpp"
#include "hamlab/rng.hpp"
#include "hamlab/statcheck.hpp"

namespace hamlab {

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double t = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = (phat + z2 / (2.0 * t)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / t + z2 / (4.0 * t * t)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::uint64_t trial_seed(std::uint64_t master_seed, double alpha, std::size_t trial_index) {
  return mix(mix(master_seed, std::bit_cast<std::uint64_t>(alpha)), trial_index);
}

std::size_t default_workers() {
  if (const char* env = std::getenv("HAMLAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void validate(const SweepConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("sweep: trials must be >= 1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw std::invalid_argument("sweep: p outside [0,1]");
  if (!std::is_sorted(cfg.alphas.begin(), cfg.alphas.end())) {
    throw std::invalid_argument("sweep: alphas must be sorted ascending");
  }
  for (double a : cfg.alphas) {
    if (!(a >= 0.0)) throw std::invalid_argument("sweep: alphas must be non-negative");
  }
  if (cfg.solver.max_restarts < 1) throw std::invalid_argument("sweep: max_restarts must be >= 1");
  if (cfg.mode == SolveMode::split && !(cfg.solver.delta > 0.0 && cfg.solver.delta <= 1.0)) {
    throw std::invalid_argument("sweep: split mode needs 0 < delta <= 1");
  }
}

TrialRecord run_trial(const SweepConfig& cfg, double alpha, std::size_t trial_index) {
  TrialRecord rec;
  rec.n = cfg.n;
  rec.p = cfg.p;
  rec.alpha = alpha;
  rec.adversary = cfg.adversary.kind;
  rec.trial_index = trial_index;
  rec.derived_seed = trial_seed(cfg.master_seed, alpha, trial_index);
  const auto t0 = std::chrono::steady_clock::now();

  try {
    const Graph g = sample_gnp({cfg.n, cfg.p, rec.derived_seed});
    BudgetVector budget = cfg.adversary.kind == AdversaryKind::none
                              ? BudgetVector{std::vector<std::size_t>(cfg.n, 0)}
                              : uniform_budget(cfg.n, cfg.p, alpha);
    const std::uint64_t attack_seed = mix(rec.derived_seed, 1);
    DeletionGraph h{Graph(cfg.n), cfg.n};
    switch (cfg.adversary.kind) {
      case AdversaryKind::none:
        break;
      case AdversaryKind::bipartition: {
        if (cfg.n % 2 != 0) throw std::invalid_argument("bipartition needs even n for equal halves");
        const auto parts = cfg.adversary.optimize_partition
                               ? min_excess_bisection(g, budget, attack_seed)
                               : equal_halves(cfg.n);
        h = bipartition_attack(g, parts.first, parts.second, budget);
        break;
      }
      case AdversaryKind::random:
        h = random_attack(g, budget, attack_seed);
        break;
      case AdversaryKind::isolate:
        h = isolation_attack(g, cfg.adversary.target, budget);
        break;
    }
    if (!check_budget(h, budget)) throw std::logic_error("deletion graph exceeds its budget");
    rec.deleted_edges = h.h.m();

    const Graph remaining = subtract(g, h.h);
    rec.remaining_connected = connected(remaining);
    if (cfg.checks) {
      const auto deg = check_degrees(g, cfg.p, 0.5);
      const auto large = check_large_expansion(remaining, 0.1, 50, mix(rec.derived_seed, 4));
      rec.checks = std::string("degrees:") + to_string(deg.status) +
                   ";large_expansion:" + to_string(large.status);
    }

    SolveConfig solver = cfg.solver;
    solver.seed = mix(rec.derived_seed, 2);
    SolveOutcome outcome;
    if (cfg.mode == SolveMode::split) {
      const auto split = sprinkle(remaining, cfg.solver.delta, mix(rec.derived_seed, 3));
      outcome = hamilton_split(split.kept, split.rest, solver);
    } else {
      outcome = hamilton(remaining, solver);
    }
    rec.status = outcome.status;
    if (!outcome.hamiltonian()) {
      rec.unconfirmed = true;
      if (cfg.n <= kOracleDefaultLimit) {
        rec.unconfirmed = exact_hamiltonian(remaining).hamiltonian;
      }
    }
  } catch (const std::invalid_argument& e) {
    rec.error = e.what();
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  if (workers == 0) workers = default_workers();
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

CellRow fold(const SweepConfig& cfg, double alpha, std::span<const TrialRecord> recs) {
  CellRow row;
  row.n = cfg.n;
  row.p = cfg.p;
  row.alpha = alpha;
  row.adversary = cfg.adversary.kind;
  row.mode = cfg.mode;
  row.trials = recs.size();
  double ms = 0.0;
  for (const TrialRecord& r : recs) {
    if (!r.error.empty() && row.error.empty()) row.error = r.error;
    if (r.status == SolveStatus::hamiltonian) ++row.successes;
    if (r.unconfirmed) ++row.unconfirmed;
    ms += r.millis;
  }
  row.mean_ms = recs.empty() ? 0.0 : ms / static_cast<double>(recs.size());
  const Interval ci = wilson_interval(row.successes, row.trials);
  row.wilson_lo = ci.lo;
  row.wilson_hi = ci.hi;
  return row;
}

}  // namespace

std::vector<CellRow> run_sweep(const SweepConfig& cfg, std::size_t workers,
                               std::vector<TrialRecord>* records) {
  validate(cfg);
  const std::size_t cells = cfg.alphas.size();
  std::vector<TrialRecord> recs(cells * cfg.trials);
  parallel_for(recs.size(), workers, [&](std::size_t i) {
    recs[i] = run_trial(cfg, cfg.alphas[i / cfg.trials], i % cfg.trials);
  });
  std::vector<CellRow> rows;
  rows.reserve(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    rows.push_back(fold(cfg, cfg.alphas[c], std::span(recs).subspan(c * cfg.trials, cfg.trials)));
  }
  if (records) *records = std::move(recs);
  return rows;
}

CellRow run_cell(const SweepConfig& cfg, double alpha, std::size_t workers) {
  SweepConfig one = cfg;
  one.alphas = {alpha};
  return run_sweep(one, workers).front();
}

void write_csv(std::ostream& out, const std::vector<CellRow>& rows, bool timing) {
  out << kCsvHeader << '\n';
  char buf[512];
  for (const CellRow& r : rows) {
    std::string lo = "NA";
    std::string hi = "NA";
    std::string ms = "NA";
    if (r.error.empty()) {
      std::snprintf(buf, sizeof buf, "%.6f", r.wilson_lo);
      lo = buf;
      std::snprintf(buf, sizeof buf, "%.6f", r.wilson_hi);
      hi = buf;
      if (timing) {
        std::snprintf(buf, sizeof buf, "%.3f", r.mean_ms);
        ms = buf;
      }
    }
    std::snprintf(buf, sizeof buf, "%zu,%.6g,%.6g,%s,%s,%zu,%zu,%zu,%s,%s,%s", r.n, r.p, r.alpha,
                  to_string(r.adversary), to_string(r.mode), r.trials, r.successes, r.unconfirmed,
                  lo.c_str(), hi.c_str(), ms.c_str());
    out << buf << '\n';
  }
}

ThresholdEstimate estimate_threshold(const SweepConfig& cfg, double tol, std::size_t workers) {
  if (!(tol > 0.0)) throw std::invalid_argument("threshold: tol must be positive");
  SweepConfig base = cfg;
  base.alphas = {0.0};
  validate(base);

  ThresholdEstimate est;
  auto eval = [&](double alpha) {
    ++est.evaluations;
    CellRow row = run_cell(base, alpha, workers);
    if (!row.error.empty()) throw std::invalid_argument("threshold: cell error: " + row.error);
    return row;
  };
  auto holds = [](const CellRow& r) { return 2 * r.successes >= r.trials; };

  CellRow lo_row = eval(0.0);
  CellRow hi_row = eval(1.0);
  if (!holds(lo_row)) {
    est.status = ThresholdStatus::all_fail;
    est.below = est.above = lo_row;
    return est;
  }
  if (holds(hi_row)) {
    est.status = ThresholdStatus::all_succeed;
    est.below = est.above = hi_row;
    est.estimate = 1.0;
    return est;
  }
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    CellRow row = eval(mid);
    if (holds(row)) {
      lo = mid;
      lo_row = std::move(row);
    } else {
      hi = mid;
      hi_row = std::move(row);
    }
  }
  est.estimate = 0.5 * (lo + hi);
  est.below = std::move(lo_row);
  est.above = std::move(hi_row);
  return est;
}

namespace {

SolveMode mode_from_string(const std::string& s) {
  if (s == "direct") return SolveMode::direct;
  if (s == "split") return SolveMode::split;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

}  // namespace

AdversaryKind adversary_from_string(const std::string& s) {
  if (s == "none") return AdversaryKind::none;
  if (s == "bipartition") return AdversaryKind::bipartition;
  if (s == "random") return AdversaryKind::random;
  if (s == "isolate") return AdversaryKind::isolate;
  throw std::invalid_argument("unknown adversary '" + s + "'");
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig cfg;
  cfg.n = j.at("n").get<std::size_t>();
  if (j.contains("p")) {
    cfg.p = j.at("p").get<double>();
  } else if (j.contains("p_log_factor")) {
    const double n = static_cast<double>(cfg.n);
    cfg.p = j.at("p_log_factor").get<double>() * std::log(n) / n;
  } else {
    throw std::invalid_argument("config needs 'p' or 'p_log_factor'");
  }
  cfg.alphas = j.value("alphas", std::vector<double>{});
  cfg.trials = j.value("trials", std::size_t{1});
  cfg.master_seed = j.value("master_seed", std::uint64_t{0});
  cfg.mode = mode_from_string(j.value("mode", std::string("direct")));
  cfg.timing = j.value("timing", false);
  cfg.checks = j.value("checks", false);
  if (j.contains("adversary")) {
    const auto& a = j.at("adversary");
    cfg.adversary.kind = adversary_from_string(a.value("strategy", std::string("none")));
    cfg.adversary.target = a.value("target", Vertex{0});
    const std::string part = a.value("partition", std::string("optimized"));
    if (part != "optimized" && part != "halves") throw std::invalid_argument("unknown partition '" + part + "'");
    cfg.adversary.optimize_partition = part == "optimized";
  }
  if (j.contains("solver")) {
    const auto& s = j.at("solver");
    cfg.solver.delta = s.value("delta", cfg.solver.delta);
    cfg.solver.max_restarts = s.value("max_restarts", cfg.solver.max_restarts);
    cfg.solver.closure_cap = s.value("closure_cap", cfg.solver.closure_cap);
    cfg.solver.step3_samples = s.value("step3_samples", cfg.solver.step3_samples);
  }
  return cfg;
}

nlohmann::json to_json(const SweepConfig& cfg) {
  return {
      {"n", cfg.n},
      {"p", cfg.p},
      {"alphas", cfg.alphas},
      {"trials", cfg.trials},
      {"master_seed", cfg.master_seed},
      {"mode", to_string(cfg.mode)},
      {"timing", cfg.timing},
      {"checks", cfg.checks},
      {"adversary",
       {{"strategy", to_string(cfg.adversary.kind)},
        {"target", cfg.adversary.target},
        {"partition", cfg.adversary.optimize_partition ? "optimized" : "halves"}}},
      {"solver",
       {{"delta", cfg.solver.delta},
        {"max_restarts", cfg.solver.max_restarts},
        {"closure_cap", cfg.solver.closure_cap},
        {"step3_samples", cfg.solver.step3_samples}}},
  };
}

const char* to_string(AdversaryKind k) {
  switch (k) {
    case AdversaryKind::none: return "none";
    case AdversaryKind::bipartition: return "bipartition";
    case AdversaryKind::random: return "random";
    case AdversaryKind::isolate: return "isolate";
  }
  return "unknown";
}

const char* to_string(SolveMode m) { return m == SolveMode::split ? "split" : "direct"; }

const char* to_string(ThresholdStatus s) {
  switch (s) {
    case ThresholdStatus::bracketed: return "bracketed";
    case ThresholdStatus::all_succeed: return "all-succeed";
    case ThresholdStatus::all_fail: return "all-fail";
  }
  return "unknown";
}

}  // namespace hamlab
