// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamlab/adversary.hpp"
#include "hamlab/harness.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/randgen.hpp"
#include "hamlab/rng.hpp"
#include "hamlab/rotation.hpp"
#include "hamlab/solver.hpp"
#include "hamlab/statcheck.hpp"
#include "test_support.hpp"

namespace {

using namespace hamlab;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Verdict soundness() {
  const auto t0 = Clock::now();
  Rng rng(0x50D);
  std::size_t found = 0;
  std::size_t invalid = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const std::size_t n = 6 + rng.below(45);
    const double p = 0.2 + 0.1 * static_cast<double>(rng.below(7));
    const Graph g = sample_gnp({n, p, mix(1, i)});
    const double alpha = 0.6 * rng.uniform();
    const auto budget = uniform_budget(n, p, alpha);
    DeletionGraph h{Graph(n), n};
    switch (i % 4) {
      case 0: break;
      case 1: h = random_attack(g, budget, mix(2, i)); break;
      case 2: {
        const auto [a, b] = equal_halves(n);
        h = bipartition_attack(g, a, b, budget);
        break;
      }
      case 3: h = isolation_attack(g, static_cast<Vertex>(rng.below(n)), budget); break;
    }
    const Graph rest = subtract(g, h.h);
    SolveConfig cfg;
    cfg.seed = mix(3, i);
    const auto out = hamilton(rest, cfg);
    if (!out.hamiltonian()) continue;
    ++found;
    if (!validate_cycle(rest, out.cycle)) ++invalid;
  }
  const double secs = seconds_since(t0);
  return {invalid == 0 && secs < 120.0,
          fmt("%zu cycles reported over 1000 instances, %zu invalid, %.1f s", found, invalid, secs)};
}

Verdict oracle_agreement() {
  const auto t0 = Clock::now();
  std::size_t contradictions = 0;
  std::size_t ham = 0;
  std::size_t found = 0;
  for (double p : {0.3, 0.5}) {
    for (std::size_t n = 8; n <= 14; ++n) {
      for (std::uint64_t s = 0; s < 200; ++s) {
        const Graph g = sample_gnp({n, p, mix(mix(10, n), s) ^ std::bit_cast<std::uint64_t>(p)});
        SolveConfig cfg;
        cfg.seed = s;
        cfg.max_restarts = 20;
        const bool truth = exact_hamiltonian(g).hamiltonian;
        const bool got = hamilton(g, cfg).hamiltonian();
        if (got && !truth) ++contradictions;
        ham += truth;
        found += truth && got;
      }
    }
  }
  const double secs = seconds_since(t0);
  const double rate = ham ? static_cast<double>(found) / static_cast<double>(ham) : 0.0;
  return {contradictions == 0 && rate >= 0.90 && secs < 300.0,
          fmt("%zu contradictions; found %zu of %zu Hamiltonian (%.4f); %.1f s", contradictions, found, ham,
              rate, secs)};
}

Verdict rotation_correctness() {
  std::mt19937 gen(0xC0FFEE);
  std::size_t graphs = 0;
  std::size_t mismatches = 0;
  while (graphs < 300) {
    const std::size_t n = 3 + gen() % 6;
    const Graph g = testing::random_small_graph(n, 0.25 + 0.5 * (gen() % 100) / 100.0, gen);
    if (!connected(g)) continue;
    ++graphs;
    const auto perm = testing::random_permutation(n, gen);
    ClosureOptions opts;
    opts.mode = ClosureMode::exhaustive;
    opts.stop_on_extension = false;
    const auto c = endpoint_closure(g, PathSeq(perm), opts);
    const auto got = c.endpoints.sorted();
    if (std::set<Vertex>(got.begin(), got.end()) != testing::heads(testing::all_rotations(testing::pair_set(g), perm))) {
      ++mismatches;
    }
  }

  std::size_t involution_bad = 0;
  std::size_t interval_bad = 0;
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 3 + gen() % 30;
    const auto perm = testing::random_permutation(n, gen);
    const PathSeq p(perm);
    const std::size_t i = 1 + gen() % p.length();
    const PathSeq q = rotate_once(p, i);
    if (rotate_once(q, i) != p || q.tail() != p.tail()) ++involution_bad;
    // The single broken edge is {v_{i-1}, v_i}; both runs on either side stay
    // contiguous, the prefix reversed and the suffix in place.
    for (std::size_t k = 0; k < i; ++k)
      if (q[k] != p[i - 1 - k]) ++interval_bad;
    for (std::size_t k = i; k < p.size(); ++k)
      if (q[k] != p[k]) ++interval_bad;
  }
  return {mismatches == 0 && involution_bad == 0 && interval_bad == 0,
          fmt("%zu/300 closure mismatches; %zu involution and %zu interval violations over 10^4 cases",
              mismatches, involution_bad, interval_bad)};
}

Verdict above_threshold() {
  const std::size_t n = 1000;
  const double p = 3.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
  std::size_t ok = 0;
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = sample_gnp({n, p, mix(20, s)});
    SolveConfig cfg;
    cfg.seed = s;
    const auto t0 = Clock::now();
    const auto out = hamilton(g, cfg);
    worst = std::max(worst, seconds_since(t0));
    ok += out.hamiltonian() && validate_cycle(g, out.cycle);
  }
  return {ok >= 95 && worst < 10.0, fmt("%zu/100 seeds, slowest run %.3f s", ok, worst)};
}

Verdict resilience_curve() {
  const auto t0 = Clock::now();
  SweepConfig cfg;
  cfg.n = 600;
  cfg.p = 0.1;
  cfg.alphas = {0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45};
  cfg.adversary.kind = AdversaryKind::random;
  cfg.trials = 50;
  cfg.master_seed = 30;
  const auto rows = run_sweep(cfg);
  bool monotone = true;
  std::string curve;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    curve += fmt("%s%.2f:%zu", i ? " " : "", rows[i].alpha, rows[i].successes);
    if (i == 0) continue;
    const double a = rows[i - 1].rate();
    const double b = rows[i].rate();
    const double se = std::sqrt((a * (1 - a) + b * (1 - b)) / static_cast<double>(cfg.trials));
    if (b - a > 2.0 * se) monotone = false;
  }
  double at30 = 0.0;
  for (const auto& r : rows)
    if (std::abs(r.alpha - 0.30) < 1e-12) at30 = r.rate();
  const double secs = seconds_since(t0);
  return {monotone && at30 >= 0.90 && secs < 1800.0,
          fmt("successes/50 [%s]; monotone=%s; rate at 0.30 = %.2f; %.1f s", curve.c_str(),
              monotone ? "yes" : "no", at30, secs)};
}

Verdict tightness() {
  const std::size_t n = 500;
  const double p = 0.1;
  const auto budget = uniform_budget(n, p, 0.55);
  std::size_t disconnected = 0;
  std::size_t solver_failed = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = sample_gnp({n, p, mix(40, s)});
    const auto [a, b] = min_excess_bisection(g, budget, s);
    const auto h = bipartition_attack(g, a, b, budget);
    const Graph rest = subtract(g, h.h);
    const auto report = check_large_expansion(rest, 0.1, 20, s);
    disconnected += !report.bounds.front().holds();
    SolveConfig cfg;
    cfg.seed = s;
    solver_failed += !hamilton(rest, cfg).hamiltonian();
  }
  return {disconnected == 20 && solver_failed == 20,
          fmt("G-H disconnected on %zu/20, solver failed on %zu/20", disconnected, solver_failed)};
}

Verdict dirac_threshold() {
  SweepConfig cfg;
  cfg.n = 100;
  cfg.p = 1.0;
  cfg.adversary.kind = AdversaryKind::bipartition;
  cfg.trials = 5;
  cfg.master_seed = 50;
  const auto est = estimate_threshold(cfg, 0.01);
  const bool ok = est.status == ThresholdStatus::bracketed && est.estimate >= 0.45 && est.estimate <= 0.55;
  return {ok, fmt("status %s, estimate %.4f after %zu evaluations", to_string(est.status), est.estimate,
                  est.evaluations)};
}

Verdict split_parity() {
  std::size_t ok = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = sample_gnp({200, 0.15, mix(60, s)});
    const auto parts = sprinkle(g, 0.3, mix(61, s));
    SolveConfig cfg;
    cfg.seed = s;
    const auto out = hamilton_split(parts.kept, parts.rest, cfg);
    ok += out.hamiltonian() && validate_cycle(g, out.cycle);
  }
  std::size_t mismatched = 0;
  Rng rng(62);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t n = 6 + rng.below(95);
    const double p = 0.05 + 0.05 * static_cast<double>(rng.below(10));
    const Graph g = sample_gnp({n, p, mix(63, s)});
    SolveConfig cfg;
    cfg.seed = s;
    if (hamilton_split(g, Graph(n), cfg).status != hamilton(g, cfg).status) ++mismatched;
  }
  return {ok >= 95 && mismatched == 0,
          fmt("split succeeded on %zu/100; %zu/200 status mismatches with an empty reserve", ok, mismatched)};
}

Verdict statistical_verifiers() {
  std::size_t degrees = 0;
  std::size_t density = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = sample_gnp({2000, 0.01, mix(70, s)});
    degrees += check_degrees(g, 0.01, 0.5).passed();
    density += check_density(g, 0.01, 50, mix(71, s)).passed();
  }
  std::vector<Edge> es;
  for (int side = 0; side < 2; ++side)
    for (int u = 0; u < 50; ++u)
      for (int v = u + 1; v < 50; ++v) es.emplace_back(side * 50 + u, side * 50 + v);
  const auto cliques = check_large_expansion(Graph::from_edges(100, es), 0.1, 100, 72);
  const bool cliques_fail = cliques.status == CheckStatus::fail;
  return {degrees >= 99 && density >= 95 && cliques_fail,
          fmt("degrees passed %zu/100 (need 99), density passed %zu/100 (need 95), two K50 %s", degrees,
              density, cliques_fail ? "fail" : "did not fail")};
}

Verdict reproducibility() {
  std::vector<SweepConfig> cfgs(2);
  cfgs[0].n = 200;
  cfgs[0].p = 0.08;
  cfgs[0].alphas = {0.1, 0.3, 0.45};
  cfgs[0].adversary.kind = AdversaryKind::random;
  cfgs[0].trials = 8;
  cfgs[0].master_seed = 80;
  cfgs[1] = cfgs[0];
  cfgs[1].adversary.kind = AdversaryKind::bipartition;
  cfgs[1].mode = SolveMode::split;
  cfgs[1].alphas = {0.4, 0.6};
  std::size_t differing = 0;
  for (const auto& cfg : cfgs) {
    std::string first;
    for (std::size_t workers : {1, 4, 16, 1}) {
      std::ostringstream out;
      write_csv(out, run_sweep(cfg, workers), cfg.timing);
      if (first.empty()) {
        first = out.str();
      } else if (out.str() != first) {
        ++differing;
      }
    }
  }
  return {differing == 0, fmt("%zu of 6 reruns differ from the single-worker CSV", differing)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"soundness", soundness},
      {"oracle-agreement", oracle_agreement},
      {"rotation-correctness", rotation_correctness},
      {"above-threshold", above_threshold},
      {"resilience-curve", resilience_curve},
      {"tightness", tightness},
      {"dirac-threshold", dirac_threshold},
      {"split-parity", split_parity},
      {"statistical-verifiers", statistical_verifiers},
      {"reproducibility", reproducibility},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
