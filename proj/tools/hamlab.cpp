// hamlab: command-line front end for the Hamiltonicity and resilience lab.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamlab/adversary.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/graph_io.hpp"
#include "hamlab/harness.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/randgen.hpp"
#include "hamlab/report_json.hpp"
#include "hamlab/rng.hpp"
#include "hamlab/rotation.hpp"
#include "hamlab/solver.hpp"
#include "hamlab/statcheck.hpp"

using namespace hamlab;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

double edge_density(const Graph& g) {
  const double pairs = static_cast<double>(g.n()) * static_cast<double>(g.n() - 1) / 2.0;
  return pairs > 0 ? static_cast<double>(g.m()) / pairs : 0.0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotation-extension Hamiltonicity solver and local-resilience lab"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample G(n,p) into an edge-list file");
  std::size_t gen_n = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability")->required();
  gen->add_option("--seed", gen_seed, "64-bit seed");
  gen->add_option("--out", gen_out, "output edge-list file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Search for a Hamilton cycle");
  std::string solve_graph;
  bool solve_split = false;
  bool solve_json = false;
  SolveConfig solve_cfg;
  solve->add_option("--graph", solve_graph, "edge-list file")->required();
  solve->add_flag("--split", solve_split, "sprinkle into rotation and extension graphs");
  solve->add_option("--delta", solve_cfg.delta, "rotation-graph fraction in split mode");
  solve->add_option("--seed", solve_cfg.seed, "64-bit seed");
  solve->add_option("--max-restarts", solve_cfg.max_restarts);
  solve->add_option("--closure-cap", solve_cfg.closure_cap, "0 = n");
  solve->add_flag("--json", solve_json, "print the outcome as JSON");

  // verify-re
  auto* vre = app.add_subcommand("verify-re", "Certify the rotation property for one path");
  std::string vre_graph;
  std::string vre_path;
  double vre_delta = 0.0;
  std::size_t vre_sample = 8;
  vre->add_option("--graph", vre_graph)->required();
  vre->add_option("--delta", vre_delta)->required();
  vre->add_option("--path", vre_path, "vertex sequence file; default is a greedy maximal path");
  vre->add_option("--sample", vre_sample, "members of S_P whose T_v is computed");

  // attack
  auto* attack = app.add_subcommand("attack", "Delete a budgeted subgraph H");
  std::string atk_graph;
  std::string atk_strategy;
  double atk_alpha = 0.0;
  std::optional<double> atk_p;
  std::uint64_t atk_seed = 0;
  Vertex atk_target = 0;
  std::string atk_out;
  std::string atk_remaining;
  std::string atk_partition = "optimized";
  attack->add_option("--graph", atk_graph)->required();
  attack->add_option("--strategy", atk_strategy)
      ->required()
      ->check(CLI::IsMember({"bipartition", "random", "isolate"}));
  attack->add_option("--alpha", atk_alpha, "budget floor(alpha n p) per vertex")->required();
  attack->add_option("--p", atk_p, "edge probability; default is the graph's density");
  attack->add_option("--seed", atk_seed);
  attack->add_option("--target", atk_target, "isolate: vertex to attack");
  attack->add_option("--partition", atk_partition)->check(CLI::IsMember({"optimized", "halves"}));
  attack->add_option("--out", atk_out, "edge list of H")->required();
  attack->add_option("--emit-remaining", atk_remaining, "edge list of G - H");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the pseudorandomness verifiers");
  std::string ver_graph;
  std::string ver_removed;
  double ver_p = 0.0;
  double ver_eps = 0.0;
  std::size_t ver_samples = 200;
  std::uint64_t ver_seed = 0;
  bool ver_json = false;
  verify->add_option("--graph", ver_graph)->required();
  verify->add_option("--p", ver_p)->required();
  verify->add_option("--eps", ver_eps)->required();
  verify->add_option("--removed", ver_removed, "edge list of H; expansion runs on G - H");
  verify->add_option("--samples", ver_samples);
  verify->add_option("--seed", ver_seed);
  verify->add_flag("--json", ver_json);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact Hamiltonicity for n <= 24");
  std::string orc_graph;
  bool orc_json = false;
  std::size_t orc_limit = kOracleDefaultLimit;
  oracle->add_option("--graph", orc_graph)->required();
  oracle->add_option("--limit", orc_limit);
  oracle->add_flag("--json", orc_json);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo success rates per alpha");
  std::string sw_config;
  std::string sw_out;
  std::size_t sw_threads = 0;
  sweep->add_option("--config", sw_config)->required();
  sweep->add_option("--out", sw_out, "CSV output")->required();
  sweep->add_option("--threads", sw_threads, "0 = HAMLAB_THREADS or all cores");

  // threshold
  auto* thr = app.add_subcommand("threshold", "Bisection for the alpha where success drops below 1/2");
  std::string thr_config;
  double thr_tol = 0.0;
  std::size_t thr_threads = 0;
  thr->add_option("--config", thr_config)->required();
  thr->add_option("--tol", thr_tol)->required();
  thr->add_option("--threads", thr_threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      write_edge_list_file(gen_out, sample_gnp({gen_n, gen_p, gen_seed}));
    } else if (*solve) {
      const Graph g = read_edge_list_file(solve_graph);
      SolveOutcome out;
      if (solve_split) {
        const auto parts = sprinkle(g, solve_cfg.delta, mix(solve_cfg.seed, 3));
        out = hamilton_split(parts.kept, parts.rest, solve_cfg);
      } else {
        out = hamilton(g, solve_cfg);
      }
      if (solve_json) {
        std::cout << to_json(out).dump() << '\n';
      } else {
        std::cout << to_string(out.status);
        if (!out.reason.empty()) std::cout << " (" << out.reason << ')';
        std::cout << "\nrotations " << out.stats.rotations << "  extensions " << out.stats.extensions
                  << "  restarts " << out.stats.restarts << "  " << out.stats.millis << " ms\n";
      }
      return out.hamiltonian() ? 0 : 1;
    } else if (*vre) {
      const Graph g = read_edge_list_file(vre_graph);
      const PathSeq p = vre_path.empty() ? greedy_path(g, 0)
                                         : PathSeq(read_vertex_sequence_file(vre_path));
      std::cout << to_json(re_certificate(g, p, vre_delta, vre_sample)).dump() << '\n';
    } else if (*attack) {
      const Graph g = read_edge_list_file(atk_graph);
      const double p = atk_p.value_or(edge_density(g));
      const BudgetVector budget = uniform_budget(g.n(), p, atk_alpha);
      DeletionGraph h;
      if (atk_strategy == "bipartition") {
        const auto parts = atk_partition == "optimized" ? min_excess_bisection(g, budget, atk_seed)
                                                        : equal_halves(g.n());
        h = bipartition_attack(g, parts.first, parts.second, budget);
      } else if (atk_strategy == "random") {
        h = random_attack(g, budget, atk_seed);
      } else {
        h = isolation_attack(g, atk_target, budget);
      }
      write_edge_list_file(atk_out, h.h);
      if (!atk_remaining.empty()) write_edge_list_file(atk_remaining, subtract(g, h.h));
      std::cerr << "deleted " << h.h.m() << " edges, budget " << (budget.size() ? budget.k[0] : 0)
                << " per vertex\n";
    } else if (*verify) {
      const Graph g = read_edge_list_file(ver_graph);
      const Graph gprime = ver_removed.empty() ? g : subtract(g, read_edge_list_file(ver_removed));
      const std::vector<CheckReport> reports = {
          check_degrees(g, ver_p, ver_eps),
          check_density(g, ver_p, 50, mix(ver_seed, 1)),
          check_small_expansion(gprime, ver_p, ver_eps, ver_samples, mix(ver_seed, 2)),
          check_large_expansion(gprime, ver_eps, ver_samples, mix(ver_seed, 3)),
      };
      bool ok = true;
      json arr = json::array();
      for (const auto& r : reports) {
        ok = ok && r.status != CheckStatus::fail;
        arr.push_back(to_json(r));
      }
      if (ver_json) {
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& r : reports) std::cout << r.name << ": " << to_string(r.status) << '\n';
      }
      return ok ? 0 : 1;
    } else if (*oracle) {
      const Graph g = read_edge_list_file(orc_graph);
      const OracleResult res = exact_hamiltonian(g, orc_limit);
      if (orc_json) {
        std::cout << to_json(res).dump() << '\n';
      } else {
        std::cout << (res.hamiltonian ? "hamiltonian" : "not hamiltonian") << '\n';
      }
      return res.hamiltonian ? 0 : 1;
    } else if (*sweep) {
      const SweepConfig cfg = sweep_config_from_json(load_json(sw_config));
      const auto rows = run_sweep(cfg, sw_threads);
      std::ofstream out(sw_out);
      if (!out) throw std::runtime_error("cannot write " + sw_out);
      write_csv(out, rows, cfg.timing);
      int errors = 0;
      for (const auto& r : rows) {
        if (!r.error.empty()) {
          std::cerr << "cell alpha=" << r.alpha << ": " << r.error << '\n';
          ++errors;
        }
      }
      return errors ? 2 : 0;
    } else if (*thr) {
      const SweepConfig cfg = sweep_config_from_json(load_json(thr_config));
      json j = to_json(estimate_threshold(cfg, thr_tol, thr_threads));
      const double n = static_cast<double>(cfg.n);
      j["tol"] = thr_tol;
      j["p"] = cfg.p;
      j["p_over_log_n_over_n"] = cfg.n > 1 ? cfg.p / (std::log(n) / n) : 0.0;
      std::cout << j.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
