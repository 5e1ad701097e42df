#include "hamlab/report_json.hpp"

namespace hamlab {

using nlohmann::json;

json to_json(const SolveOutcome& out) {
  json j = {
      {"status", to_string(out.status)},
      {"cycle", out.hamiltonian() ? json(out.cycle) : json(nullptr)},
      {"rotations", out.stats.rotations},
      {"extensions", out.stats.extensions},
      {"restarts", out.stats.restarts},
      {"millis", out.stats.millis},
  };
  if (!out.reason.empty()) j["reason"] = out.reason;
  return j;
}

json to_json(const RECertificate& cert) {
  json t = json::array();
  for (const auto& [v, set] : cert.t_map) {
    t.push_back({{"v", v}, {"size", set.size()}, {"t_v", set.sorted()}});
  }
  return {
      {"status", to_string(cert.status)},
      {"delta", cert.delta},
      {"required", cert.required},
      {"s_p_size", cert.s_p.size()},
      {"s_p", cert.s_p.sorted()},
      {"t", t},
  };
}

json to_json(const CheckReport& report) {
  json bounds = json::array();
  for (const Bound& b : report.bounds) {
    bounds.push_back({{"name", b.name},
                      {"observed", b.observed},
                      {"threshold", b.threshold},
                      {"cmp", b.cmp == Bound::Cmp::ge ? ">=" : "<="},
                      {"holds", b.holds()}});
  }
  json j = {
      {"name", report.name},
      {"status", to_string(report.status)},
      {"passed", report.passed()},
      {"bounds", bounds},
      {"samples", report.samples},
      {"exhaustive", report.exhaustive},
      {"surrogate", report.surrogate},
  };
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

json to_json(const OracleResult& res) {
  return {
      {"hamiltonian", res.hamiltonian},
      {"cycle", res.hamiltonian ? json(res.cycle) : json(nullptr)},
      {"states_explored", res.states_explored},
  };
}

json to_json(const CellRow& row) {
  json j = {
      {"n", row.n},
      {"p", row.p},
      {"alpha", row.alpha},
      {"adversary", to_string(row.adversary)},
      {"mode", to_string(row.mode)},
      {"trials", row.trials},
      {"successes", row.successes},
      {"unconfirmed", row.unconfirmed},
      {"wilson_lo", row.wilson_lo},
      {"wilson_hi", row.wilson_hi},
  };
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

json to_json(const ThresholdEstimate& est) {
  return {
      {"status", to_string(est.status)},
      {"estimate", est.status == ThresholdStatus::bracketed ? json(est.estimate) : json(nullptr)},
      {"below", to_json(est.below)},
      {"above", to_json(est.above)},
      {"evaluations", est.evaluations},
  };
}

}  // namespace hamlab
