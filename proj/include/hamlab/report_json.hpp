#pragma once

#include <json.hpp>

#include "hamlab/harness.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/rotation.hpp"
#include "hamlab/solver.hpp"
#include "hamlab/statcheck.hpp"

namespace hamlab {

/// {"status","cycle","rotations","extensions","restarts","millis"} plus
/// "reason" on failure.
nlohmann::json to_json(const SolveOutcome& out);
nlohmann::json to_json(const RECertificate& cert);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const OracleResult& res);
nlohmann::json to_json(const CellRow& row);
nlohmann::json to_json(const ThresholdEstimate& est);

}  // namespace hamlab
