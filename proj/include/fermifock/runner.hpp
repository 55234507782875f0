// Copyright 2026 The fermifock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fermifock/circuit.hpp"
#include "fermifock/compiler.hpp"

namespace fermifock {

enum class RunMode { kVerifyDiagrams, kSimulate, kCompileOnly };

std::string to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& name);

struct Tolerances {
  double fidelity = 1e-6;  // require fidelity >= 1 - fidelity
  double leakage = 1e-8;
  double residual = 1e-9;
};

struct RunConfig {
  RunMode mode = RunMode::kSimulate;
  std::string circuit_path;
  double coupling = 1.0;
  Tolerances tolerances;
  std::string output_path;     // empty: caller prints the report
  bool emit_timestamp = true;  // reports are bit-identical without it
};

/// Outcome of one run. fidelity/leakage are filled in simulate mode,
/// residuals in simulate and verify-diagrams modes.
struct Report {
  RunMode mode = RunMode::kSimulate;
  std::optional<std::vector<double>> residuals;
  std::optional<double> fidelity;  // certified lower bound over all inputs
  std::optional<double> leakage;   // worst case over encoded inputs
  std::size_t segment_count = 0;
  double total_duration = 0.0;
  nlohmann::json schedule;
  std::vector<std::pair<std::size_t, std::size_t>> encoding;
  double coupling = 0.0;
  Tolerances tolerances;
  bool pass = false;
};

/// Compiles (and in simulate mode executes) the circuit against the
/// nearest-neighbor fixed interaction of strength config.coupling.
Report run_circuit(const RunConfig& config, const Circuit& circuit);

/// Reads the circuit file named by the config, then runs it. Writes the
/// report JSON to config.output_path when set.
Report run(const RunConfig& config);

nlohmann::json report_to_json(const Report& report, bool with_timestamp);
void validate_report_json(const nlohmann::json& j);

}  // namespace fermifock
