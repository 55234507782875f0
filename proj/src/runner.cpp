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

#include "fermifock/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace fermifock {

namespace {

double spectral_norm(const cmatrix_t& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<cmatrix_t>(m).singularValues()(0);
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

}  // namespace

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::kVerifyDiagrams:
      return "verify-diagrams";
    case RunMode::kSimulate:
      return "simulate";
    case RunMode::kCompileOnly:
      return "compile-only";
  }
  throw std::logic_error("unreachable run mode");
}

RunMode run_mode_from_string(const std::string& name) {
  if (name == "verify-diagrams") return RunMode::kVerifyDiagrams;
  if (name == "simulate") return RunMode::kSimulate;
  if (name == "compile-only") return RunMode::kCompileOnly;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

Report run_circuit(const RunConfig& config, const Circuit& circuit) {
  const bool needs_coupling =
      std::any_of(circuit.gates.begin(), circuit.gates.end(), is_entangling);
  if (needs_coupling && config.coupling <= 0.0) {
    throw std::invalid_argument(
        "coupling must be positive when the circuit contains entangling "
        "gates");
  }

  const ThetaEncoding enc = ThetaEncoding::canonical(circuit.qubit_count);
  const FixedInteraction fixed =
      FixedInteraction::nearest_neighbor(enc, config.coupling);
  const PulseSchedule schedule = compile_circuit(circuit, fixed, enc);

  Report report;
  report.mode = config.mode;
  report.coupling = config.coupling;
  report.tolerances = config.tolerances;
  report.encoding = enc.pairs();
  report.segment_count = schedule.segments.size();
  report.total_duration = schedule.total_duration();
  report.schedule = schedule_to_json(schedule);

  if (config.mode == RunMode::kCompileOnly) {
    validate_schedule_json(report.schedule);
    report.pass = true;
    return report;
  }

  // Per-gate diagram residuals: each gate compiled on its own against the
  // same fixed interaction, compared with its embedded qubit unitary.
  std::vector<double> residuals;
  residuals.reserve(circuit.gates.size());
  for (const Gate& gate : circuit.gates) {
    const Circuit single{circuit.qubit_count, {gate}};
    const cmatrix_t gate_fock =
        schedule_unitary(compile_circuit(single, fixed, enc));
    residuals.push_back(
        verify_diagram(embed_gate(gate, circuit.qubit_count), gate_fock, enc));
  }
  const bool residuals_pass =
      std::all_of(residuals.begin(), residuals.end(), [&](double r) {
        return r <= config.tolerances.residual;
      });
  report.residuals = std::move(residuals);

  if (config.mode == RunMode::kVerifyDiagrams) {
    report.pass = residuals_pass;
    return report;
  }

  const cmatrix_t evolution_op = schedule_unitary(schedule);
  const cmatrix_t theta = enc.isometry();
  const cmatrix_t evolved = evolution_op * theta;

  // Fidelity: with M = U^dag Theta^dag E Theta, every input state v obeys
  // |<Theta U v, E Theta v>| = |v^dag M v| >= |tr(M)/d| - ||M - tr(M)/d I||.
  const cmatrix_t m = circuit_unitary(circuit).adjoint() *
                      (theta.adjoint() * evolved);
  const auto dim = static_cast<double>(m.rows());
  const complex_t center = m.trace() / dim;
  const double fidelity =
      std::abs(center) -
      spectral_norm(m - center * cmatrix_t::Identity(m.rows(), m.cols()));
  report.fidelity = std::clamp(fidelity, 0.0, 1.0);

  // Leakage: worst case over encoded inputs of the squared norm outside the
  // computational subspace.
  const cmatrix_t outside = evolved - theta * (theta.adjoint() * evolved);
  const double leak = spectral_norm(outside);
  report.leakage = std::clamp(leak * leak, 0.0, 1.0);

  report.pass = residuals_pass &&
                *report.fidelity >= 1.0 - config.tolerances.fidelity &&
                *report.leakage <= config.tolerances.leakage;
  return report;
}

Report run(const RunConfig& config) {
  std::ifstream in(config.circuit_path);
  if (!in) {
    throw std::runtime_error("cannot open circuit file '" +
                             config.circuit_path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  const Circuit circuit = parse_circuit(text.str());
  Report report = run_circuit(config, circuit);
  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path);
    if (!out) {
      throw std::runtime_error("cannot write report to '" +
                               config.output_path + "'");
    }
    out << report_to_json(report, config.emit_timestamp).dump(2) << "\n";
  }
  return report;
}

nlohmann::json report_to_json(const Report& report, bool with_timestamp) {
  nlohmann::json j;
  j["mode"] = to_string(report.mode);
  j["pass"] = report.pass;
  j["fidelity"] =
      report.fidelity ? nlohmann::json(*report.fidelity) : nlohmann::json();
  j["leakage"] =
      report.leakage ? nlohmann::json(*report.leakage) : nlohmann::json();
  j["residuals"] =
      report.residuals ? nlohmann::json(*report.residuals) : nlohmann::json();
  j["schedule"] = {{"segment_count", report.segment_count},
                   {"total_duration", report.total_duration},
                   {"program", report.schedule}};
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [lower, upper] : report.encoding) {
    pairs.push_back({lower, upper});
  }
  j["encoding"] = pairs;
  j["coupling"] = report.coupling;
  j["tolerances"] = {{"fidelity", report.tolerances.fidelity},
                     {"leakage", report.tolerances.leakage},
                     {"residual", report.tolerances.residual}};
  if (with_timestamp) {
    j["generated_at"] = iso_timestamp();
  }
  return j;
}

void validate_report_json(const nlohmann::json& j) {
  const std::vector<std::string> required = {
      "mode",     "pass",     "fidelity",   "leakage",
      "residuals", "schedule", "encoding",  "coupling",
      "tolerances"};
  for (const auto& key : required) {
    if (!j.contains(key)) {
      throw std::runtime_error("report is missing key '" + key + "'");
    }
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "generated_at") continue;
    if (std::find(required.begin(), required.end(), key) == required.end()) {
      throw std::runtime_error("report has unexpected key '" + key + "'");
    }
  }
  run_mode_from_string(j.at("mode").get<std::string>());
  if (!j.at("pass").is_boolean()) {
    throw std::runtime_error("report pass must be a boolean");
  }
  for (const char* bounded : {"fidelity", "leakage"}) {
    const auto& v = j.at(bounded);
    if (v.is_null()) continue;
    const double value = v.get<double>();
    if (value < 0.0 || value > 1.0) {
      throw std::runtime_error(std::string("report ") + bounded +
                               " out of [0, 1]");
    }
  }
  if (!j.at("residuals").is_null() && !j.at("residuals").is_array()) {
    throw std::runtime_error("report residuals must be null or an array");
  }
  const auto& schedule = j.at("schedule");
  for (const char* key : {"segment_count", "total_duration", "program"}) {
    if (!schedule.contains(key)) {
      throw std::runtime_error("report schedule is missing key '" +
                               std::string(key) + "'");
    }
  }
  validate_schedule_json(schedule.at("program"));
}

}  // namespace fermifock
