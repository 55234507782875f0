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

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "fermifock/runner.hpp"

namespace {

void add_common_options(CLI::App* cmd, fermifock::RunConfig& config) {
  cmd->add_option("--circuit", config.circuit_path, "circuit file to load")
      ->required();
  cmd->add_option("--coupling", config.coupling,
                  "fixed nearest-neighbor interaction strength g");
  cmd->add_option("--out", config.output_path, "write the report JSON here");
  cmd->add_option("--tol-fidelity", config.tolerances.fidelity,
                  "require fidelity >= 1 - this");
  cmd->add_option("--tol-leakage", config.tolerances.leakage,
                  "maximum leakage out of the encoded subspace");
  cmd->add_option("--tol-residual", config.tolerances.residual,
                  "maximum per-gate diagram residual");
  cmd->add_flag_function(
      "--no-timestamp",
      [&config](std::int64_t) { config.emit_timestamp = false; },
      "omit the timestamp so identical runs emit identical reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Compiles qubit circuits to field + tunneling pulse schedules over a "
      "fixed diagonal interaction and verifies them against a reference "
      "simulation"};
  app.require_subcommand(1);

  fermifock::RunConfig config;
  auto* simulate = app.add_subcommand(
      "simulate", "compile, execute both sides, and compare");
  auto* verify = app.add_subcommand(
      "verify-diagrams", "check each gate's lifted operator individually");
  auto* compile_only =
      app.add_subcommand("compile-only", "emit the pulse schedule");
  add_common_options(simulate, config);
  add_common_options(verify, config);
  add_common_options(compile_only, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (simulate->parsed()) config.mode = fermifock::RunMode::kSimulate;
  if (verify->parsed()) config.mode = fermifock::RunMode::kVerifyDiagrams;
  if (compile_only->parsed()) config.mode = fermifock::RunMode::kCompileOnly;

  try {
    const fermifock::Report report = fermifock::run(config);
    const nlohmann::json j =
        fermifock::report_to_json(report, config.emit_timestamp);
    if (config.output_path.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << fermifock::to_string(report.mode)
                << (report.pass ? ": pass" : ": FAIL");
      if (report.fidelity) {
        std::printf(" (fidelity %.12g, leakage %.3g)", *report.fidelity,
                    *report.leakage);
      }
      std::cout << "\n";
    }
    return report.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
