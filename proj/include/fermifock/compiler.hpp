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

#include <array>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "fermifock/circuit.hpp"
#include "fermifock/hamiltonian.hpp"
#include "fermifock/theta.hpp"
#include "fermifock/types.hpp"

namespace fermifock {

/// Hermitian 2x2 generator [[d1, d], [conj(d), d2]] of a one-qubit gate
/// exp(-i H).
struct OneQubitHamiltonian {
  double d1 = 0.0;
  double d2 = 0.0;
  complex_t d{0.0, 0.0};

  Eigen::Matrix2cd matrix() const;
};

/// Hermitian H with exp(-i H) = u on the principal branch: eigenphases lie
/// in (-pi, pi], ties at -pi mapped to +pi. u must be unitary within 1e-10;
/// the re-exponentiation residual is below 1e-12.
OneQubitHamiltonian hamiltonian_log(const Eigen::Matrix2cd& u);

/// Field + tunneling spec acting on the levels of one pair such that the
/// lifted operator and the qubit operator commute with the encoding
/// (lifted * theta == theta * embedded). The within-pair tunneling
/// coefficient absorbs the pair's constant tunneling sign.
HamiltonianSpec lift_one_qubit(const OneQubitHamiltonian& h, std::size_t pair,
                               const ThetaEncoding& enc);

struct DiagonalLift {
  HamiltonianSpec spec;
  double global_phase = 0.0;  // the lifted evolution equals
                              // exp(i global_phase) * target on the subspace
};

/// Field + diagonal-interaction spec over the four levels of two pairs whose
/// unit-time evolution applies exp(-i phases[2*xi_a + xi_b]) on the encoded
/// qubit pair, up to the reported global phase. The underdetermined linear
/// system is resolved by its minimum-norm solution.
DiagonalLift lift_diagonal(const std::array<double, 4>& phases,
                           std::size_t pair_a, std::size_t pair_b,
                           const ThetaEncoding& enc);

/// Frobenius norm of (fock_op * theta - theta * qubit_op): zero exactly when
/// the square commutes on the encoded subspace.
double verify_diagram(const cmatrix_t& qubit_op, const cmatrix_t& fock_op,
                      const ThetaEncoding& enc);

/// The diagonal interaction that runs permanently. Keys are level pairs;
/// the compiler only accepts couplings between upper levels of adjacent
/// logical pairs.
struct FixedInteraction {
  RealPairTable beta;

  static FixedInteraction nearest_neighbor(const ThetaEncoding& enc, double g);
};

/// Controls for one schedule segment: external field and within-pair
/// tunneling only. The diagonal interaction has no entry here by
/// construction; it is fixed in the schedule header.
struct ControlSettings {
  std::vector<double> alpha;  // per level; empty means all zero
  ComplexPairTable gamma;

  bool empty() const;
};

/// duration > 0: evolve under controls + fixed interaction for that time.
/// duration == 0: an idealized instantaneous pulse; the controls are
/// integrated pulse areas applied as exp(-i H_controls), and the fixed
/// interaction contributes nothing.
struct ScheduleSegment {
  double duration = 0.0;
  ControlSettings controls;
};

struct PulseSchedule {
  std::size_t num_levels = 0;
  FixedInteraction fixed;
  std::vector<ScheduleSegment> segments;

  double total_duration() const;
};

class CompileError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Compiles a circuit to field + tunneling pulses over the fixed diagonal
/// interaction. One-qubit gates become instantaneous lifted pulses.
/// Entangling diagonal gates let the fixed coupling accumulate phase for
/// duration (phase deficit)/g, refocusing every idle coupling by a midpoint
/// bit-flip pulse on one of its qubits (undone at the end), then repair the
/// local phases with a final field pulse. Rejects topologies it cannot
/// decouple.
PulseSchedule compile_circuit(const Circuit& circuit,
                              const FixedInteraction& fixed,
                              const ThetaEncoding& enc);

/// Unitary of one segment (controls plus fixed interaction).
cmatrix_t segment_unitary(const ScheduleSegment& segment,
                          const FixedInteraction& fixed,
                          std::size_t num_levels);

/// End-to-end unitary of the schedule, segments applied in order.
cmatrix_t schedule_unitary(const PulseSchedule& schedule);

// Serialization. Schema:
//   {"header": {"levels": J, "fixed_beta": [{"i","j","value"}...]},
//    "segments": [{"duration": t, "alpha": [...], "gamma":
//                  [{"i","j","re","im"}...]}...]}
// Segments carry no diagonal-interaction entries; validate_schedule_json
// enforces the exact key sets and throws on any violation.
nlohmann::json schedule_to_json(const PulseSchedule& schedule);
PulseSchedule schedule_from_json(const nlohmann::json& j);
void validate_schedule_json(const nlohmann::json& j);

}  // namespace fermifock
