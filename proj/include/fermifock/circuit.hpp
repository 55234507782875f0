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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fermifock/types.hpp"

namespace fermifock {

enum class GateKind { kPauliX, kPauliZ, kHadamard, kPhase, kRotation, kDiagonal };

/// One gate application. `params` holds, per kind:
///   kPhase:    {theta}            gate = diag(1, e^{i theta})
///   kRotation: {d1, d2, re, im}   gate = exp(-i [[d1, d], [conj d, d2]])
///   kDiagonal: {p00, p01, p10, p11}
///              gate = exp(-i diag(p00, p01, p10, p11)) over the basis
///              |xi_target, xi_partner>
struct Gate {
  GateKind kind = GateKind::kPauliX;
  std::size_t target = 0;
  std::size_t partner = 0;  // second qubit of a diagonal gate
  std::vector<double> params;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  std::size_t qubit_count = 0;
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(message + " at line " + std::to_string(line)),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented circuit language:
///
///   qubits <n>
///   gate x|z|h <target>
///   gate phase <target> <theta>
///   gate rot <target> <d1> <d2> <re_d> <im_d>
///   diag <q1> <q2> <p00> <p01> <p10> <p11>
///
/// '#' starts a comment; tokens are whitespace-separated; angles are radians
/// as decimal literals. Errors carry the offending line number.
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parsing it yields an identical Circuit.
std::string serialize_circuit(const Circuit& circuit);

/// 2x2 unitary of a one-qubit gate. Throws for diagonal gates.
Eigen::Matrix2cd gate_matrix(const Gate& gate);

/// Gate unitary embedded into the full 2^n qubit space. Qubit q maps to
/// bit q of the basis index.
cmatrix_t embed_gate(const Gate& gate, std::size_t qubit_count);

/// Product of all gate unitaries in application order.
cmatrix_t circuit_unitary(const Circuit& circuit);

/// True for diagonal gates that are not a product of local phases, i.e.
/// p00 - p01 - p10 + p11 is not a multiple of 2 pi.
bool is_entangling(const Gate& gate);

}  // namespace fermifock
