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

#include "fermifock/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fermifock/evolution.hpp"

namespace fermifock {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr std::size_t kMaxQubitsInCircuit = 8;

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected a qubit index, got '" + token + "'", line);
  }
  if (pos != token.size()) {
    throw ParseError("expected a qubit index, got '" + token + "'", line);
  }
  return static_cast<std::size_t>(value);
}

double parse_number(const std::string& token, std::size_t line) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + token + "'", line);
  }
  if (pos != token.size() || !std::isfinite(value)) {
    throw ParseError("expected a number, got '" + token + "'", line);
  }
  return value;
}

void check_target(std::size_t target, std::size_t qubit_count,
                  std::size_t line) {
  if (target >= qubit_count) {
    throw ParseError("qubit " + std::to_string(target) +
                         " out of range for " + std::to_string(qubit_count) +
                         " qubits",
                     line);
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool header_seen = false;
  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!header_seen) {
      if (tokens[0] != "qubits") {
        throw ParseError("expected 'qubits <n>' header", line_no);
      }
      if (tokens.size() != 2) {
        throw ParseError("'qubits' takes exactly one argument", line_no);
      }
      const std::size_t n = parse_index(tokens[1], line_no);
      if (n == 0 || n > kMaxQubitsInCircuit) {
        throw ParseError("qubit count must be in [1, " +
                             std::to_string(kMaxQubitsInCircuit) + "]",
                         line_no);
      }
      circuit.qubit_count = n;
      header_seen = true;
      continue;
    }
    if (tokens[0] == "qubits") {
      throw ParseError("duplicate 'qubits' header", line_no);
    }
    if (tokens[0] == "gate") {
      if (tokens.size() < 3) {
        throw ParseError("'gate' needs a name and a target", line_no);
      }
      const std::string& name = tokens[1];
      Gate gate;
      gate.target = parse_index(tokens[2], line_no);
      check_target(gate.target, circuit.qubit_count, line_no);
      gate.partner = gate.target;
      std::size_t want_params = 0;
      if (name == "x") {
        gate.kind = GateKind::kPauliX;
      } else if (name == "z") {
        gate.kind = GateKind::kPauliZ;
      } else if (name == "h") {
        gate.kind = GateKind::kHadamard;
      } else if (name == "phase") {
        gate.kind = GateKind::kPhase;
        want_params = 1;
      } else if (name == "rot") {
        gate.kind = GateKind::kRotation;
        want_params = 4;
      } else {
        throw ParseError("unknown gate '" + name + "'", line_no);
      }
      if (tokens.size() != 3 + want_params) {
        throw ParseError("gate '" + name + "' takes " +
                             std::to_string(want_params) + " parameter(s)",
                         line_no);
      }
      for (std::size_t k = 0; k < want_params; ++k) {
        gate.params.push_back(parse_number(tokens[3 + k], line_no));
      }
      circuit.gates.push_back(std::move(gate));
      continue;
    }
    if (tokens[0] == "diag") {
      if (tokens.size() != 7) {
        throw ParseError("'diag' takes two qubits and four phases", line_no);
      }
      Gate gate;
      gate.kind = GateKind::kDiagonal;
      gate.target = parse_index(tokens[1], line_no);
      gate.partner = parse_index(tokens[2], line_no);
      check_target(gate.target, circuit.qubit_count, line_no);
      check_target(gate.partner, circuit.qubit_count, line_no);
      if (gate.target == gate.partner) {
        throw ParseError("'diag' needs two distinct qubits", line_no);
      }
      for (std::size_t k = 0; k < 4; ++k) {
        gate.params.push_back(parse_number(tokens[3 + k], line_no));
      }
      circuit.gates.push_back(std::move(gate));
      continue;
    }
    throw ParseError("unknown directive '" + tokens[0] + "'", line_no);
  }
  if (!header_seen) {
    throw ParseError("missing 'qubits <n>' header", line_no == 0 ? 1 : line_no);
  }
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.qubit_count) + "\n";
  for (const Gate& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::kPauliX:
        out += "gate x " + std::to_string(gate.target) + "\n";
        break;
      case GateKind::kPauliZ:
        out += "gate z " + std::to_string(gate.target) + "\n";
        break;
      case GateKind::kHadamard:
        out += "gate h " + std::to_string(gate.target) + "\n";
        break;
      case GateKind::kPhase:
        out += "gate phase " + std::to_string(gate.target) + " " +
               format_double(gate.params[0]) + "\n";
        break;
      case GateKind::kRotation: {
        out += "gate rot " + std::to_string(gate.target);
        for (double p : gate.params) out += " " + format_double(p);
        out += "\n";
        break;
      }
      case GateKind::kDiagonal: {
        out += "diag " + std::to_string(gate.target) + " " +
               std::to_string(gate.partner);
        for (double p : gate.params) out += " " + format_double(p);
        out += "\n";
        break;
      }
    }
  }
  return out;
}

Eigen::Matrix2cd gate_matrix(const Gate& gate) {
  Eigen::Matrix2cd m;
  switch (gate.kind) {
    case GateKind::kPauliX:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::kPauliZ:
      m << 1, 0, 0, -1;
      return m;
    case GateKind::kHadamard:
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case GateKind::kPhase:
      m << 1, 0, 0, std::polar(1.0, gate.params[0]);
      return m;
    case GateKind::kRotation: {
      cmatrix_t h(2, 2);
      const complex_t d{gate.params[2], gate.params[3]};
      h << gate.params[0], d, std::conj(d), gate.params[1];
      return unitary(h, 1.0);
    }
    case GateKind::kDiagonal:
      throw std::invalid_argument("diagonal gates have no 2x2 matrix");
  }
  throw std::logic_error("unreachable gate kind");
}

cmatrix_t embed_gate(const Gate& gate, std::size_t qubit_count) {
  if (gate.target >= qubit_count ||
      (gate.kind == GateKind::kDiagonal && gate.partner >= qubit_count)) {
    throw std::out_of_range("gate target out of range");
  }
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (gate.kind == GateKind::kDiagonal) {
    cmatrix_t m = cmatrix_t::Zero(dim, dim);
    for (std::size_t q = 0; q < dim; ++q) {
      const std::size_t xi_a = (q >> gate.target) & 1u;
      const std::size_t xi_b = (q >> gate.partner) & 1u;
      m(q, q) = std::polar(1.0, -gate.params[2 * xi_a + xi_b]);
    }
    return m;
  }
  const Eigen::Matrix2cd u = gate_matrix(gate);
  cmatrix_t m = cmatrix_t::Zero(dim, dim);
  const std::size_t bit = std::size_t{1} << gate.target;
  for (std::size_t q = 0; q < dim; ++q) {
    const std::size_t xi = (q >> gate.target) & 1u;
    m(q & ~bit, q) += u(0, xi);
    m(q | bit, q) += u(1, xi);
  }
  return m;
}

cmatrix_t circuit_unitary(const Circuit& circuit) {
  const std::size_t dim = std::size_t{1} << circuit.qubit_count;
  cmatrix_t u = cmatrix_t::Identity(dim, dim);
  for (const Gate& gate : circuit.gates) {
    u = embed_gate(gate, circuit.qubit_count) * u;
  }
  return u;
}

bool is_entangling(const Gate& gate) {
  if (gate.kind != GateKind::kDiagonal) return false;
  const double w = wrap_two_pi(gate.params[0] - gate.params[1] -
                               gate.params[2] + gate.params[3]);
  return std::min(w, kTwoPi - w) > 1e-12;
}

}  // namespace fermifock
