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

#include "fermifock/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "fermifock/evolution.hpp"

namespace fermifock {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kUnitaryTol = 1e-10;
constexpr double kCoeffDropTol = 1e-12;

double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

// Phase of a unit-modulus eigenvalue on the principal branch: exp(-i theta)
// equals lambda with theta in (-pi, pi], the -pi tie mapped to +pi.
double principal_phase(complex_t lambda) {
  double theta = -std::arg(lambda);
  if (theta <= -M_PI) theta += kTwoPi;
  return theta;
}

// Generator of a bit flip: exp(-i H) is exactly the Pauli X matrix.
OneQubitHamiltonian bit_flip_generator() {
  return {M_PI / 2.0, M_PI / 2.0, complex_t{-M_PI / 2.0, 0.0}};
}

ControlSettings controls_from_spec(const HamiltonianSpec& spec,
                                   std::size_t num_levels) {
  ControlSettings controls;
  if (!spec.alpha.empty()) {
    controls.alpha = spec.alpha;
    controls.alpha.resize(num_levels, 0.0);
  }
  controls.gamma = spec.gamma;
  return controls;
}

}  // namespace

Eigen::Matrix2cd OneQubitHamiltonian::matrix() const {
  Eigen::Matrix2cd m;
  m << d1, d, std::conj(d), d2;
  return m;
}

OneQubitHamiltonian hamiltonian_log(const Eigen::Matrix2cd& u) {
  if (unitarity_residual(u) > kUnitaryTol) {
    throw std::invalid_argument("hamiltonian_log needs a unitary input");
  }
  const complex_t tr = u.trace();
  const complex_t det = u.determinant();
  const complex_t disc = std::sqrt(tr * tr - 4.0 * det);
  const complex_t lambda0 = (tr + disc) / 2.0;
  const complex_t lambda1 = (tr - disc) / 2.0;

  Eigen::Matrix2cd h;
  if (std::abs(lambda0 - lambda1) < 1e-14) {
    // Scalar multiple of the identity to working precision.
    h = principal_phase(lambda0) * Eigen::Matrix2cd::Identity();
  } else {
    // Columns of (u - lambda1 I) span the lambda0 eigenspace; for a normal
    // matrix the orthogonal complement is the lambda1 eigenspace.
    const Eigen::Matrix2cd shifted = u - lambda1 * Eigen::Matrix2cd::Identity();
    Eigen::Vector2cd v0 = (shifted.col(0).norm() >= shifted.col(1).norm())
                              ? shifted.col(0)
                              : shifted.col(1);
    v0.normalize();
    const Eigen::Vector2cd v1{-std::conj(v0(1)), std::conj(v0(0))};
    h = principal_phase(lambda0) * v0 * v0.adjoint() +
        principal_phase(lambda1) * v1 * v1.adjoint();
  }
  return {h(0, 0).real(), h(1, 1).real(), h(0, 1)};
}

HamiltonianSpec lift_one_qubit(const OneQubitHamiltonian& h, std::size_t pair,
                               const ThetaEncoding& enc) {
  HamiltonianSpec spec;
  spec.num_levels = enc.num_levels();
  const std::size_t lower = enc.lower_level(pair);
  const std::size_t upper = enc.upper_level(pair);
  if (h.d1 != 0.0) spec.add_alpha(lower, h.d1);
  if (h.d2 != 0.0) spec.add_alpha(upper, h.d2);
  if (h.d != complex_t{0.0, 0.0}) {
    const double sign = static_cast<double>(enc.tunneling_sign(pair));
    spec.add_gamma(lower, upper, sign * h.d);
  }
  return spec;
}

DiagonalLift lift_diagonal(const std::array<double, 4>& phases,
                           std::size_t pair_a, std::size_t pair_b,
                           const ThetaEncoding& enc) {
  if (pair_a == pair_b) {
    throw std::invalid_argument("diagonal lift needs two distinct pairs");
  }
  const std::size_t levels[4] = {
      enc.lower_level(pair_a), enc.upper_level(pair_a),
      enc.lower_level(pair_b), enc.upper_level(pair_b)};

  // Unknowns: alpha on the four levels, beta on the four cross-pair level
  // pairs (within-pair products vanish on the subspace), and the global
  // phase. Four equations, one per (xi_a, xi_b).
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 9);
  Eigen::VectorXd rhs(4);
  for (std::size_t xi_a = 0; xi_a < 2; ++xi_a) {
    for (std::size_t xi_b = 0; xi_b < 2; ++xi_b) {
      const std::size_t row = 2 * xi_a + xi_b;
      a(row, xi_a == 0 ? 0 : 1) = 1.0;       // alpha on pair_a member
      a(row, xi_b == 0 ? 2 : 3) = 1.0;       // alpha on pair_b member
      a(row, 4 + 2 * xi_a + xi_b) = 1.0;     // beta between the two members
      a(row, 8) = 1.0;                       // global phase
      rhs(row) = phases[row];
    }
  }
  const Eigen::VectorXd x =
      a.completeOrthogonalDecomposition().solve(rhs);

  DiagonalLift lift;
  lift.spec.num_levels = enc.num_levels();
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(x(k)) > kCoeffDropTol) {
      lift.spec.add_alpha(levels[k], x(k));
    }
  }
  for (std::size_t xi_a = 0; xi_a < 2; ++xi_a) {
    for (std::size_t xi_b = 0; xi_b < 2; ++xi_b) {
      const double value = x(4 + 2 * xi_a + xi_b);
      if (std::abs(value) > kCoeffDropTol) {
        lift.spec.add_beta(levels[xi_a], levels[2 + xi_b], value);
      }
    }
  }
  lift.global_phase = x(8);
  return lift;
}

double verify_diagram(const cmatrix_t& qubit_op, const cmatrix_t& fock_op,
                      const ThetaEncoding& enc) {
  const auto qdim = static_cast<Eigen::Index>(enc.qubit_dim());
  const auto fdim = static_cast<Eigen::Index>(fock_dim(enc.num_levels()));
  if (qubit_op.rows() != qdim || qubit_op.cols() != qdim ||
      fock_op.rows() != fdim || fock_op.cols() != fdim) {
    throw std::invalid_argument("diagram dimensions do not match the encoding");
  }
  const cmatrix_t theta = enc.isometry();
  return (fock_op * theta - theta * qubit_op).norm();
}

FixedInteraction FixedInteraction::nearest_neighbor(const ThetaEncoding& enc,
                                                    double g) {
  FixedInteraction fixed;
  if (g == 0.0) return fixed;
  for (std::size_t p = 0; p + 1 < enc.qubit_count(); ++p) {
    const std::size_t i = enc.upper_level(p);
    const std::size_t j = enc.upper_level(p + 1);
    fixed.beta[{std::min(i, j), std::max(i, j)}] = g;
  }
  return fixed;
}

bool ControlSettings::empty() const {
  for (double v : alpha) {
    if (v != 0.0) return false;
  }
  return gamma.empty();
}

double PulseSchedule::total_duration() const {
  double total = 0.0;
  for (const auto& segment : segments) total += segment.duration;
  return total;
}

namespace {

// Fixed-interaction topology reduced to qubit-pair couplings. Only upper
// levels of adjacent logical pairs may be coupled.
std::map<std::size_t, double> coupling_chain(const FixedInteraction& fixed,
                                             const ThetaEncoding& enc) {
  std::map<std::size_t, double> chain;  // key q: coupling between q and q+1
  std::map<std::size_t, std::size_t> upper_to_pair;
  for (std::size_t p = 0; p < enc.qubit_count(); ++p) {
    upper_to_pair[enc.upper_level(p)] = p;
  }
  for (const auto& [levels, g] : fixed.beta) {
    if (g == 0.0) continue;
    const auto a = upper_to_pair.find(levels.first);
    const auto b = upper_to_pair.find(levels.second);
    if (a == upper_to_pair.end() || b == upper_to_pair.end()) {
      throw CompileError(
          "unsupported fixed interaction: coupling on level pair (" +
          std::to_string(levels.first) + ", " + std::to_string(levels.second) +
          ") does not join two upper levels");
    }
    const std::size_t qa = std::min(a->second, b->second);
    const std::size_t qb = std::max(a->second, b->second);
    if (qb != qa + 1) {
      throw CompileError(
          "unsupported fixed interaction: qubits " + std::to_string(qa) +
          " and " + std::to_string(qb) + " are not adjacent");
    }
    chain[qa] += g;
  }
  return chain;
}

// Qubits to flip at the segment midpoint so that every idle coupling has
// exactly one flipped endpoint (its accumulated two-level phase then
// cancels over the two halves) and no gate qubit is flipped.
std::set<std::size_t> echo_set(const std::map<std::size_t, double>& chain,
                               std::size_t gate_lo) {
  std::vector<std::size_t> idle;
  for (const auto& [q, g] : chain) {
    if (q != gate_lo) idle.push_back(q);
  }
  std::set<std::size_t> flips;
  std::size_t run_begin = 0;
  while (run_begin < idle.size()) {
    std::size_t run_end = run_begin;  // inclusive index of last edge in run
    while (run_end + 1 < idle.size() &&
           idle[run_end + 1] == idle[run_end] + 1) {
      ++run_end;
    }
    const std::size_t v0 = idle[run_begin];        // leftmost vertex
    const std::size_t v1 = idle[run_end] + 1;      // rightmost vertex
    if (v1 == gate_lo) {
      // Run ends on the left gate qubit; alternate inward from v1 - 1.
      for (std::ptrdiff_t v = static_cast<std::ptrdiff_t>(v1) - 1;
           v >= static_cast<std::ptrdiff_t>(v0); v -= 2) {
        flips.insert(static_cast<std::size_t>(v));
      }
    } else if (v0 == gate_lo + 1) {
      // Run starts on the right gate qubit; alternate from v0 + 1.
      for (std::size_t v = v0 + 1; v <= v1; v += 2) flips.insert(v);
    } else {
      for (std::size_t v = v0; v <= v1; v += 2) flips.insert(v);
    }
    run_begin = run_end + 1;
  }
  return flips;
}

void append_pulse(PulseSchedule& schedule, const HamiltonianSpec& spec) {
  if (spec.empty()) return;
  schedule.segments.push_back(
      {0.0, controls_from_spec(spec, schedule.num_levels)});
}

void compile_one_qubit_gate(const Gate& gate, const ThetaEncoding& enc,
                            PulseSchedule& schedule) {
  OneQubitHamiltonian h;
  if (gate.kind == GateKind::kRotation) {
    h = {gate.params[0], gate.params[1],
         complex_t{gate.params[2], gate.params[3]}};
  } else {
    h = hamiltonian_log(gate_matrix(gate));
  }
  append_pulse(schedule, lift_one_qubit(h, gate.target, enc));
}

void compile_diagonal_gate(const Gate& gate,
                           const std::map<std::size_t, double>& chain,
                           const ThetaEncoding& enc, PulseSchedule& schedule) {
  const std::size_t n = enc.qubit_count();
  // Phase split: phases(xi_a, xi_b) = c + a xi_a + b xi_b + w xi_a xi_b.
  const double c = gate.params[0];
  const double pa = gate.params[2] - gate.params[0];
  const double pb = gate.params[1] - gate.params[0];
  const double w = gate.params[3] - gate.params[2] - gate.params[1] +
                   gate.params[0];
  double wt = wrap_two_pi(w);
  if (std::min(wt, kTwoPi - wt) <= 1e-12) wt = 0.0;

  std::vector<double> local(n, 0.0);
  local[gate.target] += pa;
  local[gate.partner] += pb;

  if (wt != 0.0) {
    const std::size_t lo = std::min(gate.target, gate.partner);
    const std::size_t hi = std::max(gate.target, gate.partner);
    if (hi != lo + 1) {
      throw CompileError("entangling diagonal gate on non-adjacent qubits " +
                         std::to_string(gate.target) + " and " +
                         std::to_string(gate.partner) +
                         " has no fixed coupling to use");
    }
    const auto it = chain.find(lo);
    if (it == chain.end() || it->second <= 0.0) {
      throw CompileError("entangling diagonal gate on qubits " +
                         std::to_string(lo) + " and " + std::to_string(hi) +
                         " needs a positive fixed coupling");
    }
    const double g = it->second;
    const double t = wt / g;
    const auto flips = echo_set(chain, lo);

    if (flips.empty()) {
      schedule.segments.push_back({t, {}});
    } else {
      HamiltonianSpec flip_spec;
      flip_spec.num_levels = enc.num_levels();
      for (const std::size_t q : flips) {
        flip_spec = merge(flip_spec,
                          lift_one_qubit(bit_flip_generator(), q, enc));
      }
      schedule.segments.push_back({t / 2.0, {}});
      append_pulse(schedule, flip_spec);
      schedule.segments.push_back({t / 2.0, {}});
      append_pulse(schedule, flip_spec);
    }

    // Each echoed coupling leaves a residual local phase g*t/2 on its
    // unflipped qubit; remove it in the final field pulse.
    for (const auto& [q, g_edge] : chain) {
      if (q == lo) continue;
      const std::size_t unflipped = flips.count(q) ? q + 1 : q;
      local[unflipped] -= g_edge * t / 2.0;
    }
  }

  HamiltonianSpec correction;
  correction.num_levels = enc.num_levels();
  for (std::size_t q = 0; q < n; ++q) {
    if (local[q] != 0.0) correction.add_alpha(enc.upper_level(q), local[q]);
  }
  if (c != 0.0) {
    // A matched shift on both members of pair 0 is constant on the subspace.
    correction.add_alpha(enc.lower_level(0), c);
    correction.add_alpha(enc.upper_level(0), c);
  }
  append_pulse(schedule, correction);
}

}  // namespace

PulseSchedule compile_circuit(const Circuit& circuit,
                              const FixedInteraction& fixed,
                              const ThetaEncoding& enc) {
  if (circuit.qubit_count != enc.qubit_count()) {
    throw std::invalid_argument("circuit and encoding disagree on qubits");
  }
  PulseSchedule schedule;
  schedule.num_levels = enc.num_levels();
  schedule.fixed = fixed;
  const auto chain = coupling_chain(fixed, enc);
  for (const Gate& gate : circuit.gates) {
    if (gate.kind == GateKind::kDiagonal) {
      compile_diagonal_gate(gate, chain, enc, schedule);
    } else {
      compile_one_qubit_gate(gate, enc, schedule);
    }
  }
  return schedule;
}

cmatrix_t segment_unitary(const ScheduleSegment& segment,
                          const FixedInteraction& fixed,
                          std::size_t num_levels) {
  cmatrix_t h = build_external(segment.controls.alpha, num_levels) +
                build_tunneling(segment.controls.gamma, num_levels);
  if (segment.duration == 0.0) {
    return unitary(h, 1.0);
  }
  h += build_diagonal(fixed.beta, num_levels);
  return unitary(h, segment.duration);
}

cmatrix_t schedule_unitary(const PulseSchedule& schedule) {
  const std::size_t dim = fock_dim(schedule.num_levels);
  cmatrix_t u = cmatrix_t::Identity(dim, dim);
  for (const auto& segment : schedule.segments) {
    u = segment_unitary(segment, schedule.fixed, schedule.num_levels) * u;
  }
  return u;
}

nlohmann::json schedule_to_json(const PulseSchedule& schedule) {
  nlohmann::json fixed_beta = nlohmann::json::array();
  for (const auto& [pair, value] : schedule.fixed.beta) {
    fixed_beta.push_back(
        {{"i", pair.first}, {"j", pair.second}, {"value", value}});
  }
  nlohmann::json segments = nlohmann::json::array();
  for (const auto& segment : schedule.segments) {
    nlohmann::json gamma = nlohmann::json::array();
    for (const auto& [pair, value] : segment.controls.gamma) {
      gamma.push_back({{"i", pair.first},
                       {"j", pair.second},
                       {"re", value.real()},
                       {"im", value.imag()}});
    }
    segments.push_back({{"duration", segment.duration},
                        {"alpha", segment.controls.alpha},
                        {"gamma", gamma}});
  }
  return {{"header",
           {{"levels", schedule.num_levels}, {"fixed_beta", fixed_beta}}},
          {"segments", segments}};
}

namespace {

void require_keys(const nlohmann::json& j,
                  const std::vector<std::string>& keys, const char* where) {
  if (!j.is_object()) {
    throw std::runtime_error(std::string("schedule: ") + where +
                             " must be an object");
  }
  for (const auto& key : keys) {
    if (!j.contains(key)) {
      throw std::runtime_error(std::string("schedule: ") + where +
                               " is missing key '" + key + "'");
    }
  }
  for (const auto& [key, value] : j.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw std::runtime_error(std::string("schedule: ") + where +
                               " has unexpected key '" + key + "'");
    }
  }
}

}  // namespace

void validate_schedule_json(const nlohmann::json& j) {
  require_keys(j, {"header", "segments"}, "document");
  require_keys(j.at("header"), {"levels", "fixed_beta"}, "header");
  if (!j.at("header").at("levels").is_number_unsigned()) {
    throw std::runtime_error("schedule: header levels must be a non-negative "
                             "integer");
  }
  for (const auto& entry : j.at("header").at("fixed_beta")) {
    require_keys(entry, {"i", "j", "value"}, "fixed_beta entry");
  }
  if (!j.at("segments").is_array()) {
    throw std::runtime_error("schedule: segments must be an array");
  }
  for (const auto& segment : j.at("segments")) {
    // The exact key set keeps diagonal-interaction entries out of the
    // controllable part of the schedule.
    require_keys(segment, {"duration", "alpha", "gamma"}, "segment");
    const double duration = segment.at("duration").get<double>();
    if (!std::isfinite(duration) || duration < 0.0) {
      throw std::runtime_error(
          "schedule: segment duration must be finite and non-negative");
    }
    if (!segment.at("alpha").is_array()) {
      throw std::runtime_error("schedule: segment alpha must be an array");
    }
    for (const auto& v : segment.at("alpha")) {
      if (!v.is_number()) {
        throw std::runtime_error("schedule: alpha entries must be numbers");
      }
    }
    for (const auto& entry : segment.at("gamma")) {
      require_keys(entry, {"i", "j", "re", "im"}, "gamma entry");
    }
  }
}

PulseSchedule schedule_from_json(const nlohmann::json& j) {
  validate_schedule_json(j);
  PulseSchedule schedule;
  schedule.num_levels = j.at("header").at("levels").get<std::size_t>();
  for (const auto& entry : j.at("header").at("fixed_beta")) {
    schedule.fixed.beta[{entry.at("i").get<std::size_t>(),
                         entry.at("j").get<std::size_t>()}] =
        entry.at("value").get<double>();
  }
  for (const auto& seg : j.at("segments")) {
    ScheduleSegment segment;
    segment.duration = seg.at("duration").get<double>();
    segment.controls.alpha = seg.at("alpha").get<std::vector<double>>();
    for (const auto& entry : seg.at("gamma")) {
      segment.controls.gamma[{entry.at("i").get<std::size_t>(),
                              entry.at("j").get<std::size_t>()}] =
          complex_t{entry.at("re").get<double>(),
                    entry.at("im").get<double>()};
    }
    schedule.segments.push_back(std::move(segment));
  }
  return schedule;
}

}  // namespace fermifock
