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

// End-to-end verification suite. Each check prints one line; the binary
// exits non-zero when any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fermifock/compiler.hpp"
#include "fermifock/evolution.hpp"
#include "fermifock/runner.hpp"
#include "test_support.hpp"

using namespace fermifock;
using fermifock::testing::exact_equal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// 1. Ladder anticommutation relations as exact matrix identities.
Outcome anticommutation() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t levels = 1; levels <= 6; ++levels) {
    const std::size_t dim = fock_dim(levels);
    const cmatrix_t id = cmatrix_t::Identity(dim, dim);
    std::vector<cmatrix_t> a, c;
    for (std::size_t j = 0; j < levels; ++j) {
      a.push_back(ladder_matrix(LadderKind::kAnnihilate, j, levels));
      c.push_back(ladder_matrix(LadderKind::kCreate, j, levels));
    }
    for (std::size_t j = 0; j < levels; ++j) {
      for (std::size_t k = 0; k < levels; ++k) {
        const cmatrix_t mixed = c[j] * a[k] + a[k] * c[j];
        out.require((mixed - (j == k ? id : cmatrix_t::Zero(dim, dim)))
                            .norm() == 0.0,
                    "mixed relation failed at J=" + std::to_string(levels));
        out.require((a[j] * a[k] + a[k] * a[j]).norm() == 0.0,
                    "annihilator relation failed");
        out.require((c[j] * c[k] + c[k] * c[j]).norm() == 0.0,
                    "creator relation failed");
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 5.0, "runtime budget exceeded");
  out.detail = out.ok ? "" : out.detail;
  return out;
}

// 2. Independent-oracle equivalence for ladder matrices and builders.
Outcome oracle_equivalence() {
  Outcome out;
  for (std::size_t levels = 1; levels <= 6; ++levels) {
    for (std::size_t j = 0; j < levels; ++j) {
      for (const auto kind : {LadderKind::kAnnihilate, LadderKind::kCreate}) {
        out.require(exact_equal(ladder_matrix(kind, j, levels),
                                testing::kron_ladder(kind, j, levels)),
                    "ladder/Kronecker mismatch at J=" +
                        std::to_string(levels));
      }
    }
  }
  std::mt19937 rng(0x0AC1E);
  for (std::size_t levels = 1; levels <= 4; ++levels) {
    for (int rep = 0; rep < 8; ++rep) {
      auto spec = testing::random_spec(rng, levels);
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      std::uniform_int_distribution<std::size_t> level(0, levels - 1);
      spec.add_one_body(level(rng), level(rng), complex_t{dist(rng), 0.0});
      spec.add_two_body(level(rng), level(rng), level(rng), level(rng),
                        complex_t{dist(rng), dist(rng)});
      out.require(exact_equal(build_external(spec.alpha, levels),
                              testing::product_external(spec.alpha, levels)),
                  "external builder mismatch");
      out.require(exact_equal(build_diagonal(spec.beta, levels),
                              testing::product_diagonal(spec.beta, levels)),
                  "diagonal builder mismatch");
      out.require(exact_equal(build_tunneling(spec.gamma, levels),
                              testing::product_tunneling(spec.gamma, levels)),
                  "tunneling builder mismatch");
      out.require(exact_equal(build_one_body(spec.one_body, levels),
                              testing::product_one_body(spec.one_body,
                                                        levels)),
                  "one-body builder mismatch");
      out.require(exact_equal(build_two_body(spec.two_body, levels),
                              testing::product_two_body(spec.two_body,
                                                        levels)),
                  "two-body builder mismatch");
    }
  }
  return out;
}

// 3. The encoding preserves inner products.
Outcome isometry() {
  Outcome out;
  std::mt19937 rng(0x150);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto enc = ThetaEncoding::canonical(n);
    for (int rep = 0; rep < 100; ++rep) {
      const cvector_t x = testing::random_state(rng, enc.qubit_dim());
      const cvector_t y = testing::random_state(rng, enc.qubit_dim());
      const double dev =
          std::abs(x.dot(y) - enc.encode(x).dot(enc.encode(y)));
      worst = std::max(worst, dev);
    }
  }
  out.require(worst <= 1e-12,
              "inner products deviate by " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max deviation %.2e", worst);
  out.detail = out.ok ? buf : out.detail;
  return out;
}

// 4. Within-pair tunneling acts with one constant sign on the subspace.
Outcome sign_lemma() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto enc = ThetaEncoding::canonical(n);
    for (std::size_t pair = 0; pair < n; ++pair) {
      // tunneling_sign enumerates every subspace basis state and throws on
      // the first counterexample.
      try {
        const int sign = enc.tunneling_sign(pair);
        out.require(sign == (pair % 2 == 0 ? 1 : -1),
                    "unexpected sign value at pair " + std::to_string(pair));
      } catch (const std::exception& e) {
        out.require(false, e.what());
      }
    }
  }
  out.require(seconds_since(start) < 10.0, "runtime budget exceeded");
  return out;
}

// 5. Exponentiated one-qubit lifts close the commuting square.
Outcome diagram_a() {
  Outcome out;
  std::mt19937 rng(0xD1A);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto enc = ThetaEncoding::canonical(n);
    for (int rep = 0; rep < 50; ++rep) {
      const Eigen::Matrix2cd hq = testing::random_hermitian_2x2(rng);
      for (std::size_t pair = 0; pair < n; ++pair) {
        const OneQubitHamiltonian h{hq(0, 0).real(), hq(1, 1).real(),
                                    hq(0, 1)};
        const cmatrix_t fock_u =
            unitary(assemble(lift_one_qubit(h, pair, enc)), 1.0);
        const Gate rot{GateKind::kRotation,
                       pair,
                       pair,
                       {h.d1, h.d2, h.d.real(), h.d.imag()}};
        const cmatrix_t qubit_u = embed_gate(rot, n);
        worst = std::max(worst, verify_diagram(qubit_u, fock_u, enc));
      }
    }
  }
  out.require(worst <= 1e-9, "worst residual " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst residual %.2e", worst);
  out.detail = out.ok ? buf : out.detail;
  return out;
}

// 6. Diagonal lifts restrict to the requested phases; entangling inputs stay
// entangling.
Outcome diagram_b() {
  Outcome out;
  std::mt19937 rng(0xD1B);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const auto enc = ThetaEncoding::canonical(2);
  const cmatrix_t theta = enc.isometry();
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const std::array<double, 4> phases{angle(rng), angle(rng), angle(rng),
                                       angle(rng)};
    const auto lift = lift_diagonal(phases, 0, 1, enc);
    const cmatrix_t r =
        theta.adjoint() * unitary(assemble(lift.spec), 1.0) * theta;
    const Gate gate{GateKind::kDiagonal, 0, 1,
                    {phases[0], phases[1], phases[2], phases[3]}};
    const cmatrix_t target =
        std::polar(1.0, lift.global_phase) * embed_gate(gate, 2);
    worst = std::max(worst, (r - target).norm());

    const double w = phases[0] - phases[1] - phases[2] + phases[3];
    const bool entangling = std::abs(std::remainder(w, 2.0 * M_PI)) > 1e-9;
    Eigen::Matrix2cd folded;
    folded << r(0, 0), r(1, 1), r(2, 2), r(3, 3);
    const auto svals =
        Eigen::JacobiSVD<Eigen::Matrix2cd>(folded).singularValues();
    const bool lift_entangling = svals(1) > 1e-10 * svals(0);
    out.require(lift_entangling == entangling,
                "entangling character not preserved");
  }
  out.require(worst <= 1e-10, "worst restriction residual " +
                                  std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst residual %.2e", worst);
  out.detail = out.ok ? buf : out.detail;
  return out;
}

std::vector<Circuit> seeded_circuits() {
  std::mt19937 rng(20260811);
  std::vector<Circuit> circuits;
  for (int k = 0; k < 20; ++k) {
    const std::size_t qubits = (k % 2 == 0) ? 2 : 3;
    std::uniform_int_distribution<std::size_t> depth(1, 6);
    circuits.push_back(testing::random_circuit(rng, qubits, depth(rng)));
  }
  return circuits;
}

// 7. Compiled schedules keep encoded inputs inside the subspace.
Outcome leakage() {
  Outcome out;
  double worst = 0.0;
  RunConfig config;
  config.mode = RunMode::kSimulate;
  for (const Circuit& circuit : seeded_circuits()) {
    const Report report = run_circuit(config, circuit);
    worst = std::max(worst, *report.leakage);
  }
  out.require(worst <= 1e-8, "worst leakage " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst leakage %.2e", worst);
  out.detail = out.ok ? buf : out.detail;
  return out;
}

// 8. End-to-end compiled fidelity on seeded random circuits.
Outcome end_to_end() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  double worst = 1.0;
  RunConfig config;
  config.mode = RunMode::kSimulate;
  config.coupling = 1.0;
  for (const Circuit& circuit : seeded_circuits()) {
    const Report report = run_circuit(config, circuit);
    worst = std::min(worst, *report.fidelity);
    out.require(*report.fidelity >= 1.0 - 1e-6,
                "fidelity " + std::to_string(*report.fidelity));
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 60.0, "runtime budget exceeded");
  char buf[80];
  std::snprintf(buf, sizeof(buf), "worst fidelity 1 - %.2e in %.1fs",
                1.0 - worst, elapsed);
  out.detail = out.ok ? buf : out.detail;
  return out;
}

// 9. Serialized schedules never contain a controllable interaction entry.
Outcome control_restriction() {
  Outcome out;
  RunConfig config;
  config.mode = RunMode::kCompileOnly;
  for (const Circuit& circuit : seeded_circuits()) {
    const Report report = run_circuit(config, circuit);
    const nlohmann::json& program = report.schedule;
    try {
      validate_schedule_json(program);
    } catch (const std::exception& e) {
      out.require(false, e.what());
      continue;
    }
    for (const auto& segment : program.at("segments")) {
      out.require(!segment.contains("beta") && !segment.contains("fixed_beta"),
                  "segment carries an interaction entry");
      out.require(segment.size() == 3, "segment has extra keys");
    }
  }
  return out;
}

// 10. Evolution sanity: unitarity, group law, conservation laws.
Outcome evolution_sanity() {
  Outcome out;
  std::mt19937 rng(0xE10);
  for (std::size_t levels = 2; levels <= 8; ++levels) {
    const auto spec = testing::random_spec(rng, levels);
    const cmatrix_t h = assemble(spec);
    const cmatrix_t u = unitary(h, 0.8);
    out.require(unitarity_residual(u) <= 1e-11,
                "unitarity residual too large at J=" + std::to_string(levels));

    const cmatrix_t u2 = unitary(h, 0.3) * unitary(h, 0.5);
    out.require((u - u2).norm() <= 1e-10, "group law violated");

    const cvector_t v = testing::random_state(rng, fock_dim(levels));
    const cvector_t w = u * v;
    out.require(std::abs(w.norm() - 1.0) <= 1e-9, "norm not preserved");
    out.require(std::abs(v.dot(h * v) - w.dot(h * w)) <= 1e-9,
                "energy not conserved");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> checks =
      {{"anticommutation relations exact for J <= 6", anticommutation},
       {"ladder and builder oracles agree exactly", oracle_equivalence},
       {"encoding is an isometry (n <= 5)", isometry},
       {"within-pair tunneling sign is constant on the subspace", sign_lemma},
       {"one-qubit diagram closes (50 x all pairs, n <= 4)", diagram_a},
       {"diagonal diagram closes and preserves entanglement", diagram_b},
       {"compiled schedules keep leakage <= 1e-8", leakage},
       {"20 seeded circuits reach fidelity >= 1 - 1e-6", end_to_end},
       {"schedules carry no controllable interaction entries",
        control_restriction},
       {"evolution unitarity and conservation laws (J <= 8)",
        evolution_sanity}};

  int failures = 0;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    Outcome outcome;
    try {
      outcome = checks[k].second();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2zu. %s%s%s\n", outcome.ok ? "PASS" : "FAIL", k + 1,
                checks[k].first, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    if (!outcome.ok) ++failures;
  }
  std::printf("%zu checks, %d failed\n", checks.size(), failures);
  return failures == 0 ? 0 : 1;
}
