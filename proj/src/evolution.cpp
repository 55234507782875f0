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

#include "fermifock/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace fermifock {

namespace {
constexpr double kHermitianTol = 1e-10;
}

cmatrix_t unitary(const cmatrix_t& hamiltonian, double t) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw std::invalid_argument("hamiltonian must be square");
  }
  if (!std::isfinite(t) || t < 0.0) {
    throw std::invalid_argument("duration must be finite and non-negative");
  }
  if (hermiticity_residual(hamiltonian) > kHermitianTol) {
    throw std::invalid_argument("hamiltonian is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<cmatrix_t> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const Eigen::VectorXd phases = solver.eigenvalues() * t;
  cvector_t exp_phases(phases.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    exp_phases(k) = std::polar(1.0, -phases(k));
  }
  return solver.eigenvectors() * exp_phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

cvector_t evolve(const cvector_t& v,
                 const std::vector<EvolutionSegment>& segments) {
  cvector_t state = v;
  for (const auto& segment : segments) {
    const cmatrix_t h = assemble(segment.hamiltonian);
    if (h.cols() != state.size()) {
      throw std::invalid_argument("segment dimension mismatch");
    }
    state = unitary(h, segment.duration) * state;
  }
  return state;
}

}  // namespace fermifock
