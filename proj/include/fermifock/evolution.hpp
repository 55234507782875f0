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

#include <vector>

#include "fermifock/hamiltonian.hpp"
#include "fermifock/types.hpp"

namespace fermifock {

/// A stretch of evolution under one Hamiltonian. Durations are non-negative;
/// inverse evolution is expressed by negating the coefficients in the spec.
struct EvolutionSegment {
  HamiltonianSpec hamiltonian;
  double duration = 0.0;
};

/// exp(-i H t) via Hermitian eigendecomposition. H must be Hermitian within
/// 1e-10; the result is unitary to roundoff.
cmatrix_t unitary(const cmatrix_t& hamiltonian, double t);

/// Applies the segment unitaries to v in list order.
cvector_t evolve(const cvector_t& v,
                 const std::vector<EvolutionSegment>& segments);

}  // namespace fermifock
