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

#include <cstdint>
#include <utility>
#include <vector>

#include "fermifock/types.hpp"

namespace fermifock {

/// Dual-rail map between an n-qubit Hilbert space and the Fock space over
/// J = 2n levels.
///
/// Levels follow the global energy order (position 0 = deepest level below
/// the Fermi cut, position n-1 = just below it, position n = just above,
/// position 2n-1 = highest). Logical pair p (0-based) joins the (p+1)-th
/// level below the cut with the (p+1)-th level above: lower = n-1-p,
/// upper = n+p. Qubit value 0 means the lower member is occupied, 1 the
/// upper. Qubit p maps to bit p of the qubit basis index.
class ThetaEncoding {
 public:
  /// Canonical pairing for n qubits, 1 <= n <= 8.
  static ThetaEncoding canonical(std::size_t qubit_count);

  /// Custom pairing; must be a perfect matching of the 2n levels.
  ThetaEncoding(std::size_t qubit_count,
                std::vector<std::pair<std::size_t, std::size_t>> pairs);

  std::size_t qubit_count() const { return qubit_count_; }
  std::size_t num_levels() const { return 2 * qubit_count_; }
  std::size_t qubit_dim() const { return std::size_t{1} << qubit_count_; }

  std::size_t lower_level(std::size_t pair) const;
  std::size_t upper_level(std::size_t pair) const;
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return pairs_;
  }

  /// Fock basis index carrying the given qubit basis state.
  std::uint32_t fock_index(std::uint32_t qubit_index) const;

  /// The 2^n Fock basis indices spanning the computational subspace,
  /// indexed by qubit basis index.
  const std::vector<std::uint32_t>& subspace_basis() const {
    return subspace_basis_;
  }

  /// Isometry from qubit space into Fock space (dimension 2^n -> 2^{2n}).
  cvector_t encode(const cvector_t& qubit_state) const;

  struct DecodeResult {
    cvector_t qubit_state;  // normalized projection; zero when !in_subspace
    double leakage = 0.0;   // |(I - P) w|^2 / |w|^2
    bool in_subspace = true;
  };

  /// Left inverse of encode on the computational subspace. The projected
  /// component is normalized; leakage is reported separately. When the
  /// state lies entirely outside the subspace the result is flagged.
  DecodeResult decode(const cvector_t& fock_state) const;

  /// 2^{2n} x 2^n matrix whose columns are the encoded basis states.
  cmatrix_t isometry() const;

  /// Orthogonal projector onto the computational subspace, rank 2^n.
  cmatrix_t projector() const;

  /// The constant sign with which a^+_lower a_upper (and its adjoint) acts
  /// on every subspace basis state for the given pair. Computed by
  /// enumeration and verified constant; with the canonical order it equals
  /// (-1)^pair because exactly one level of each enclosed pair is occupied.
  int tunneling_sign(std::size_t pair) const;

 private:
  std::size_t qubit_count_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::uint32_t> subspace_basis_;
};

}  // namespace fermifock
