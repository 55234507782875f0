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
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fermifock/types.hpp"

namespace fermifock {

using LevelPair = std::pair<std::size_t, std::size_t>;
using RealPairTable = std::map<LevelPair, double>;
using ComplexPairTable = std::map<LevelPair, complex_t>;
using TwoBodyTable = std::map<std::array<std::size_t, 4>, complex_t>;

/// Sparse coefficient tables defining a Hermitian Fock-space operator.
/// Absent entries are zero; all level indices are 0-based.
///
/// Term types:
///   alpha[i]               alpha_i a^+_i a_i          (external field)
///   beta[{i,j}]            beta_ij n_i n_j, i < j     (diagonal interaction,
///                          stored once per unordered pair, applied once)
///   gamma[{i,j}]           gamma_ij a^+_i a_j + conj  (tunneling, i < j)
///   one_body[{k,l}]        H_kl a^+_k a_l
///   two_body[{k,l,m,n}]    H_klmn a^+_l a^+_k a_m a_n (operator order fixed;
///                          reordering changes signs)
struct HamiltonianSpec {
  std::size_t num_levels = 0;
  std::vector<double> alpha;  // empty or length num_levels
  RealPairTable beta;
  ComplexPairTable gamma;
  ComplexPairTable one_body;
  TwoBodyTable two_body;

  // Accumulating setters. Pair keys are canonicalized to i < j; for gamma
  // the coefficient is conjugated when the arguments arrive swapped, so the
  // stored table always means gamma_ij a^+_i a_j + conj(gamma_ij) a^+_j a_i.
  void add_alpha(std::size_t i, double value);
  void add_beta(std::size_t i, std::size_t j, double value);
  void add_gamma(std::size_t i, std::size_t j, complex_t value);
  void add_one_body(std::size_t k, std::size_t l, complex_t value);
  void add_two_body(std::size_t k, std::size_t l, std::size_t m, std::size_t n,
                    complex_t value);

  bool empty() const;

  friend bool operator==(const HamiltonianSpec&,
                         const HamiltonianSpec&) = default;
};

/// Sum of two specs over the same level count (tables merge additively).
HamiltonianSpec merge(const HamiltonianSpec& a, const HamiltonianSpec& b);

/// Diagonal operator with eigenvalue sum_i alpha_i n_i on each basis state.
cmatrix_t build_external(const std::vector<double>& alpha,
                         std::size_t num_levels);

/// Diagonal operator with eigenvalue sum_{i<j} beta_ij n_i n_j.
cmatrix_t build_diagonal(const RealPairTable& beta, std::size_t num_levels);

/// Hermitian tunneling operator; off-diagonal couplings carry the fermionic
/// sign of the occupied levels between i and j.
cmatrix_t build_tunneling(const ComplexPairTable& gamma,
                          std::size_t num_levels);

/// sum_{k,l} H_kl a^+_k a_l. Hermiticity of the result is reported by
/// hermiticity_residual(), not assumed here.
cmatrix_t build_one_body(const ComplexPairTable& table,
                         std::size_t num_levels);

/// sum H_klmn a^+_l a^+_k a_m a_n, applied right to left in exactly that
/// operator order.
cmatrix_t build_two_body(const TwoBodyTable& table, std::size_t num_levels);

/// Sum of all term builders. Validates the spec (alpha length, beta pairs
/// distinct, one_body table Hermitian) and checks the assembled matrix is
/// Hermitian within 1e-12.
cmatrix_t assemble(const HamiltonianSpec& spec);

// JSON round-trip. Schema: {"J": int, "alpha": [num...], "beta"/"gamma"/
// "one_body"/"two_body": [{"indices": [...], "re": num, "im": num}, ...]}.
// Indices are 0-based; the round-trip is lossless.
void to_json(nlohmann::json& j, const HamiltonianSpec& spec);
void from_json(const nlohmann::json& j, HamiltonianSpec& spec);

}  // namespace fermifock
