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

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace fermifock {

using complex_t = std::complex<double>;
using cmatrix_t = Eigen::MatrixXcd;
using cvector_t = Eigen::VectorXcd;

// Level-count limits. Basis states are cheap bit-vectors and go up to
// kMaxLevels; dense operator construction stops at kMaxDenseLevels
// (dimension 4096). Exceeding either is an error, never a truncation.
inline constexpr std::size_t kMaxLevels = 16;
inline constexpr std::size_t kMaxDenseLevels = 12;

inline constexpr std::size_t fock_dim(std::size_t num_levels) {
  return std::size_t{1} << num_levels;
}

inline double hermiticity_residual(const cmatrix_t& m) {
  return (m - m.adjoint()).norm();
}

inline double unitarity_residual(const cmatrix_t& m) {
  return (m.adjoint() * m - cmatrix_t::Identity(m.rows(), m.cols())).norm();
}

inline bool is_hermitian(const cmatrix_t& m, double tol = 1e-10) {
  return m.rows() == m.cols() && hermiticity_residual(m) <= tol;
}

inline bool is_unitary(const cmatrix_t& m, double tol = 1e-10) {
  return m.rows() == m.cols() && unitarity_residual(m) <= tol;
}

}  // namespace fermifock
