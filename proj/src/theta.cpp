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

#include "fermifock/theta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fermifock/fock.hpp"

namespace fermifock {

namespace {

constexpr std::size_t kMaxQubits = 8;
constexpr double kZeroNormTol = 1e-14;

void check_qubit_count(std::size_t n) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n));
  }
}

}  // namespace

ThetaEncoding ThetaEncoding::canonical(std::size_t qubit_count) {
  check_qubit_count(qubit_count);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(qubit_count);
  for (std::size_t p = 0; p < qubit_count; ++p) {
    pairs.emplace_back(qubit_count - 1 - p, qubit_count + p);
  }
  return ThetaEncoding(qubit_count, std::move(pairs));
}

ThetaEncoding::ThetaEncoding(
    std::size_t qubit_count,
    std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : qubit_count_(qubit_count), pairs_(std::move(pairs)) {
  check_qubit_count(qubit_count_);
  if (pairs_.size() != qubit_count_) {
    throw std::invalid_argument("pairing must list one pair per qubit");
  }
  std::vector<bool> seen(2 * qubit_count_, false);
  for (const auto& [lower, upper] : pairs_) {
    if (lower >= 2 * qubit_count_ || upper >= 2 * qubit_count_ ||
        lower == upper) {
      throw std::invalid_argument("pairing entry out of range");
    }
    if (seen[lower] || seen[upper]) {
      throw std::invalid_argument("pairing is not a perfect matching");
    }
    seen[lower] = seen[upper] = true;
  }
  subspace_basis_.resize(qubit_dim());
  for (std::uint32_t q = 0; q < qubit_dim(); ++q) {
    std::uint32_t bits = 0;
    for (std::size_t p = 0; p < qubit_count_; ++p) {
      const bool one = (q >> p) & 1u;
      bits |= std::uint32_t{1} << (one ? pairs_[p].second : pairs_[p].first);
    }
    subspace_basis_[q] = bits;
  }
}

std::size_t ThetaEncoding::lower_level(std::size_t pair) const {
  if (pair >= qubit_count_) throw std::out_of_range("pair index out of range");
  return pairs_[pair].first;
}

std::size_t ThetaEncoding::upper_level(std::size_t pair) const {
  if (pair >= qubit_count_) throw std::out_of_range("pair index out of range");
  return pairs_[pair].second;
}

std::uint32_t ThetaEncoding::fock_index(std::uint32_t qubit_index) const {
  if (qubit_index >= qubit_dim()) {
    throw std::out_of_range("qubit basis index out of range");
  }
  return subspace_basis_[qubit_index];
}

cvector_t ThetaEncoding::encode(const cvector_t& qubit_state) const {
  if (static_cast<std::size_t>(qubit_state.size()) != qubit_dim()) {
    throw std::invalid_argument("qubit state dimension mismatch");
  }
  cvector_t out = cvector_t::Zero(fock_dim(num_levels()));
  for (std::uint32_t q = 0; q < qubit_dim(); ++q) {
    out(subspace_basis_[q]) = qubit_state(q);
  }
  return out;
}

ThetaEncoding::DecodeResult ThetaEncoding::decode(
    const cvector_t& fock_state) const {
  if (static_cast<std::size_t>(fock_state.size()) != fock_dim(num_levels())) {
    throw std::invalid_argument("fock state dimension mismatch");
  }
  const double total = fock_state.squaredNorm();
  if (total <= kZeroNormTol) {
    throw std::invalid_argument("cannot decode the zero vector");
  }
  cvector_t projected(qubit_dim());
  for (std::uint32_t q = 0; q < qubit_dim(); ++q) {
    projected(q) = fock_state(subspace_basis_[q]);
  }
  const double inside = projected.squaredNorm();
  DecodeResult result;
  result.leakage = std::min(1.0, std::max(0.0, 1.0 - inside / total));
  if (inside / total <= kZeroNormTol) {
    result.in_subspace = false;
    result.leakage = 1.0;
    result.qubit_state = cvector_t::Zero(qubit_dim());
    return result;
  }
  result.qubit_state = projected / std::sqrt(inside);
  return result;
}

cmatrix_t ThetaEncoding::isometry() const {
  if (num_levels() > kMaxDenseLevels) {
    throw std::invalid_argument("dense isometry is capped at " +
                                std::to_string(kMaxDenseLevels) + " levels");
  }
  cmatrix_t theta = cmatrix_t::Zero(fock_dim(num_levels()), qubit_dim());
  for (std::uint32_t q = 0; q < qubit_dim(); ++q) {
    theta(subspace_basis_[q], q) = 1.0;
  }
  return theta;
}

cmatrix_t ThetaEncoding::projector() const {
  if (num_levels() > kMaxDenseLevels) {
    throw std::invalid_argument("dense projector is capped at " +
                                std::to_string(kMaxDenseLevels) + " levels");
  }
  const std::size_t dim = fock_dim(num_levels());
  cmatrix_t p = cmatrix_t::Zero(dim, dim);
  for (const std::uint32_t idx : subspace_basis_) {
    p(idx, idx) = 1.0;
  }
  return p;
}

int ThetaEncoding::tunneling_sign(std::size_t pair) const {
  if (pair >= qubit_count_) throw std::out_of_range("pair index out of range");
  const std::size_t lower = pairs_[pair].first;
  const std::size_t upper = pairs_[pair].second;
  int sign = 0;
  for (std::uint32_t q = 0; q < qubit_dim(); ++q) {
    if (((q >> pair) & 1u) == 0) continue;  // a^+_lower a_upper needs |1>
    const FockState s(subspace_basis_[q], num_levels());
    const SignedState hopped = apply_annihilate(upper, s);
    const SignedState landed = apply_create(lower, hopped.state);
    if (hopped.vanished || landed.vanished) {
      throw std::logic_error("subspace basis state lost its upper occupation");
    }
    const int this_sign = hopped.sign * landed.sign;
    if (sign == 0) {
      sign = this_sign;
    } else if (sign != this_sign) {
      throw std::logic_error(
          "tunneling sign is not constant across the subspace basis");
    }
  }
  return sign;
}

}  // namespace fermifock
