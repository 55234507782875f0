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

#include "fermifock/fock.hpp"

#include <bit>
#include <stdexcept>

namespace fermifock {

namespace {

void check_level(std::size_t level, std::size_t num_levels) {
  if (level >= num_levels) {
    throw std::out_of_range("level index " + std::to_string(level) +
                            " out of range for " + std::to_string(num_levels) +
                            " levels");
  }
}

}  // namespace

FockState::FockState(std::uint32_t occupations, std::size_t num_levels)
    : bits_(occupations), num_levels_(num_levels) {
  if (num_levels == 0 || num_levels > kMaxLevels) {
    throw std::invalid_argument("level count must be in [1, " +
                                std::to_string(kMaxLevels) + "], got " +
                                std::to_string(num_levels));
  }
  if ((occupations >> num_levels) != 0) {
    throw std::invalid_argument("occupation bits exceed the level count");
  }
}

bool FockState::occupied(std::size_t level) const {
  check_level(level, num_levels_);
  return (bits_ >> level) & 1u;
}

std::size_t FockState::particle_count() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::size_t FockState::occupied_below(std::size_t level) const {
  check_level(level, num_levels_);
  const std::uint32_t mask = (std::uint32_t{1} << level) - 1u;
  return static_cast<std::size_t>(std::popcount(bits_ & mask));
}

FockState FockState::with_occupied(std::size_t level) const {
  check_level(level, num_levels_);
  return FockState(bits_ | (std::uint32_t{1} << level), num_levels_);
}

FockState FockState::with_vacated(std::size_t level) const {
  check_level(level, num_levels_);
  return FockState(bits_ & ~(std::uint32_t{1} << level), num_levels_);
}

std::string FockState::to_string() const {
  std::string out = "|";
  for (std::size_t k = 0; k < num_levels_; ++k) {
    out += occupied(k) ? '1' : '0';
  }
  out += '>';
  return out;
}

SignedState apply_annihilate(std::size_t level, const FockState& s) {
  check_level(level, s.num_levels());
  if (!s.occupied(level)) {
    return {s, +1, true};
  }
  const int sign = (s.occupied_below(level) % 2 == 0) ? +1 : -1;
  return {s.with_vacated(level), sign, false};
}

SignedState apply_create(std::size_t level, const FockState& s) {
  check_level(level, s.num_levels());
  if (s.occupied(level)) {
    return {s, +1, true};
  }
  const int sign = (s.occupied_below(level) % 2 == 0) ? +1 : -1;
  return {s.with_occupied(level), sign, false};
}

cmatrix_t ladder_matrix(LadderKind kind, std::size_t level,
                        std::size_t num_levels) {
  if (num_levels == 0 || num_levels > kMaxDenseLevels) {
    throw std::invalid_argument("dense operators support 1 to " +
                                std::to_string(kMaxDenseLevels) +
                                " levels, got " + std::to_string(num_levels));
  }
  check_level(level, num_levels);
  const std::size_t dim = fock_dim(num_levels);
  cmatrix_t m = cmatrix_t::Zero(dim, dim);
  for (std::uint32_t ket = 0; ket < dim; ++ket) {
    const FockState s(ket, num_levels);
    const SignedState out = (kind == LadderKind::kAnnihilate)
                                ? apply_annihilate(level, s)
                                : apply_create(level, s);
    if (!out.vanished) {
      m(out.state.index(), ket) = static_cast<double>(out.sign);
    }
  }
  return m;
}

cvector_t apply_operator(const cmatrix_t& op, const cvector_t& v) {
  if (op.cols() != v.size()) {
    throw std::invalid_argument("operator/vector dimension mismatch: " +
                                std::to_string(op.cols()) + " vs " +
                                std::to_string(v.size()));
  }
  return op * v;
}

}  // namespace fermifock
