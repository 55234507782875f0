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
#include <string>

#include "fermifock/types.hpp"

namespace fermifock {

/// One occupation-number basis vector |n_0, n_1, ..., n_{J-1}> over J levels.
///
/// Bit k of the basis index holds the occupation of level k, so the index of
/// |n_0, ..., n_{J-1}> is sum_k n_k 2^k. Every serialized index in the
/// project uses this bit order. Level indices are 0-based throughout.
class FockState {
 public:
  FockState(std::uint32_t occupations, std::size_t num_levels);

  std::size_t num_levels() const { return num_levels_; }
  std::uint32_t index() const { return bits_; }

  bool occupied(std::size_t level) const;
  std::size_t particle_count() const;

  // Number of occupied levels strictly below `level`. Counting n_level
  // itself as well would break the ladder anticommutation relations; the
  // property suite pins the exclusive form.
  std::size_t occupied_below(std::size_t level) const;

  FockState with_occupied(std::size_t level) const;
  FockState with_vacated(std::size_t level) const;

  std::string to_string() const;

  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  std::uint32_t bits_;
  std::size_t num_levels_;
};

/// Result of a ladder operator acting on a basis state: a signed basis state,
/// or zero. When `vanished` is set, `state` and `sign` carry no meaning.
struct SignedState {
  FockState state;
  int sign = +1;
  bool vanished = false;
};

/// a_level |s>: clears the occupation with sign (-1)^(occupied_below), or
/// vanishes when the level is already free.
SignedState apply_annihilate(std::size_t level, const FockState& s);

/// a^+_level |s>: sets the occupation with the same sign rule, or vanishes
/// when the level is already occupied (Pauli exclusion).
SignedState apply_create(std::size_t level, const FockState& s);

enum class LadderKind { kAnnihilate, kCreate };

/// Dense 2^J x 2^J matrix of a_level / a^+_level over the full Fock basis.
/// Entries are exactly 0 or +-1. Requires num_levels <= kMaxDenseLevels.
cmatrix_t ladder_matrix(LadderKind kind, std::size_t level,
                        std::size_t num_levels);

/// Matrix-vector product with a dimension check.
cvector_t apply_operator(const cmatrix_t& op, const cvector_t& v);

}  // namespace fermifock
