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

#include <doctest.h>

#include <cmath>

#include "fermifock/evolution.hpp"
#include "fermifock/fock.hpp"
#include "test_support.hpp"

using namespace fermifock;

TEST_SUITE_BEGIN("evolution");

TEST_CASE("zero hamiltonian gives the identity") {
  const cmatrix_t u = unitary(cmatrix_t::Zero(4, 4), 2.5);
  CHECK((u - cmatrix_t::Identity(4, 4)).norm() <= 1e-14);
}

TEST_CASE("pi pulse on a number operator flips the occupied phase") {
  const cmatrix_t number = ladder_matrix(LadderKind::kCreate, 0, 1) *
                           ladder_matrix(LadderKind::kAnnihilate, 0, 1);
  const cmatrix_t u = unitary(M_PI * number, 1.0);
  CHECK(std::abs(u(0, 0) - complex_t{1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(u(1, 1) - complex_t{-1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(u(0, 1)) <= 1e-14);
  CHECK(std::abs(u(1, 0)) <= 1e-14);
}

TEST_CASE("one-parameter group law") {
  std::mt19937 rng(0x757);
  const auto spec = testing::random_spec(rng, 3);
  const cmatrix_t h = assemble(spec);
  const cmatrix_t direct = unitary(h, 0.7 + 0.4);
  const cmatrix_t composed = unitary(h, 0.4) * unitary(h, 0.7);
  CHECK((direct - composed).norm() <= 1e-12);
}

TEST_CASE("evolve applies segments in order") {
  std::mt19937 rng(0x1234);
  const cvector_t v = testing::random_state(rng, 8);
  CHECK(testing::exact_equal(evolve(v, {}), v));

  HamiltonianSpec zero;
  zero.num_levels = 3;
  CHECK((evolve(v, {{zero, 1.0}}) - v).norm() <= 1e-14);

  const auto spec = testing::random_spec(rng, 3);
  const cvector_t split = evolve(v, {{spec, 0.3}, {spec, 0.9}});
  const cvector_t merged = evolve(v, {{spec, 1.2}});
  CHECK((split - merged).norm() <= 1e-12);
}

TEST_CASE("unitarity, norm and energy conservation") {
  std::mt19937 rng(0xE0E0);
  for (std::size_t levels = 2; levels <= 6; ++levels) {
    const auto spec = testing::random_spec(rng, levels);
    const cmatrix_t h = assemble(spec);
    const cmatrix_t u = unitary(h, 1.7);
    CHECK(unitarity_residual(u) <= 1e-11);

    const cvector_t v = testing::random_state(rng, fock_dim(levels));
    const cvector_t w = u * v;
    CHECK(std::abs(w.norm() - v.norm()) <= 1e-9);

    const complex_t before = v.dot(h * v);
    const complex_t after = w.dot(h * w);
    CHECK(std::abs(before - after) <= 1e-9);
  }
}

TEST_CASE("diagonal evolution only rotates phases") {
  std::mt19937 rng(0xD1A6);
  HamiltonianSpec spec;
  spec.num_levels = 3;
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (std::size_t i = 0; i < 3; ++i) spec.add_alpha(i, dist(rng));
  spec.add_beta(0, 2, dist(rng));
  const cmatrix_t u = unitary(assemble(spec), 0.9);
  const cvector_t v = testing::random_state(rng, 8);
  const cvector_t w = u * v;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    CHECK(std::abs(std::abs(w(k)) - std::abs(v(k))) <= 1e-12);
  }
}

TEST_CASE("input validation") {
  cmatrix_t skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;  // anti-Hermitian
  CHECK_THROWS_AS(unitary(skew, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(unitary(cmatrix_t::Zero(2, 3), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(unitary(cmatrix_t::Zero(2, 2), -1.0), std::invalid_argument);

  std::mt19937 rng(0x9);
  const cvector_t v = testing::random_state(rng, 4);
  HamiltonianSpec spec;
  spec.num_levels = 2;
  CHECK_THROWS_AS(evolve(v, {{spec, -0.5}}), std::invalid_argument);
  HamiltonianSpec wrong;
  wrong.num_levels = 3;
  CHECK_THROWS_AS(evolve(v, {{wrong, 0.5}}), std::invalid_argument);
}

TEST_SUITE_END();
