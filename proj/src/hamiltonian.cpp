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

#include "fermifock/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fermifock/fock.hpp"

namespace fermifock {

namespace {

constexpr double kAssembleHermitianTol = 1e-12;

void check_dense_levels(std::size_t num_levels) {
  if (num_levels == 0 || num_levels > kMaxDenseLevels) {
    throw std::invalid_argument("dense operators support 1 to " +
                                std::to_string(kMaxDenseLevels) +
                                " levels, got " + std::to_string(num_levels));
  }
}

void check_pair(std::size_t i, std::size_t j, std::size_t num_levels,
                const char* what) {
  if (i == j) {
    throw std::invalid_argument(std::string(what) +
                                " entry must couple two distinct levels");
  }
  if (i >= num_levels || j >= num_levels) {
    throw std::out_of_range(std::string(what) + " index out of range");
  }
}

// Applies a chain of ladder operators (rightmost first) to a basis state.
// Returns vanished when any factor annihilates the state.
struct LadderFactor {
  LadderKind kind;
  std::size_t level;
};

SignedState apply_chain(const FockState& ket,
                        std::initializer_list<LadderFactor> factors) {
  SignedState acc{ket, +1, false};
  for (const auto& f : factors) {
    const SignedState step = (f.kind == LadderKind::kAnnihilate)
                                 ? apply_annihilate(f.level, acc.state)
                                 : apply_create(f.level, acc.state);
    if (step.vanished) {
      return {ket, +1, true};
    }
    acc.state = step.state;
    acc.sign *= step.sign;
  }
  return acc;
}

}  // namespace

void HamiltonianSpec::add_alpha(std::size_t i, double value) {
  if (i >= num_levels) {
    throw std::out_of_range("alpha index out of range");
  }
  if (alpha.empty()) {
    alpha.assign(num_levels, 0.0);
  }
  alpha[i] += value;
}

void HamiltonianSpec::add_beta(std::size_t i, std::size_t j, double value) {
  check_pair(i, j, num_levels, "beta");
  if (i > j) std::swap(i, j);
  beta[{i, j}] += value;
}

void HamiltonianSpec::add_gamma(std::size_t i, std::size_t j,
                                complex_t value) {
  check_pair(i, j, num_levels, "gamma");
  if (i > j) {
    std::swap(i, j);
    value = std::conj(value);
  }
  gamma[{i, j}] += value;
}

void HamiltonianSpec::add_one_body(std::size_t k, std::size_t l,
                                   complex_t value) {
  if (k >= num_levels || l >= num_levels) {
    throw std::out_of_range("one_body index out of range");
  }
  one_body[{k, l}] += value;
}

void HamiltonianSpec::add_two_body(std::size_t k, std::size_t l, std::size_t m,
                                   std::size_t n, complex_t value) {
  if (k >= num_levels || l >= num_levels || m >= num_levels ||
      n >= num_levels) {
    throw std::out_of_range("two_body index out of range");
  }
  two_body[{k, l, m, n}] += value;
}

bool HamiltonianSpec::empty() const {
  for (double a : alpha) {
    if (a != 0.0) return false;
  }
  return beta.empty() && gamma.empty() && one_body.empty() &&
         two_body.empty();
}

HamiltonianSpec merge(const HamiltonianSpec& a, const HamiltonianSpec& b) {
  if (a.num_levels != b.num_levels) {
    throw std::invalid_argument("cannot merge specs over different levels");
  }
  HamiltonianSpec out = a;
  if (!b.alpha.empty()) {
    if (out.alpha.empty()) out.alpha.assign(out.num_levels, 0.0);
    for (std::size_t i = 0; i < b.alpha.size(); ++i) out.alpha[i] += b.alpha[i];
  }
  for (const auto& [key, v] : b.beta) out.beta[key] += v;
  for (const auto& [key, v] : b.gamma) out.gamma[key] += v;
  for (const auto& [key, v] : b.one_body) out.one_body[key] += v;
  for (const auto& [key, v] : b.two_body) out.two_body[key] += v;
  return out;
}

cmatrix_t build_external(const std::vector<double>& alpha,
                         std::size_t num_levels) {
  check_dense_levels(num_levels);
  if (!alpha.empty() && alpha.size() != num_levels) {
    throw std::invalid_argument("alpha length " + std::to_string(alpha.size()) +
                                " does not match level count " +
                                std::to_string(num_levels));
  }
  const std::size_t dim = fock_dim(num_levels);
  cmatrix_t m = cmatrix_t::Zero(dim, dim);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::uint32_t ket = 0; ket < dim; ++ket) {
      if ((ket >> i) & 1u) {
        m(ket, ket) += alpha[i];
      }
    }
  }
  return m;
}

cmatrix_t build_diagonal(const RealPairTable& beta, std::size_t num_levels) {
  check_dense_levels(num_levels);
  const std::size_t dim = fock_dim(num_levels);
  cmatrix_t m = cmatrix_t::Zero(dim, dim);
  for (const auto& [pair, value] : beta) {
    check_pair(pair.first, pair.second, num_levels, "beta");
    for (std::uint32_t ket = 0; ket < dim; ++ket) {
      if (((ket >> pair.first) & 1u) && ((ket >> pair.second) & 1u)) {
        m(ket, ket) += value;
      }
    }
  }
  return m;
}

cmatrix_t build_tunneling(const ComplexPairTable& gamma,
                          std::size_t num_levels) {
  check_dense_levels(num_levels);
  const std::size_t dim = fock_dim(num_levels);
  cmatrix_t m = cmatrix_t::Zero(dim, dim);
  for (const auto& [pair, value] : gamma) {
    check_pair(pair.first, pair.second, num_levels, "gamma");
    for (std::uint32_t ket = 0; ket < dim; ++ket) {
      const FockState s(ket, num_levels);
      // gamma_ij a^+_i a_j
      const SignedState hop =
          apply_chain(s, {{LadderKind::kAnnihilate, pair.second},
                          {LadderKind::kCreate, pair.first}});
      if (!hop.vanished) {
        m(hop.state.index(), ket) += value * static_cast<double>(hop.sign);
      }
      // conj(gamma_ij) a^+_j a_i
      const SignedState back =
          apply_chain(s, {{LadderKind::kAnnihilate, pair.first},
                          {LadderKind::kCreate, pair.second}});
      if (!back.vanished) {
        m(back.state.index(), ket) +=
            std::conj(value) * static_cast<double>(back.sign);
      }
    }
  }
  return m;
}

cmatrix_t build_one_body(const ComplexPairTable& table,
                         std::size_t num_levels) {
  check_dense_levels(num_levels);
  const std::size_t dim = fock_dim(num_levels);
  cmatrix_t m = cmatrix_t::Zero(dim, dim);
  for (const auto& [pair, value] : table) {
    const auto [k, l] = pair;
    if (k >= num_levels || l >= num_levels) {
      throw std::out_of_range("one_body index out of range");
    }
    for (std::uint32_t ket = 0; ket < dim; ++ket) {
      const FockState s(ket, num_levels);
      const SignedState out = apply_chain(s, {{LadderKind::kAnnihilate, l},
                                              {LadderKind::kCreate, k}});
      if (!out.vanished) {
        m(out.state.index(), ket) += value * static_cast<double>(out.sign);
      }
    }
  }
  return m;
}

cmatrix_t build_two_body(const TwoBodyTable& table, std::size_t num_levels) {
  check_dense_levels(num_levels);
  const std::size_t dim = fock_dim(num_levels);
  cmatrix_t m = cmatrix_t::Zero(dim, dim);
  for (const auto& [idx, value] : table) {
    const auto [k, l, mm, n] = idx;
    if (k >= num_levels || l >= num_levels || mm >= num_levels ||
        n >= num_levels) {
      throw std::out_of_range("two_body index out of range");
    }
    for (std::uint32_t ket = 0; ket < dim; ++ket) {
      const FockState s(ket, num_levels);
      // a^+_l a^+_k a_m a_n acting right to left.
      const SignedState out =
          apply_chain(s, {{LadderKind::kAnnihilate, n},
                          {LadderKind::kAnnihilate, mm},
                          {LadderKind::kCreate, k},
                          {LadderKind::kCreate, l}});
      if (!out.vanished) {
        m(out.state.index(), ket) += value * static_cast<double>(out.sign);
      }
    }
  }
  return m;
}

cmatrix_t assemble(const HamiltonianSpec& spec) {
  check_dense_levels(spec.num_levels);
  for (const auto& [pair, value] : spec.one_body) {
    const auto partner = spec.one_body.find({pair.second, pair.first});
    const complex_t expected =
        (partner == spec.one_body.end()) ? complex_t{0.0, 0.0}
                                         : std::conj(partner->second);
    if (std::abs(value - expected) > kAssembleHermitianTol) {
      throw std::invalid_argument(
          "one_body table is not Hermitian: H[k][l] must equal conj(H[l][k])");
    }
  }
  const std::size_t dim = fock_dim(spec.num_levels);
  cmatrix_t m = cmatrix_t::Zero(dim, dim);
  m += build_external(spec.alpha, spec.num_levels);
  m += build_diagonal(spec.beta, spec.num_levels);
  m += build_tunneling(spec.gamma, spec.num_levels);
  m += build_one_body(spec.one_body, spec.num_levels);
  m += build_two_body(spec.two_body, spec.num_levels);
  const double residual = hermiticity_residual(m);
  if (residual > kAssembleHermitianTol) {
    throw std::invalid_argument("assembled operator is not Hermitian "
                                "(residual " +
                                std::to_string(residual) + ")");
  }
  return m;
}

void to_json(nlohmann::json& j, const HamiltonianSpec& spec) {
  auto pair_table = [](const auto& table) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, value] : table) {
      nlohmann::json entry;
      entry["indices"] = {key.first, key.second};
      if constexpr (std::is_same_v<std::decay_t<decltype(value)>, double>) {
        entry["re"] = value;
        entry["im"] = 0.0;
      } else {
        entry["re"] = value.real();
        entry["im"] = value.imag();
      }
      out.push_back(entry);
    }
    return out;
  };
  j = nlohmann::json{{"J", spec.num_levels},
                     {"alpha", spec.alpha},
                     {"beta", pair_table(spec.beta)},
                     {"gamma", pair_table(spec.gamma)},
                     {"one_body", pair_table(spec.one_body)}};
  nlohmann::json two = nlohmann::json::array();
  for (const auto& [key, value] : spec.two_body) {
    two.push_back({{"indices", {key[0], key[1], key[2], key[3]}},
                   {"re", value.real()},
                   {"im", value.imag()}});
  }
  j["two_body"] = two;
}

void from_json(const nlohmann::json& j, HamiltonianSpec& spec) {
  spec = HamiltonianSpec{};
  spec.num_levels = j.at("J").get<std::size_t>();
  spec.alpha = j.at("alpha").get<std::vector<double>>();
  for (const auto& entry : j.at("beta")) {
    const auto idx = entry.at("indices").get<std::vector<std::size_t>>();
    if (idx.size() != 2) {
      throw std::invalid_argument("beta entry needs two indices");
    }
    if (entry.at("im").get<double>() != 0.0) {
      throw std::invalid_argument("beta coefficients must be real");
    }
    spec.beta[{idx[0], idx[1]}] = entry.at("re").get<double>();
  }
  auto load_complex = [](const nlohmann::json& entry) {
    return complex_t{entry.at("re").get<double>(),
                     entry.at("im").get<double>()};
  };
  for (const auto& entry : j.at("gamma")) {
    const auto idx = entry.at("indices").get<std::vector<std::size_t>>();
    if (idx.size() != 2) {
      throw std::invalid_argument("gamma entry needs two indices");
    }
    spec.gamma[{idx[0], idx[1]}] = load_complex(entry);
  }
  for (const auto& entry : j.at("one_body")) {
    const auto idx = entry.at("indices").get<std::vector<std::size_t>>();
    if (idx.size() != 2) {
      throw std::invalid_argument("one_body entry needs two indices");
    }
    spec.one_body[{idx[0], idx[1]}] = load_complex(entry);
  }
  for (const auto& entry : j.at("two_body")) {
    const auto idx = entry.at("indices").get<std::vector<std::size_t>>();
    if (idx.size() != 4) {
      throw std::invalid_argument("two_body entry needs four indices");
    }
    spec.two_body[{idx[0], idx[1], idx[2], idx[3]}] = load_complex(entry);
  }
}

}  // namespace fermifock
