// Copyright 2026 The qcat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "qcat/state.hpp"
#include "qcat/types.hpp"
#include "qcat/unitary.hpp"

namespace qcat {

/// SplitMix64: counter-based generator with an O(1) split, so independent
/// streams can be derived from one seed without sharing state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent child stream. The parent advances by one draw.
  SplitMix64 split() { return SplitMix64(next_u64() ^ 0x6a09e667f3bcc909ULL); }

  /// Uniform on (0, 1]; never returns 0, so log() below stays finite.
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal phases folded into Q.
inline UnitaryOp haar_random_unitary(Eigen::Index dim, SplitMix64& rng) {
  if (dim < 1) throw std::invalid_argument("haar_random_unitary: dim must be positive");
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = cx(rng.next_gaussian(), rng.next_gaussian());
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const cx d = r(j, j);
    q.col(j) *= (std::abs(d) > 0.0) ? d / std::abs(d) : cx(1.0, 0.0);
  }
  return UnitaryOp(std::move(q));
}

/// Haar-random pure state on the register.
inline PureState random_state(Register reg, SplitMix64& rng) {
  const Eigen::Index d = Eigen::Index{1} << reg.size();
  Eigen::VectorXcd v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = cx(rng.next_gaussian(), rng.next_gaussian());
  v /= v.norm();
  return PureState(std::move(reg), std::move(v));
}

/// Seed-addressed conveniences; one seed, one value.
inline UnitaryOp haar_random_unitary(std::uint64_t seed, Eigen::Index dim) {
  SplitMix64 rng(seed);
  return haar_random_unitary(dim, rng);
}

inline PureState random_state(std::uint64_t seed, Register reg) {
  SplitMix64 rng(seed);
  return random_state(std::move(reg), rng);
}

}  // namespace qcat
