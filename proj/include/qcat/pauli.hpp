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

#include <stdexcept>

#include "qcat/types.hpp"

namespace qcat {

/// Pauli index convention: 1 = X, 2 = Y, 3 = Z, 4 = identity.
/// tr(sigma(j).adjoint() * sigma(k)) == 2 * delta_jk for j,k in 1..4.
inline Eigen::Matrix2cd sigma(int k) {
  const cx i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (k) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -i, i, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    case 4:
      m << 1, 0, 0, 1;
      break;
    default:
      throw std::invalid_argument("sigma: index must be in 1..4");
  }
  return m;
}

inline Eigen::Matrix2cd pauli_x() { return sigma(1); }
inline Eigen::Matrix2cd pauli_y() { return sigma(2); }
inline Eigen::Matrix2cd pauli_z() { return sigma(3); }
inline Eigen::Matrix2cd identity2() { return sigma(4); }

}  // namespace qcat
