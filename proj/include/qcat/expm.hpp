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

/// Dense matrix exponential by scaling and squaring over a plain Taylor
/// series. Kept free of any spectral machinery so it can serve as an
/// independent cross-check for eigenbasis constructions.
inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix is not square");
  if (!a.allFinite()) throw std::invalid_argument("expm: non-finite entry");
  const Eigen::Index d = a.rows();
  int s = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25 && s < 60) {
    norm *= 0.5;
    ++s;
  }
  const Eigen::MatrixXcd b = a / std::pow(2.0, s);
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int k = 0; k < s; ++k) result = result * result;
  return result;
}

}  // namespace qcat
