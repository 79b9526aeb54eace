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
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcat {

using cx = std::complex<double>;
using Label = std::string;
using Register = std::vector<Label>;

namespace tol {
// Constructor-level admission checks.
inline constexpr double unitarity = 1e-10;
inline constexpr double normalization = 1e-10;
// Equality assertions unless an operation states otherwise.
inline constexpr double equality = 1e-12;
// Reassembly residual bound for canonical decompositions.
inline constexpr double kak_residual = 1e-9;
// Canonical-parameter agreement for LU equivalence.
inline constexpr double params_match = 1e-8;
}  // namespace tol

/// Complex scalar that admits only finite components.
struct Complexd {
  double re = 0.0;
  double im = 0.0;

  Complexd() = default;
  Complexd(double re_, double im_) : re(re_), im(im_) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw std::invalid_argument("Complexd: components must be finite");
    }
  }
  explicit Complexd(cx z) : Complexd(z.real(), z.imag()) {}

  operator cx() const { return {re, im}; }
};

inline bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline int log2_exact(Eigen::Index n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("dimension is not a power of two");
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

}  // namespace qcat
