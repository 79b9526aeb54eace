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

// Draws a random two-qubit unitary, splits it into local factors around the
// canonical core, and reassembles it to show the residual.

#include <cstdlib>
#include <iostream>

#include "qcat/qcat.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = (argc > 1) ? std::strtoull(argv[1], nullptr, 10) : 42;
  const qcat::UnitaryOp u = qcat::haar_random_unitary(seed, 4);
  const qcat::KakResult k = qcat::kak_decompose(u);

  std::cout << "seed          " << seed << "\n";
  std::cout << "c1, c2, c3    " << qcat::format_double(k.params.c1) << ", "
            << qcat::format_double(k.params.c2) << ", " << qcat::format_double(k.params.c3)
            << "\n";
  std::cout << "global phase  " << qcat::format_double(k.global_phase) << "\n";
  std::cout << "residual      " << qcat::format_double(k.residual) << "\n";

  const Eigen::Matrix4cd rec = std::exp(qcat::cx(0.0, k.global_phase)) *
                               qcat::kron(k.u, k.v) * qcat::u_s(k.params).mat() *
                               qcat::kron(k.u_tilde, k.v_tilde);
  std::cout << "reassembly    " << qcat::format_double((rec - u.mat()).cwiseAbs().maxCoeff())
            << " (max abs entry gap)\n";
  std::cout << "in region     " << (qcat::in_weyl_chamber(k.params) ? "yes" : "no") << "\n";
  return 0;
}
