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

#include <cstdint>
#include <utility>

#include "qcat/canonical.hpp"
#include "qcat/random.hpp"
#include "qcat/state.hpp"
#include "qcat/unitary.hpp"

namespace qcat {

struct CatalysisReport {
  CanonicalParams params;
  long trials = 0;
  double max_state_residual = 0.0;
  double min_catalyst_fidelity = 1.0;
  std::uint64_t seed = 0;
};

/// w|i,j> = |j, i xor j> on an ordered (system, ancilla) pair.
inline UnitaryOp w_gate() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m(2 * j + (i ^ j), 2 * i + j) = 1.0;
    }
  }
  return UnitaryOp(m);
}

/// (w_Aa w_Bb)^dag (u_s(params) x 1_ab) (w_Aa w_Bb) on register [A,B,a,b].
inline UnitaryOp catalysis_map(const CanonicalParams& p) {
  const Register reg{"A", "B", "a", "b"};
  const UnitaryOp w = w_gate();
  const Eigen::MatrixXcd waa = embed_on_targets(w, {"A", "a"}, reg);
  const Eigen::MatrixXcd wbb = embed_on_targets(w, {"B", "b"}, reg);
  const Eigen::MatrixXcd ww = waa * wbb;
  const Eigen::MatrixXcd core = embed_on_targets(u_s(p), {"A", "B"}, reg);
  return UnitaryOp(ww.adjoint() * core * ww);
}

/// Label bookkeeping on the B00 ancilla sector:
/// (w x w)|B_{alpha,beta}>_AB |B_00>_ab = |B_{0,beta}>_AB |B_{not alpha,beta}>_ab.
inline std::pair<BellLabel, BellLabel> bell_relabel(int alpha, int beta) {
  const BellLabel in{alpha, beta};
  return {BellLabel{0, in.beta}, BellLabel{1 - in.alpha, in.beta}};
}

/// Samples input states and reports the worst-case deviation between the
/// conjugated circuit and e^{i c3} u_s(c1+c2, 0, 0), plus the worst fidelity
/// of the returned ancilla pair with B00. Odd trials entangle AB with two
/// reference qubits C,D (the first of them through fixed Bell pairs).
inline CatalysisReport verify_catalysis(const CanonicalParams& p, long trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_catalysis: trials must be >= 1");
  SplitMix64 rng(seed);
  const UnitaryOp cat = catalysis_map(p);
  const UnitaryOp target = u_s(CanonicalParams(p.c1 + p.c2, 0.0, 0.0));
  const cx c3_phase = std::exp(cx(0.0, p.c3));
  const PureState b00_ab = bell_state({0, 0}, {"a", "b"});

  CatalysisReport report;
  report.params = p;
  report.trials = trials;
  report.seed = seed;
  for (long t = 0; t < trials; ++t) {
    PureState input = [&] {
      if (t % 2 == 0) return tensor(random_state({"A", "B"}, rng), b00_ab);
      if (t == 1) {
        const PureState refs =
            tensor(bell_state({1, 0}, {"A", "C"}), bell_state({1, 0}, {"B", "D"}));
        return tensor(refs, b00_ab);
      }
      return tensor(random_state({"A", "B", "C", "D"}, rng), b00_ab);
    }();
    const PureState lhs = apply_on_targets(cat, {"A", "B", "a", "b"}, input);
    const PureState rhs = apply_on_targets(target, {"A", "B"}, input);
    const double residual = (lhs.amps() - c3_phase * rhs.amps()).norm();
    report.max_state_residual = std::max(report.max_state_residual, residual);
    const Eigen::MatrixXcd rho_ab = reduced_density(lhs, {"a", "b"});
    report.min_catalyst_fidelity =
        std::min(report.min_catalyst_fidelity, expectation(rho_ab, b00_ab));
  }
  return report;
}

}  // namespace qcat
