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

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qcat/canonical.hpp"
#include "qcat/catalysis.hpp"
#include "qcat/expm.hpp"
#include "qcat/hamsim.hpp"
#include "qcat/io.hpp"
#include "qcat/monotone.hpp"
#include "qcat/random.hpp"

namespace qcat {

/// One acceptance check. The detail string holds only deterministic metrics,
/// never timings, so rendered reports are byte-stable.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::string format_criterion_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%d/9] %-24s %s  ", r.index, r.name.c_str(),
                r.pass ? "PASS" : "FAIL");
  return std::string(head) + r.detail;
}

namespace acceptance {

inline double elapsed_seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline CanonicalParams random_region_triple(SplitMix64& rng) {
  const double c1 = rng.next_double() * (std::numbers::pi / 4);
  const double c2 = rng.next_double() * c1;
  const double c3 = (2.0 * rng.next_double() - 1.0) * c2;
  return {c1, c2, c3};
}

/// 200 in-region triples (boundary cases plus grid plus random fill), each
/// verified on 20 states, half of them holding references entangled with AB.
inline CriterionResult criterion_catalysis(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const double q = std::numbers::pi / 4;
  std::vector<CanonicalParams> triples = {
      {q, 0.2, 0.1},   {q, q, q},        {q, q, -q},    {0.3, 0.3, 0.1}, {0.3, 0.3, -0.2},
      {0.3, 0.2, -0.1}, {0.3, 0.2, 0.0}, {0.6, 0.1, 0.0}, {0.5, 0.25, 0.25}, {0.2, 0.2, 0.2},
  };
  for (const double c1 : {0.1, 0.25, 0.4, 0.55, 0.7}) {
    for (const double c2 : {0.05, 0.2, 0.35, 0.5, 0.65}) {
      if (c2 > c1) continue;
      for (const double f : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        triples.emplace_back(c1, c2, f * c2);
      }
    }
  }
  SplitMix64 rng(seed);
  while (triples.size() < 200) triples.push_back(random_region_triple(rng));
  triples.resize(200);

  double max_residual = 0.0;
  double min_fidelity = 1.0;
  for (const auto& p : triples) {
    const CatalysisReport rep = verify_catalysis(p, 20, rng.next_u64());
    max_residual = std::max(max_residual, rep.max_state_residual);
    min_fidelity = std::min(min_fidelity, rep.min_catalyst_fidelity);
  }
  const bool pass =
      max_residual <= 1e-12 && min_fidelity >= 1.0 - 1e-12 && elapsed_seconds(t0) <= 30.0;
  return {1, "catalysis-identity", pass,
          "max_residual=" + format_double(max_residual) +
              " min_fidelity=" + format_double(min_fidelity)};
}

/// Spectral construction against an independent Taylor matrix exponential,
/// plus the closed-form eigenphases on each Bell vector.
inline CriterionResult criterion_bell_spectrum(std::uint64_t seed) {
  SplitMix64 rng(seed);
  double expm_gap = 0.0;
  double phase_gap = 0.0;
  const cx iu(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const CanonicalParams p((2.0 * rng.next_double() - 1.0) * 2.0,
                            (2.0 * rng.next_double() - 1.0) * 2.0,
                            (2.0 * rng.next_double() - 1.0) * 2.0);
    const Eigen::Matrix4cd us = u_s(p).mat();
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    const double c[3] = {p.c1, p.c2, p.c3};
    for (int k = 1; k <= 3; ++k) h += c[k - 1] * kron(sigma(k), sigma(k));
    const Eigen::Matrix4cd viaexp = expm(-iu * h);
    expm_gap = std::max(expm_gap, (us - viaexp).cwiseAbs().maxCoeff());
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (int beta = 0; beta < 2; ++beta) {
        const BellLabel l{alpha, beta};
        const Eigen::Vector4cd b = bell_vector(l);
        const double theta = bell_eigenphase(p, l);
        phase_gap = std::max(phase_gap, (us * b - std::exp(iu * theta) * b).norm());
      }
    }
  }
  const bool pass = expm_gap <= 1e-12 && phase_gap <= 1e-12;
  return {2, "bell-spectrum", pass,
          "expm_gap=" + format_double(expm_gap) + " phase_gap=" + format_double(phase_gap)};
}

/// 1000 Haar decompositions plus the three named gates.
inline CriterionResult criterion_canonical(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(seed);
  double max_residual = 0.0;
  int region_violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const KakResult k = kak_decompose(haar_random_unitary(4, rng));
    max_residual = std::max(max_residual, k.residual);
    if (!in_weyl_chamber(k.params)) ++region_violations;
  }
  const double q = std::numbers::pi / 4;
  Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Identity();
  cnot(2, 2) = cnot(3, 3) = 0.0;
  cnot(2, 3) = cnot(3, 2) = 1.0;
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  double named_gap = 0.0;
  const auto check_named = [&](const Eigen::Matrix4cd& m, const CanonicalParams& want) {
    const KakResult k = kak_decompose(UnitaryOp(m));
    named_gap = std::max({named_gap, std::abs(k.params.c1 - want.c1),
                          std::abs(k.params.c2 - want.c2), std::abs(k.params.c3 - want.c3)});
    max_residual = std::max(max_residual, k.residual);
  };
  check_named(cnot, {q, 0.0, 0.0});
  check_named(swap, {q, q, q});
  check_named(u_s({0.3, 0.2, 0.1}).mat(), {0.3, 0.2, 0.1});
  const bool pass = max_residual <= tol::kak_residual && region_violations == 0 &&
                    named_gap <= 1e-9 && elapsed_seconds(t0) <= 60.0;
  return {3, "canonical-decomposition", pass,
          "max_residual=" + format_double(max_residual) +
              " region_violations=" + std::to_string(region_violations) +
              " named_param_gap=" + format_double(named_gap)};
}

/// Monotone value of the catalysis product on all four computational inputs.
inline CriterionResult criterion_monotone_value(std::uint64_t) {
  const double c1 = 0.3, c2 = 0.2;
  const UnitaryOp id4(Eigen::MatrixXcd::Identity(4, 4));
  const double want = std::cos(c1 + c2) * std::cos(c1 + c2);
  const Cut cut{{"A", "a"}, {"B", "b"}};
  double gap = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const PhiStates st = phi_states({c1 + c2, 0.0, 0.0}, id4, id4, i, j);
      gap = std::max(gap, std::abs(max_schmidt_prob(st.phi2, cut) - want));
    }
  }
  return {4, "monotone-value", gap <= 1e-12, "value_gap=" + format_double(gap)};
}

/// Random-local overlap floor and the simplex minimum at ten parameter points.
inline CriterionResult criterion_overlap(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const double pts[10][2] = {{0.3, 0.2},  {0.1, 0.1},  {0.2, 0.1},
                             {0.35, 0.35}, {std::numbers::pi / 8, std::numbers::pi / 8},
                             {0.25, 0.05}, {0.15, 0.1}, {0.4, 0.2},
                             {0.05, 0.05}, {0.37, 0.15}};
  double worst_margin = std::numeric_limits<double>::infinity();
  double simplex_gap = 0.0;
  double argmin_gap = 0.0;
  for (const auto& pt : pts) {
    const CanonicalParams p(pt[0], pt[1], 0.0);
    const double bound = std::cos(pt[0] + pt[1]) * std::cos(pt[0] + pt[1]);
    for (int t = 0; t < 10000; ++t) {
      const UnitaryOp x = haar_random_unitary(4, rng);
      const UnitaryOp y = haar_random_unitary(4, rng);
      const int i = static_cast<int>(rng.next_u64() & 1);
      const int j = static_cast<int>(rng.next_u64() & 1);
      worst_margin = std::min(worst_margin, overlap(p, x, y, i, j) - bound);
    }
    const SimplexMin sm = simplex_min(pt[0], pt[1]);
    simplex_gap = std::max(simplex_gap, std::abs(sm.value - bound));
    argmin_gap = std::max({argmin_gap, std::abs(sm.argmin.n00 - 0.5),
                           std::abs(sm.argmin.n01 - 0.5), sm.argmin.n10, sm.argmin.n11});
  }
  const bool pass = worst_margin >= -1e-12 && simplex_gap <= 1e-9 && argmin_gap <= 1e-4;
  return {5, "overlap-inequality", pass,
          "worst_margin=" + format_double(worst_margin) +
              " simplex_gap=" + format_double(simplex_gap) +
              " argmin_gap=" + format_double(argmin_gap)};
}

/// The four named partial-order verdicts.
inline CriterionResult criterion_verdicts(std::uint64_t) {
  struct Case {
    HamParams h, t;
    SimulationKind want;
  };
  const std::vector<Case> cases = {
      {{0.5, 0.0, 0.0}, {0.3, 0.2, 0.0}, SimulationKind::LOCC_SIMULABLE},
      {{0.3, 0.2, 0.0}, {0.5, 0.0, 0.0}, SimulationKind::CATALYTIC_SIMULABLE},
      {{0.3, 0.2, 0.1}, {0.6, 0.0, 0.0}, SimulationKind::FORBIDDEN},
      {{0.3, 0.2, 0.1}, {0.3, 0.2, -0.1}, SimulationKind::FORBIDDEN},
  };
  bool pass = true;
  std::string got;
  for (const auto& c : cases) {
    const SimulationVerdict v = classify_simulation(c.h, c.t);
    if (!got.empty()) got += ",";
    got += to_string(v.kind);
    if (v.kind != c.want) pass = false;
    if (c.want == SimulationKind::FORBIDDEN && v.c4_interval.has_value()) pass = false;
  }
  return {6, "simulation-verdicts", pass, "verdicts=" + got};
}

/// Random convex unitary mixtures stay inside the spectral interval; the
/// full two-sided Pauli twirl lands on the zero spectrum.
inline CriterionResult criterion_mixture(std::uint64_t seed) {
  SplitMix64 rng(seed);
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Index da = (rng.next_u64() & 1) ? 2 : 1;
    const Eigen::Index db = (rng.next_u64() & 1) ? 2 : 1;
    const int nterms = 1 + static_cast<int>(rng.next_u64() % 4);
    std::vector<double> w(nterms);
    double tot = 0.0;
    for (auto& x : w) {
      x = rng.next_double();
      tot += x;
    }
    std::vector<MixtureTerm> mix;
    for (int m = 0; m < nterms; ++m) {
      mix.push_back({w[m] / tot, haar_random_unitary(2 * da, rng), haar_random_unitary(2 * db, rng)});
    }
    const double c1 = rng.next_double();
    const double c2 = rng.next_double() * c1;
    const double c3 = (2.0 * rng.next_double() - 1.0) * c2;
    const MixtureSpectrum ms = mixture_spectrum_bounds(HamParams(c1, c2, c3), mix, da, db);
    if (!ms.within_bounds) ++violations;
  }
  std::vector<MixtureTerm> twirl;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      twirl.push_back({1.0 / 16.0, UnitaryOp(sigma(i)), UnitaryOp(sigma(j))});
    }
  }
  const MixtureSpectrum tw = mixture_spectrum_bounds(HamParams(0.3, 0.2, 0.1), twirl, 1, 1);
  const double twirl_max = tw.eigenvalues.cwiseAbs().maxCoeff();
  const bool pass = violations == 0 && twirl_max <= 1e-12 && tw.within_bounds;
  return {7, "mixture-bounds", pass,
          "violations=" + std::to_string(violations) +
              " twirl_max_abs_eig=" + format_double(twirl_max)};
}

/// Cross-term coefficient stays at or below 1; identity locals give 1.
inline CriterionResult criterion_h_coefficient(std::uint64_t seed) {
  SplitMix64 rng(seed);
  double max_h = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const UnitaryOp u = haar_random_unitary(4, rng);
    const UnitaryOp v = haar_random_unitary(4, rng);
    const PureState phi0 = random_state({"a", "b"}, rng);
    const int n = 1 + (t % 3);
    max_h = std::max(max_h, h_coefficient(phi0, u, v, n));
  }
  const UnitaryOp id4(Eigen::MatrixXcd::Identity(4, 4));
  double identity_gap = 0.0;
  for (int t = 0; t < 20; ++t) {
    const PureState phi0 = random_state({"a", "b"}, rng);
    identity_gap =
        std::max(identity_gap, std::abs(h_coefficient(phi0, id4, id4, 1 + (t % 3)) - 1.0));
  }
  const bool pass = max_h <= 1.0 + 1e-10 && identity_gap <= 1e-12;
  return {8, "h-coefficient-bound", pass,
          "max_h=" + format_double(max_h) + " identity_gap=" + format_double(identity_gap)};
}

}  // namespace acceptance

/// One sub-seed per criterion, all derived from a single root seed so a
/// caller can replay any criterion in isolation.
inline std::array<std::uint64_t, 8> derive_criterion_seeds(std::uint64_t seed) {
  SplitMix64 root(seed);
  std::array<std::uint64_t, 8> s{};
  for (auto& x : s) x = root.next_u64();
  return s;
}

/// Criteria 1 through 8. The ninth criterion (cross-run byte identity)
/// belongs to the callers that can observe two runs.
inline std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
  const auto s = derive_criterion_seeds(seed);
  std::vector<CriterionResult> out;
  out.push_back(acceptance::criterion_catalysis(s[0]));
  out.push_back(acceptance::criterion_bell_spectrum(s[1]));
  out.push_back(acceptance::criterion_canonical(s[2]));
  out.push_back(acceptance::criterion_monotone_value(s[3]));
  out.push_back(acceptance::criterion_overlap(s[4]));
  out.push_back(acceptance::criterion_verdicts(s[5]));
  out.push_back(acceptance::criterion_mixture(s[6]));
  out.push_back(acceptance::criterion_h_coefficient(s[7]));
  return out;
}

}  // namespace qcat
