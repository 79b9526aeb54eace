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
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcat/pauli.hpp"
#include "qcat/state.hpp"
#include "qcat/types.hpp"
#include "qcat/unitary.hpp"

namespace qcat {

namespace detail {

inline void check_normal_form(double c1, double c2, double c3) {
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
    throw std::invalid_argument("HamParams: non-finite coefficient");
  }
  if (c1 < c2 - 1e-10 || c2 < std::abs(c3) - 1e-10) {
    throw std::invalid_argument(
        "HamParams: coefficients must satisfy c1 >= c2 >= |c3|; "
        "pre-reduce with the canonical symmetry moves");
  }
}

}  // namespace detail

/// Interaction coefficients in normal form: c1 >= c2 >= |c3| within 1e-10.
struct HamParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  HamParams() = default;
  HamParams(double c1_, double c2_, double c3_) : c1(c1_), c2(c2_), c3(c3_) {
    detail::check_normal_form(c1, c2, c3);
  }
};

/// Normal-form coefficients extended by the global constant c4.
struct ExtHamParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;

  ExtHamParams() = default;
  ExtHamParams(double c1_, double c2_, double c3_, double c4_)
      : c1(c1_), c2(c2_), c3(c3_), c4(c4_) {
    detail::check_normal_form(c1, c2, c3);
    if (!std::isfinite(c4)) throw std::invalid_argument("ExtHamParams: non-finite constant");
  }
};

struct LambdaSpectrum {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double l4 = 0.0;
};

/// sum_k c_k sigma_k x sigma_k (+ c4), as a dense Hermitian matrix.
inline Eigen::Matrix4cd ham_matrix(const ExtHamParams& h) {
  Eigen::Matrix4cd m = h.c4 * Eigen::Matrix4cd::Identity();
  const double c[3] = {h.c1, h.c2, h.c3};
  for (int k = 1; k <= 3; ++k) m += c[k - 1] * kron(sigma(k), sigma(k));
  return m;
}

inline Eigen::Matrix4cd ham_matrix(const HamParams& h) {
  return ham_matrix(ExtHamParams(h.c1, h.c2, h.c3, 0.0));
}

/// The four eigenvalues, decreasing under the normal-form constraint.
inline LambdaSpectrum lambda_spectrum(const ExtHamParams& h) {
  return {h.c1 + h.c2 - h.c3 + h.c4, h.c1 - h.c2 + h.c3 + h.c4, -h.c1 + h.c2 + h.c3 + h.c4,
          -h.c1 - h.c2 - h.c3 + h.c4};
}

inline LambdaSpectrum lambda_spectrum(const HamParams& h) {
  return lambda_spectrum(ExtHamParams(h.c1, h.c2, h.c3, 0.0));
}

namespace detail {

inline bool ge(double a, double b) { return a >= b - tol::equality; }

}  // namespace detail

/// Infinitesimal-timestep simulability of t by h under local operations:
/// three inequalities between the coefficient sums. The third compares the
/// full sums of both sides (corrected-reading convention; see the docs).
inline bool locc_simulable(const HamParams& h, const HamParams& t) {
  return detail::ge(h.c1 + h.c2 - h.c3, t.c1 + t.c2 - t.c3) && detail::ge(h.c1, t.c1) &&
         detail::ge(h.c1 + h.c2 + h.c3, t.c1 + t.c2 + t.c3);
}

/// The interaction reachable from h by one catalysis step.
inline HamParams catalytic_target(const HamParams& h) {
  return HamParams(h.c1 + h.c2, 0.0, 0.0);
}

/// Values of the global constant c4 compatible with the catalytic-local
/// necessary conditions: an interval, or nothing when the conditions are
/// contradictory. The magnitude budget |c4| <= sum|c_k| - sum|t_k| is
/// checked at the point of the interval closest to zero and at both ends.
inline std::optional<std::pair<double, double>> catlu_feasible_c4(const HamParams& h,
                                                                  const HamParams& t) {
  const double slack = tol::equality;
  const double hi = (h.c1 + h.c2 - h.c3) - (t.c1 + t.c2 - t.c3);
  const double lo = (t.c1 + t.c2 + t.c3) - (h.c1 + h.c2 + h.c3);
  if (lo > hi + slack) return std::nullopt;
  double clo = lo, chi = hi;
  if (clo > chi) clo = chi = 0.5 * (lo + hi);
  const double m = (std::abs(h.c1) + std::abs(h.c2) + std::abs(h.c3)) -
                   (std::abs(t.c1) + std::abs(t.c2) + std::abs(t.c3));
  const double nearest = std::clamp(0.0, clo, chi);
  const bool ok = std::abs(nearest) <= m + slack || std::abs(clo) <= m + slack ||
                  std::abs(chi) <= m + slack;
  if (!ok) return std::nullopt;
  double rlo = std::max(clo, -m), rhi = std::min(chi, m);
  if (rlo > rhi) rlo = rhi = 0.5 * (rlo + rhi);
  return std::make_pair(rlo, rhi);
}

enum class SimulationKind { LOCC_SIMULABLE, CATALYTIC_SIMULABLE, FORBIDDEN, UNDECIDED };

inline const char* to_string(SimulationKind k) {
  switch (k) {
    case SimulationKind::LOCC_SIMULABLE:
      return "LOCC_SIMULABLE";
    case SimulationKind::CATALYTIC_SIMULABLE:
      return "CATALYTIC_SIMULABLE";
    case SimulationKind::FORBIDDEN:
      return "FORBIDDEN";
    default:
      return "UNDECIDED";
  }
}

struct SimulationVerdict {
  SimulationKind kind = SimulationKind::UNDECIDED;
  std::string witness;
  std::optional<std::pair<double, double>> c4_interval;
};

/// Decision ladder: direct local simulation, then the one-step catalytic
/// route, then the necessary-condition feasibility check. A nonempty
/// feasibility interval alone proves nothing, hence UNDECIDED.
inline SimulationVerdict classify_simulation(const HamParams& h, const HamParams& t) {
  if (locc_simulable(h, t)) return {SimulationKind::LOCC_SIMULABLE, "locc-conditions-hold", {}};
  if (locc_simulable(catalytic_target(h), t)) {
    return {SimulationKind::CATALYTIC_SIMULABLE, "catalytic-route", {}};
  }
  const auto interval = catlu_feasible_c4(h, t);
  if (!interval) return {SimulationKind::FORBIDDEN, "empty-c4-interval", std::nullopt};
  return {SimulationKind::UNDECIDED, "c4-interval-nonempty", interval};
}

struct MixtureTerm {
  double p;
  UnitaryOp u;
  UnitaryOp v;
};

struct MixtureSpectrum {
  bool within_bounds = false;
  Eigen::VectorXd eigenvalues;
  double lower = 0.0;
  double upper = 0.0;
};

/// Spectrum of sum_m p_m (u_m x v_m)^dag (H x 1)(u_m x v_m) with u_m on the
/// A side extended by an ancilla of dimension dim_a, v_m likewise. All
/// eigenvalues must stay inside the spectral interval of H.
inline MixtureSpectrum mixture_spectrum_bounds(const HamParams& h,
                                               const std::vector<MixtureTerm>& mixture,
                                               Eigen::Index dim_a, Eigen::Index dim_b) {
  if (mixture.empty()) throw std::invalid_argument("mixture_spectrum_bounds: empty mixture");
  if (!is_power_of_two(dim_a) || !is_power_of_two(dim_b)) {
    throw std::invalid_argument("mixture_spectrum_bounds: ancilla dims must be powers of two");
  }
  double psum = 0.0;
  for (const auto& term : mixture) {
    if (!(term.p > 0.0)) throw std::invalid_argument("mixture_spectrum_bounds: weights must be positive");
    if (term.u.dim() != 2 * dim_a || term.v.dim() != 2 * dim_b) {
      throw std::invalid_argument("mixture_spectrum_bounds: term dimension mismatch");
    }
    psum += term.p;
  }
  if (std::abs(psum - 1.0) > 1e-10) {
    throw std::invalid_argument("mixture_spectrum_bounds: weights must sum to 1");
  }

  // Register order [A, a.., B, b..], so H embeds as a plain Kronecker chain.
  const Eigen::MatrixXcd ia = Eigen::MatrixXcd::Identity(dim_a, dim_a);
  const Eigen::MatrixXcd ib = Eigen::MatrixXcd::Identity(dim_b, dim_b);
  Eigen::MatrixXcd hemb = Eigen::MatrixXcd::Zero(4 * dim_a * dim_b, 4 * dim_a * dim_b);
  const double c[3] = {h.c1, h.c2, h.c3};
  for (int k = 1; k <= 3; ++k) {
    hemb += c[k - 1] * kron(kron(sigma(k), ia), kron(sigma(k), ib));
  }
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(hemb.rows(), hemb.cols());
  for (const auto& term : mixture) {
    const Eigen::MatrixXcd uv = kron(term.u.mat(), term.v.mat());
    acc += term.p * (uv.adjoint() * hemb * uv);
  }
  acc = 0.5 * (acc + acc.adjoint().eval());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(acc);
  const LambdaSpectrum lam = lambda_spectrum(h);
  MixtureSpectrum out;
  out.eigenvalues = es.eigenvalues();
  out.lower = lam.l4 - 1e-10;
  out.upper = lam.l1 + 1e-10;
  out.within_bounds = out.eigenvalues.minCoeff() >= out.lower && out.eigenvalues.maxCoeff() <= out.upper;
  return out;
}

namespace detail {

/// Partial trace over the leading qubit of an operator on (qubit x ancilla).
inline Eigen::MatrixXcd trace_out_first_qubit(const Eigen::MatrixXcd& m, Eigen::Index d) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  out = m.topLeftCorner(d, d) + m.bottomRightCorner(d, d);
  return out;
}

}  // namespace detail

/// Interference coefficient of the second-order cross terms:
/// (1/4) sum_{k=1..4} |<phi0| X_{k,n} x Y_{k,n} |phi0>| with
/// X_{k,n} = tr_A[sigma_k u^dag sigma_n u] and Y analogous on the B side.
/// The inner Pauli index equals the summed outer index n (corrected-reading
/// convention; see the docs). Bounded by 1 via Cauchy-Schwarz.
inline double h_coefficient(const PureState& phi0, const UnitaryOp& u, const UnitaryOp& v,
                            int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("h_coefficient: n must be in 1..3");
  const Eigen::Index da = u.dim() / 2;
  const Eigen::Index db = v.dim() / 2;
  if (phi0.dim() != da * db) {
    throw std::invalid_argument("h_coefficient: state dimension must match the ancilla pair");
  }
  const Eigen::MatrixXcd ia = Eigen::MatrixXcd::Identity(da, da);
  const Eigen::MatrixXcd ib = Eigen::MatrixXcd::Identity(db, db);
  const Eigen::MatrixXcd un = u.mat().adjoint() * kron(sigma(n), ia) * u.mat();
  const Eigen::MatrixXcd vn = v.mat().adjoint() * kron(sigma(n), ib) * v.mat();
  double acc = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const Eigen::MatrixXcd x = detail::trace_out_first_qubit(kron(sigma(k), ia) * un, da);
    const Eigen::MatrixXcd y = detail::trace_out_first_qubit(kron(sigma(k), ib) * vn, db);
    const cx val = (phi0.amps().adjoint() * kron(x, y) * phi0.amps())(0);
    acc += std::abs(val);
  }
  return acc / 4.0;
}

}  // namespace qcat
