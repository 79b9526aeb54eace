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
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qcat/pauli.hpp"
#include "qcat/state.hpp"
#include "qcat/types.hpp"
#include "qcat/unitary.hpp"

namespace qcat {

/// Interaction-content triple of a two-qubit unitary. The canonical region
/// pi/4 >= c1 >= c2 >= |c3| is guaranteed only for decomposition outputs;
/// u_s accepts arbitrary finite triples.
struct CanonicalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  CanonicalParams() = default;
  CanonicalParams(double c1_, double c2_, double c3_) : c1(c1_), c2(c2_), c3(c3_) {
    if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
      throw std::invalid_argument("CanonicalParams: non-finite value");
    }
  }
};

/// Bell-state label; both fields are bits.
struct BellLabel {
  int alpha = 0;
  int beta = 0;

  BellLabel() = default;
  BellLabel(int a, int b) : alpha(a), beta(b) {
    if ((alpha != 0 && alpha != 1) || (beta != 0 && beta != 1)) {
      throw std::invalid_argument("BellLabel: fields must be bits");
    }
  }
};

inline bool in_weyl_chamber(const CanonicalParams& p, double t = 1e-10) {
  return p.c1 <= std::numbers::pi / 4 + t && p.c1 >= p.c2 - t && p.c2 >= std::abs(p.c3) - t;
}

/// |B_{alpha,beta}> = (|0, 1 xor alpha> + (-1)^beta |1, alpha>)/sqrt(2).
inline Eigen::Vector4cd bell_vector(BellLabel l) {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  const double s = 1.0 / std::numbers::sqrt2;
  v(1 ^ l.alpha) = s;
  v(2 + l.alpha) = (l.beta == 0) ? s : -s;
  return v;
}

inline PureState bell_state(BellLabel l, Register reg = {"A", "B"}) {
  if (reg.size() != 2) throw std::invalid_argument("bell_state: register must have two labels");
  return PureState(std::move(reg), bell_vector(l));
}

/// Eigenphase theta with u_s(params)|B_label> = e^{i theta}|B_label>.
inline double bell_eigenphase(const CanonicalParams& p, BellLabel l) {
  if (l.alpha == 0 && l.beta == 0) return -(p.c1 + p.c2 - p.c3);
  if (l.alpha == 1 && l.beta == 0) return -(p.c1 - p.c2 + p.c3);
  if (l.alpha == 0 && l.beta == 1) return p.c1 + p.c2 + p.c3;
  return p.c1 - p.c2 - p.c3;
}

/// exp(-i sum_k c_k sigma_k x sigma_k), assembled spectrally in the Bell
/// basis rather than through a matrix exponential.
inline UnitaryOp u_s(const CanonicalParams& p) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      const BellLabel l{alpha, beta};
      const Eigen::Vector4cd b = bell_vector(l);
      m += std::exp(cx(0.0, bell_eigenphase(p, l))) * (b * b.adjoint());
    }
  }
  return UnitaryOp(m);
}

/// Basis in which every product of single-qubit specials is real orthogonal
/// and u_s is diagonal: columns are Bell vectors with fixed phase factors.
inline Eigen::Matrix4cd magic_basis() {
  const cx mi{0.0, -1.0};
  Eigen::Matrix4cd b;
  b.col(0) = bell_vector({1, 0});
  b.col(1) = mi * bell_vector({1, 1});
  b.col(2) = bell_vector({0, 1});
  b.col(3) = mi * bell_vector({0, 0});
  return b;
}

/// Diagonal phases of u_s in the magic basis: column j carries e^{-i lambda_j}.
inline std::array<double, 4> magic_lambdas(const CanonicalParams& p) {
  return {p.c1 - p.c2 + p.c3, -p.c1 + p.c2 + p.c3, -(p.c1 + p.c2 + p.c3), p.c1 + p.c2 - p.c3};
}

/// Inverse of magic_lambdas; valid for any lambda with sum = 0.
inline CanonicalParams params_from_lambdas(const std::array<double, 4>& l) {
  return CanonicalParams((l[0] - l[1] - l[2] + l[3]) / 4.0, (-l[0] + l[1] - l[2] + l[3]) / 4.0,
                         (l[0] + l[1] - l[2] - l[3]) / 4.0);
}

inline double wrap_phase(double phi) {
  const double twopi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, twopi);
  if (w <= -std::numbers::pi) w += twopi;
  if (w > std::numbers::pi) w -= twopi;
  return w;
}

/// Reduction of an arbitrary triple into the canonical region, with the
/// local corrections that realize it:
/// (l_a x l_b) u_s(raw) (r_a x r_b) = e^{i phase} u_s(params).
struct WeylReduction {
  CanonicalParams params;
  Eigen::Matrix2cd l_a, l_b, r_a, r_b;
  double phase = 0.0;
};

namespace detail {

/// Single-qubit Clifford g with (g x g) u_s g-conjugation swapping
/// coordinates j and k (0-based) and fixing the third.
inline Eigen::Matrix2cd coordinate_swap_gate(int j, int k) {
  const cx i{0.0, 1.0};
  Eigen::Matrix2cd g;
  const int lo = std::min(j, k), hi = std::max(j, k);
  if (lo == 0 && hi == 1) {
    g << std::exp(-i * (std::numbers::pi / 4)), 0, 0, std::exp(i * (std::numbers::pi / 4));
  } else if (lo == 1 && hi == 2) {
    g << 1, -i, -i, 1;
    g /= std::numbers::sqrt2;
  } else {
    g << 1, 1, 1, -1;
    g /= std::numbers::sqrt2;
  }
  return g;
}

}  // namespace detail

inline WeylReduction weyl_reduce(double raw1, double raw2, double raw3) {
  const double quarter = std::numbers::pi / 4;
  std::array<double, 3> c{raw1, raw2, raw3};
  for (double v : c) {
    if (!std::isfinite(v)) throw std::invalid_argument("weyl_reduce: non-finite input");
  }
  Eigen::Matrix2cd la = identity2(), lb = identity2(), ra = identity2(), rb = identity2();
  double phi = 0.0;

  // c_k -> c_k - m pi/2 absorbs sigma_k on both qubits and a phase -m pi/2.
  const auto shift = [&](int k, long m) {
    if (m == 0) return;
    c[k] -= static_cast<double>(m) * (std::numbers::pi / 2);
    phi -= static_cast<double>(m) * (std::numbers::pi / 2);
    if (m & 1) {
      la = sigma(k + 1) * la;
      lb = sigma(k + 1) * lb;
    }
  };
  // Negating a pair (c_j, c_k) is conjugation by the remaining sigma on one
  // qubit only; no phase.
  const auto pair_flip = [&](int j, int k) {
    const int l = 3 - j - k;
    c[j] = -c[j];
    c[k] = -c[k];
    la = sigma(l + 1) * la;
    ra = ra * sigma(l + 1);
  };
  // Swapping coordinates is conjugation by g x g; no phase.
  const auto coord_swap = [&](int j, int k) {
    std::swap(c[j], c[k]);
    const Eigen::Matrix2cd g = detail::coordinate_swap_gate(j, k);
    la = g * la;
    lb = g * lb;
    ra = ra * g.adjoint();
    rb = rb * g.adjoint();
  };

  for (int k = 0; k < 3; ++k) shift(k, std::lround(c[k] / (std::numbers::pi / 2)));
  if (std::abs(c[0]) < std::abs(c[1])) coord_swap(0, 1);
  if (std::abs(c[1]) < std::abs(c[2])) coord_swap(1, 2);
  if (std::abs(c[0]) < std::abs(c[1])) coord_swap(0, 1);
  if (c[0] < 0 && c[1] < 0) {
    pair_flip(0, 1);
  } else if (c[0] < 0) {
    pair_flip(0, 2);
  } else if (c[1] < 0) {
    pair_flip(1, 2);
  }
  // On the c1 = pi/4 face both signs of c3 lie in the region; prefer the
  // lexicographically larger triple.
  if (std::abs(c[0] - quarter) <= 1e-10 && c[2] < 0) {
    shift(0, 1);
    pair_flip(0, 2);
  }

  WeylReduction out;
  out.params = CanonicalParams(c[0], c[1], c[2]);
  out.l_a = la;
  out.l_b = lb;
  out.r_a = ra;
  out.r_b = rb;
  out.phase = wrap_phase(phi);
  return out;
}

inline WeylReduction weyl_reduce(const CanonicalParams& raw) {
  return weyl_reduce(raw.c1, raw.c2, raw.c3);
}

/// Decomposition U = e^{i global_phase} (u x v) u_s(params) (u_tilde x v_tilde).
struct KakResult {
  Eigen::Matrix2cd u, v, u_tilde, v_tilde;
  CanonicalParams params;
  double global_phase = 0.0;
  double residual = 0.0;
};

namespace detail {

/// Splits g into e^{i phi} a x b with det a = det b = 1, assuming g is a
/// product up to numerical noise.
struct ProductFactors {
  double phi;
  Eigen::Matrix2cd a, b;
};

inline ProductFactors factor_two_qubit_product(const Eigen::Matrix4cd& g) {
  int br = 0, bs = 0;
  double best = -1.0;
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      const double n = g.block<2, 2>(2 * r, 2 * s).norm();
      if (n > best) {
        best = n;
        br = r;
        bs = s;
      }
    }
  }
  const Eigen::Matrix2cd blk = g.block<2, 2>(2 * br, 2 * bs);
  Eigen::Matrix2cd b = blk / std::sqrt(blk.determinant());
  Eigen::Matrix2cd a;
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      a(r, s) = 0.5 * (b.adjoint() * g.block<2, 2>(2 * r, 2 * s)).trace();
    }
  }
  const double phi = 0.5 * std::arg(a.determinant());
  a *= std::exp(cx(0.0, -phi));
  return {phi, a, b};
}

/// Real orthogonal V with V^T re V and V^T im V both diagonal, for commuting
/// symmetric re, im. Eigenvalues of re within ctol are treated as one block.
inline Eigen::Matrix4d simultaneous_diagonalizer(const Eigen::Matrix4d& re,
                                                 const Eigen::Matrix4d& im, double ctol) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(re);
  Eigen::Matrix4d v = es.eigenvectors();
  const Eigen::Vector4d w = es.eigenvalues();
  int start = 0;
  for (int i = 1; i <= 4; ++i) {
    if (i == 4 || w(i) - w(i - 1) > ctol) {
      const int sz = i - start;
      if (sz > 1) {
        const Eigen::MatrixXd blockv = v.block(0, start, 4, sz);
        Eigen::MatrixXd s = blockv.transpose() * im * blockv;
        s = 0.5 * (s + s.transpose().eval());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(s);
        v.block(0, start, 4, sz) = blockv * es2.eigenvectors();
      }
      start = i;
    }
  }
  return v;
}

}  // namespace detail

inline KakResult kak_decompose(const UnitaryOp& uop) {
  if (uop.dim() != 4) {
    throw std::invalid_argument("kak_decompose: operator must act on two qubits");
  }
  const Eigen::Matrix4cd u = uop.mat();
  const cx alpha = std::pow(u.determinant(), 0.25);
  const Eigen::Matrix4cd su = u / alpha;
  const Eigen::Matrix4cd b = magic_basis();
  const Eigen::Matrix4cd up = b.adjoint() * su * b;
  Eigen::Matrix4cd m2 = up.transpose() * up;
  m2 = 0.5 * (m2 + m2.transpose().eval());

  KakResult result;
  double best_exact = std::numeric_limits<double>::infinity();
  // The clustering tolerance is 1e-8 by design; the alternatives only rescue
  // spectra that straddle that gap.
  for (const double ctol : {1e-8, 1e-11, 1e-5}) {
    Eigen::Matrix4d p = detail::simultaneous_diagonalizer(m2.real(), m2.imag(), ctol);
    if (p.determinant() < 0) p.col(3) *= -1.0;
    const Eigen::Matrix4cd pc = p.cast<cx>();
    const Eigen::Matrix4cd d = pc.transpose() * m2 * pc;
    std::array<double, 4> lam{};
    for (int j = 0; j < 3; ++j) lam[j] = -0.5 * std::arg(d(j, j));
    lam[3] = -(lam[0] + lam[1] + lam[2]);
    Eigen::Vector4cd aphase;
    for (int j = 0; j < 4; ++j) aphase(j) = std::exp(cx(0.0, lam[j]));
    const Eigen::Matrix4cd k2 = pc.transpose();
    const Eigen::Matrix4cd k1 = up * pc * aphase.asDiagonal();
    const auto lf = detail::factor_two_qubit_product(b * k1 * b.adjoint());
    const auto rf = detail::factor_two_qubit_product(b * k2 * b.adjoint());
    const WeylReduction wr = weyl_reduce(params_from_lambdas(lam));

    KakResult cand;
    cand.params = wr.params;
    cand.u = lf.a * wr.l_a.adjoint();
    cand.v = lf.b * wr.l_b.adjoint();
    cand.u_tilde = wr.r_a.adjoint() * rf.a;
    cand.v_tilde = wr.r_b.adjoint() * rf.b;
    cand.global_phase = wrap_phase(std::arg(alpha) + lf.phi + rf.phi + wr.phase);
    const Eigen::Matrix4cd rec =
        kron(cand.u, cand.v) * u_s(cand.params).mat() * kron(cand.u_tilde, cand.v_tilde);
    cand.residual = dist_up_to_global_phase(u, rec);
    const double exact =
        (u - std::exp(cx(0.0, cand.global_phase)) * rec).cwiseAbs().maxCoeff();
    if (exact < best_exact) {
      best_exact = exact;
      result = cand;
    }
    if (best_exact <= 1e-11) break;
  }
  return result;
}

/// Two-qubit unitaries are interchangeable under local unitaries exactly
/// when their canonical triples agree.
inline bool lu_equivalent(const UnitaryOp& u, const UnitaryOp& v) {
  const KakResult ku = kak_decompose(u);
  const KakResult kv = kak_decompose(v);
  return std::abs(ku.params.c1 - kv.params.c1) <= tol::params_match &&
         std::abs(ku.params.c2 - kv.params.c2) <= tol::params_match &&
         std::abs(ku.params.c3 - kv.params.c3) <= tol::params_match;
}

}  // namespace qcat
