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
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcat/state.hpp"
#include "qcat/types.hpp"

namespace qcat {

/// Unitary on k qubits, dimension 2^k. Admission requires finiteness and
/// unitarity within tol::unitarity in the Frobenius norm.
class UnitaryOp {
 public:
  explicit UnitaryOp(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("UnitaryOp: matrix is not square");
    if (!is_power_of_two(m_.rows())) {
      throw std::invalid_argument("UnitaryOp: dimension is not a power of two");
    }
    if (!m_.allFinite()) throw std::invalid_argument("UnitaryOp: non-finite entry");
    const Eigen::MatrixXcd res =
        m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
    if (res.norm() > tol::unitarity) {
      throw std::invalid_argument("UnitaryOp: matrix is not unitary");
    }
  }

  const Eigen::MatrixXcd& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  int num_qubits() const { return log2_exact(m_.rows()); }

 private:
  Eigen::MatrixXcd m_;
};

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline UnitaryOp tensor_product(const UnitaryOp& a, const UnitaryOp& b) {
  return UnitaryOp(kron(a.mat(), b.mat()));
}

/// Applies `u` to the `targets` sub-register of `s`, identity elsewhere.
/// Target order fixes the big-endian bit order seen by `u`.
inline PureState apply_on_targets(const UnitaryOp& u, const Register& targets, const PureState& s) {
  const int t = static_cast<int>(targets.size());
  if (u.num_qubits() != t) throw std::invalid_argument("apply_on_targets: arity mismatch");
  const int n = s.num_qubits();
  std::vector<int> shift(t);
  std::vector<bool> is_target(n, false);
  for (int k = 0; k < t; ++k) {
    const int p = s.position_of(targets[k]);
    if (is_target[p]) throw std::invalid_argument("apply_on_targets: duplicate target");
    is_target[p] = true;
    shift[k] = n - 1 - p;
  }
  std::vector<int> free_shift;
  for (int p = 0; p < n; ++p) {
    if (!is_target[p]) free_shift.push_back(n - 1 - p);
  }
  const Eigen::Index dt = Eigen::Index{1} << t;
  Eigen::VectorXcd out(s.dim());
  Eigen::VectorXcd block(dt);
  const Eigen::Index free_count = Eigen::Index{1} << free_shift.size();
  for (Eigen::Index r = 0; r < free_count; ++r) {
    Eigen::Index base = 0;
    for (std::size_t q = 0; q < free_shift.size(); ++q) {
      base |= ((r >> (free_shift.size() - 1 - q)) & 1) << free_shift[q];
    }
    std::vector<Eigen::Index> idx(dt);
    for (Eigen::Index m = 0; m < dt; ++m) {
      Eigen::Index i = base;
      for (int k = 0; k < t; ++k) i |= ((m >> (t - 1 - k)) & 1) << shift[k];
      idx[m] = i;
      block(m) = s.amps()(i);
    }
    block = u.mat() * block;
    for (Eigen::Index m = 0; m < dt; ++m) out(idx[m]) = block(m);
  }
  return PureState(s.reg(), std::move(out));
}

/// Full-register matrix acting as `u` on `targets` and identity elsewhere.
inline Eigen::MatrixXcd embed_on_targets(const UnitaryOp& u, const Register& targets,
                                         const Register& reg) {
  const Eigen::Index d = Eigen::Index{1} << reg.size();
  Eigen::MatrixXcd out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const PureState col = apply_on_targets(u, targets, PureState::basis(reg, j));
    out.col(j) = col.amps();
  }
  return out;
}

/// Frobenius distance between U and V minimized over a global phase,
/// min_phi ||U - e^{i phi} V||_F, attained at phi = -arg(tr(U^dag V)).
/// Evaluated as the norm of the phase-aligned difference; the closed form
/// sqrt(2d - 2|tr|) cancels catastrophically near zero.
inline double dist_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw std::invalid_argument("dist_up_to_global_phase: shape mismatch");
  }
  const cx t = (u.adjoint() * v).trace();
  const cx phase = (std::abs(t) > 0.0) ? std::conj(t) / std::abs(t) : cx(1.0, 0.0);
  return (u - phase * v).norm();
}

}  // namespace qcat
