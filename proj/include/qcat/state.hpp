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
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcat/types.hpp"

namespace qcat {

/// Bipartition of a register into two disjoint, jointly exhaustive blocks.
struct Cut {
  Register left;
  Register right;
};

/// Pure state on a register of named qubits.
///
/// Index convention is big-endian: the first label in the register is the
/// most significant bit of the amplitude index.
class PureState {
 public:
  PureState(Register reg, Eigen::VectorXcd amps)
      : reg_(std::move(reg)), amps_(std::move(amps)) {
    if (reg_.empty()) throw std::invalid_argument("PureState: empty register");
    std::set<Label> seen;
    for (const auto& l : reg_) {
      if (l.empty()) throw std::invalid_argument("PureState: empty label");
      if (!seen.insert(l).second) {
        throw std::invalid_argument("PureState: duplicate label '" + l + "'");
      }
    }
    if (amps_.size() != (Eigen::Index{1} << reg_.size())) {
      throw std::invalid_argument("PureState: amplitude count does not match register size");
    }
    if (!amps_.allFinite()) throw std::invalid_argument("PureState: non-finite amplitude");
    if (std::abs(amps_.norm() - 1.0) > tol::normalization) {
      throw std::invalid_argument("PureState: vector is not normalized");
    }
  }

  static PureState basis(Register reg, Eigen::Index index) {
    const Eigen::Index d = Eigen::Index{1} << reg.size();
    if (index < 0 || index >= d) throw std::invalid_argument("PureState::basis: index out of range");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(index) = 1.0;
    return PureState(std::move(reg), std::move(v));
  }

  const Register& reg() const { return reg_; }
  const Eigen::VectorXcd& amps() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }
  int num_qubits() const { return static_cast<int>(reg_.size()); }

  /// Position of a label within the register. Throws if absent.
  int position_of(const Label& l) const {
    for (std::size_t k = 0; k < reg_.size(); ++k) {
      if (reg_[k] == l) return static_cast<int>(k);
    }
    throw std::invalid_argument("PureState: unknown label '" + l + "'");
  }

  bool has_label(const Label& l) const {
    return std::find(reg_.begin(), reg_.end(), l) != reg_.end();
  }

 private:
  Register reg_;
  Eigen::VectorXcd amps_;
};

/// Joint state on the concatenated register. Registers must be disjoint.
inline PureState tensor(const PureState& a, const PureState& b) {
  Register reg = a.reg();
  for (const auto& l : b.reg()) {
    if (a.has_label(l)) throw std::invalid_argument("tensor: registers share label '" + l + "'");
    reg.push_back(l);
  }
  Eigen::VectorXcd amps(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    amps.segment(i * b.dim(), b.dim()) = a.amps()(i) * b.amps();
  }
  return PureState(std::move(reg), std::move(amps));
}

/// Same state expressed on a reordered register. `order` must be a
/// permutation of the current register.
inline PureState permute_register(const PureState& s, const Register& order) {
  const int n = s.num_qubits();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("permute_register: order has wrong length");
  }
  std::vector<int> src(n);
  for (int p = 0; p < n; ++p) src[p] = s.position_of(order[p]);
  std::vector<bool> used(n, false);
  for (int p : src) {
    if (used[p]) throw std::invalid_argument("permute_register: order repeats a label");
    used[p] = true;
  }
  const Eigen::Index d = s.dim();
  Eigen::VectorXcd out(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::Index j = 0;
    for (int p = 0; p < n; ++p) {
      const Eigen::Index bit = (i >> (n - 1 - src[p])) & 1;
      j |= bit << (n - 1 - p);
    }
    out(j) = s.amps()(i);
  }
  return PureState(order, std::move(out));
}

/// Inner product <a|b>. Registers must carry the same label set; `b` is
/// aligned to `a`'s order first.
inline cx inner(const PureState& a, const PureState& b) {
  if (a.reg() == b.reg()) return a.amps().dot(b.amps());
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("inner: register mismatch");
  return a.amps().dot(permute_register(b, a.reg()).amps());
}

/// Reduced density matrix over `keep`, indexed big-endian in `keep` order.
inline Eigen::MatrixXcd reduced_density(const PureState& s, const Register& keep) {
  Register order = keep;
  for (const auto& l : s.reg()) {
    if (std::find(keep.begin(), keep.end(), l) == keep.end()) order.push_back(l);
  }
  const PureState t = permute_register(s, order);
  const Eigen::Index dk = Eigen::Index{1} << keep.size();
  const Eigen::Index dr = t.dim() / dk;
  Eigen::Map<const Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      t.amps().data(), dk, dr);
  return m * m.adjoint();
}

/// Squared Schmidt coefficients across `cut`, sorted descending. The cut
/// blocks must partition the register. Values at or below 1e-24 are dropped.
inline std::vector<double> schmidt_probs(const PureState& s, const Cut& cut) {
  Register order = cut.left;
  order.insert(order.end(), cut.right.begin(), cut.right.end());
  if (order.size() != s.reg().size()) {
    throw std::invalid_argument("schmidt_probs: cut does not partition the register");
  }
  const PureState t = permute_register(s, order);
  const Eigen::Index dl = Eigen::Index{1} << cut.left.size();
  const Eigen::Index dr = t.dim() / dl;
  Eigen::Map<const Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      t.amps().data(), dl, dr);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  std::vector<double> probs;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double p = svd.singularValues()(i) * svd.singularValues()(i);
    if (p > 1e-24) probs.push_back(p);
  }
  std::sort(probs.rbegin(), probs.rend());
  return probs;
}

/// <psi| rho |psi> for a density matrix on the same register.
inline double expectation(const Eigen::MatrixXcd& rho, const PureState& psi) {
  if (rho.rows() != psi.dim() || rho.cols() != psi.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  return (psi.amps().adjoint() * rho * psi.amps())(0).real();
}

}  // namespace qcat
