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
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcat/canonical.hpp"
#include "qcat/expm.hpp"
#include "qcat/random.hpp"
#include "qcat/state.hpp"
#include "qcat/unitary.hpp"

namespace qcat {

/// Largest squared Schmidt coefficient across the cut. Non-increasing under
/// deterministic LOCC conversions, which is all the no-go argument needs.
inline double max_schmidt_prob(const PureState& s, const Cut& cut) {
  return schmidt_probs(s, cut).front();
}

/// True iff the conversion source -> target is certainly impossible under
/// LOCC because the monotone would have to decrease.
inline bool nielsen_forbidden(const PureState& source, const PureState& target, const Cut& cut) {
  return max_schmidt_prob(target, cut) < max_schmidt_prob(source, cut) - tol::equality;
}

/// Probability weights of a four-qubit state on the Bell basis of AB:
/// n_{alpha,beta} = squared norm of the ab component along |B_{alpha,beta}>_AB.
struct BellWeights {
  double n00 = 0.0;
  double n10 = 0.0;
  double n01 = 0.0;
  double n11 = 0.0;

  BellWeights() = default;
  BellWeights(double w00, double w10, double w01, double w11)
      : n00(w00), n10(w10), n01(w01), n11(w11) {
    for (double w : {n00, n10, n01, n11}) {
      if (!(w >= -tol::equality)) throw std::invalid_argument("BellWeights: negative weight");
    }
    if (std::abs(n00 + n10 + n01 + n11 - 1.0) > 1e-10) {
      throw std::invalid_argument("BellWeights: weights must sum to 1");
    }
  }
};

inline BellWeights bell_weights(const PureState& s) {
  const PureState t = permute_register(s, {"A", "B", "a", "b"});
  Eigen::Map<const Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      t.amps().data(), 4, 4);
  double n[2][2];
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      const Eigen::Vector4cd b = bell_vector({alpha, beta});
      n[alpha][beta] = (b.adjoint() * m).squaredNorm();
    }
  }
  return BellWeights(n[0][0], n[1][0], n[0][1], n[1][1]);
}

/// |e^{-i(c1+c2)} n00 + e^{i(c1+c2)} n01 + e^{-i(c1-c2)} n10 + e^{i(c1-c2)} n11|^2.
inline double phase_sum(double c1, double c2, const BellWeights& n) {
  const double s = c1 + c2;
  const double t = c1 - c2;
  const double re = std::cos(s) * (n.n00 + n.n01) + std::cos(t) * (n.n10 + n.n11);
  const double im = std::sin(s) * (n.n01 - n.n00) + std::sin(t) * (n.n11 - n.n10);
  return re * re + im * im;
}

namespace detail {

inline void check_overlap_region(double c1, double c2, double c3) {
  if (std::abs(c3) > tol::equality) {
    throw std::invalid_argument("overlap region: c3 must vanish");
  }
  if (!(c2 > tol::equality)) throw std::invalid_argument("overlap region: requires c2 > 0");
  if (c1 < c2 - tol::equality) throw std::invalid_argument("overlap region: requires c1 >= c2");
  if (c1 + c2 > std::numbers::pi / 4 + tol::equality) {
    throw std::invalid_argument("overlap region: requires c1 + c2 <= pi/4");
  }
}

}  // namespace detail

/// The pair of states the overlap argument compares on [A,B,a,b]:
/// product = (x_Aa x y_Bb)|i,j,0,0> and phi2 = u_s(params) applied to it.
struct PhiStates {
  PureState phi2;
  PureState product;
};

inline PhiStates phi_states(const CanonicalParams& p, const UnitaryOp& x, const UnitaryOp& y,
                            int i, int j) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
    throw std::invalid_argument("phi_states: i and j must be bits");
  }
  if (x.dim() != 4 || y.dim() != 4) {
    throw std::invalid_argument("phi_states: x and y must act on two qubits");
  }
  const Register reg{"A", "B", "a", "b"};
  const PureState start = PureState::basis(reg, (Eigen::Index{i} << 3) | (Eigen::Index{j} << 2));
  PureState product = apply_on_targets(x, {"A", "a"}, start);
  product = apply_on_targets(y, {"B", "b"}, product);
  PureState phi2 = apply_on_targets(u_s(p), {"A", "B"}, product);
  return {std::move(phi2), std::move(product)};
}

/// |<psi_i, phi_j | Phi_2>|^2. Also recomputed through the Bell-weight route;
/// the two must agree to 1e-12 or the call refuses to answer.
inline double overlap(const CanonicalParams& p, const UnitaryOp& x, const UnitaryOp& y, int i,
                      int j) {
  detail::check_overlap_region(p.c1, p.c2, p.c3);
  const PhiStates st = phi_states(p, x, y, i, j);
  const double direct = std::norm(inner(st.product, st.phi2));
  const double via_weights = phase_sum(p.c1, p.c2, bell_weights(st.product));
  if (std::abs(direct - via_weights) > tol::equality) {
    throw std::logic_error("overlap: direct and Bell-weight routes disagree");
  }
  return direct;
}

/// Minimum of phase_sum over the probability simplex: coarse grid (step 1e-2)
/// followed by pairwise-transfer descent. The objective is a convex quadratic
/// in the weights, so the local refinement is globally valid.
struct SimplexMin {
  double value = 0.0;
  BellWeights argmin;
};

inline SimplexMin simplex_min(double c1, double c2) {
  detail::check_overlap_region(c1, c2, 0.0);
  const double s = c1 + c2;
  const double t = c1 - c2;
  const double cs = std::cos(s), sn = std::sin(s), ct = std::cos(t), st_ = std::sin(t);
  const auto value_at = [&](const double w[4]) {
    const double re = cs * (w[0] + w[2]) + ct * (w[1] + w[3]);
    const double im = sn * (w[2] - w[0]) + st_ * (w[3] - w[1]);
    return re * re + im * im;
  };

  double best[4] = {1.0, 0.0, 0.0, 0.0};
  double best_v = value_at(best);
  const int g = 100;
  for (int a = 0; a <= g; ++a) {
    for (int b = 0; b <= g - a; ++b) {
      for (int c = 0; c <= g - a - b; ++c) {
        const double w[4] = {a / 100.0, b / 100.0, c / 100.0, (g - a - b - c) / 100.0};
        const double v = value_at(w);
        if (v < best_v) {
          best_v = v;
          std::copy(w, w + 4, best);
        }
      }
    }
  }
  for (double step = 1e-2; step >= 1e-9; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int from = 0; from < 4; ++from) {
        for (int to = 0; to < 4; ++to) {
          if (from == to) continue;
          const double d = std::min(step, best[from]);
          if (d <= 0.0) continue;
          double w[4];
          std::copy(best, best + 4, w);
          w[from] -= d;
          w[to] += d;
          const double v = value_at(w);
          if (v < best_v - 1e-18) {
            best_v = v;
            std::copy(w, w + 4, best);
            improved = true;
          }
        }
      }
    }
  }
  return {best_v, BellWeights(best[0], best[1], best[2], best[3])};
}

enum class EqualityForm { AB_IS_01, AB_IS_10, NOT_EQUALITY_FORM };

/// Recognizes the two product forms that saturate the overlap bound: the AB
/// factor must be |0,1> or |1,0> up to phase.
inline EqualityForm equality_classifier(const PureState& s) {
  const Eigen::MatrixXcd rho = reduced_density(s, {"A", "B"});
  if (rho(1, 1).real() >= 1.0 - 1e-8) return EqualityForm::AB_IS_01;
  if (rho(2, 2).real() >= 1.0 - 1e-8) return EqualityForm::AB_IS_10;
  return EqualityForm::NOT_EQUALITY_FORM;
}

struct NogoReport {
  double c1 = 0.0;
  double c2 = 0.0;
  long samples = 0;
  double min_over_xy_of_max_overlap = 0.0;
  double bound = 0.0;
  Eigen::Matrix4cd witness_x, witness_y;
  std::uint64_t seed = 0;
};

namespace detail {

inline Eigen::Matrix4cd hermitian_from_params(const Eigen::VectorXd& th, int off) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  int k = off;
  for (int p = 0; p < 4; ++p) h(p, p) = th(k++);
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      const cx v(th(k), th(k + 1));
      k += 2;
      h(p, q) = v;
      h(q, p) = std::conj(v);
    }
  }
  return h;
}

}  // namespace detail

/// Seeded search for local pre-processing (x, y) minimizing the worst-case
/// overlap: identity first, then Haar samples, then Nelder-Mead refinement
/// over exponential coordinates around the incumbent. The minimum found is a
/// demonstration of the bound, not a proof.
inline NogoReport nogo_search(double c1, double c2, long budget, std::uint64_t seed) {
  detail::check_overlap_region(c1, c2, 0.0);
  if (budget < 1) throw std::invalid_argument("nogo_search: budget must be >= 1");
  const CanonicalParams p(c1, c2, 0.0);
  SplitMix64 rng(seed);

  NogoReport report;
  report.c1 = c1;
  report.c2 = c2;
  report.bound = std::cos(c1 + c2) * std::cos(c1 + c2);
  report.seed = seed;
  double best = std::numeric_limits<double>::infinity();
  Eigen::Matrix4cd bx = Eigen::Matrix4cd::Identity();
  Eigen::Matrix4cd by = Eigen::Matrix4cd::Identity();
  long evals = 0;

  const auto consider = [&](const UnitaryOp& x, const UnitaryOp& y) {
    double v = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) v = std::max(v, overlap(p, x, y, i, j));
    }
    ++evals;
    if (v < best) {
      best = v;
      bx = x.mat();
      by = y.mat();
    }
    return v;
  };

  const UnitaryOp id4(Eigen::MatrixXcd::Identity(4, 4));
  consider(id4, id4);
  const long haar_budget = (budget - evals) / 2;
  for (long k = 0; k < haar_budget && evals < budget; ++k) {
    const UnitaryOp x = haar_random_unitary(4, rng);
    const UnitaryOp y = haar_random_unitary(4, rng);
    consider(x, y);
  }

  // Nelder-Mead over 32 exponential coordinates anchored at the incumbent.
  const Eigen::Matrix4cd x0 = bx, y0 = by;
  const auto pair_at = [&](const Eigen::VectorXd& th) {
    const cx iu(0.0, 1.0);
    const Eigen::MatrixXcd x = x0 * expm(iu * detail::hermitian_from_params(th, 0));
    const Eigen::MatrixXcd y = y0 * expm(iu * detail::hermitian_from_params(th, 16));
    return std::make_pair(UnitaryOp(x), UnitaryOp(y));
  };
  const int n = 32;
  if (evals + n + 1 <= budget) {
    std::vector<Eigen::VectorXd> pts;
    std::vector<double> vals;
    pts.emplace_back(Eigen::VectorXd::Zero(n));
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e(k) = 0.15;
      pts.push_back(e);
    }
    for (const auto& th : pts) {
      const auto [x, y] = pair_at(th);
      vals.push_back(consider(x, y));
    }
    while (evals < budget) {
      std::vector<int> ord(pts.size());
      std::iota(ord.begin(), ord.end(), 0);
      std::sort(ord.begin(), ord.end(), [&](int a, int b) { return vals[a] < vals[b]; });
      const int worst = ord.back(), second = ord[ord.size() - 2], bestix = ord.front();
      if (vals[worst] - vals[bestix] < 1e-12) break;
      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
      for (std::size_t q = 0; q < pts.size(); ++q) {
        if (static_cast<int>(q) != worst) centroid += pts[q];
      }
      centroid /= static_cast<double>(pts.size() - 1);
      const auto eval_at = [&](const Eigen::VectorXd& th) {
        const auto [x, y] = pair_at(th);
        return consider(x, y);
      };
      const Eigen::VectorXd refl = centroid + (centroid - pts[worst]);
      const double fr = eval_at(refl);
      if (fr < vals[bestix] && evals < budget) {
        const Eigen::VectorXd expn = centroid + 2.0 * (centroid - pts[worst]);
        const double fe = eval_at(expn);
        if (fe < fr) {
          pts[worst] = expn;
          vals[worst] = fe;
        } else {
          pts[worst] = refl;
          vals[worst] = fr;
        }
      } else if (fr < vals[second]) {
        pts[worst] = refl;
        vals[worst] = fr;
      } else if (evals < budget) {
        const Eigen::VectorXd contr = centroid + 0.5 * (pts[worst] - centroid);
        const double fc = eval_at(contr);
        if (fc < vals[worst]) {
          pts[worst] = contr;
          vals[worst] = fc;
        } else {
          for (std::size_t q = 0; q < pts.size() && evals < budget; ++q) {
            if (static_cast<int>(q) == bestix) continue;
            pts[q] = pts[bestix] + 0.5 * (pts[q] - pts[bestix]);
            vals[q] = eval_at(pts[q]);
          }
        }
      }
    }
  }

  report.samples = evals;
  report.min_over_xy_of_max_overlap = best;
  report.witness_x = bx;
  report.witness_y = by;
  return report;
}

}  // namespace qcat
