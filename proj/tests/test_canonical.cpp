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

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "helpers.hpp"
#include "qcat/qcat.hpp"

using namespace qcat;
using qcat_tests::max_abs_diff;

namespace {

constexpr double kQuarter = std::numbers::pi / 4;

Eigen::Matrix4cd reassemble(const WeylReduction& w, const CanonicalParams& raw) {
  return kron(w.l_a, w.l_b) * u_s(raw).mat() * kron(w.r_a, w.r_b);
}

Eigen::Matrix4cd reassemble(const KakResult& k) {
  return std::exp(cx(0.0, k.global_phase)) * kron(k.u, k.v) * u_s(k.params).mat() *
         kron(k.u_tilde, k.v_tilde);
}

}  // namespace

TEST_CASE("bell vectors have the stated amplitudes and are orthonormal") {
  const double s = 1.0 / std::numbers::sqrt2;
  const Eigen::Vector4cd b00 = bell_vector({0, 0});
  REQUIRE(std::abs(b00(1) - cx(s, 0.0)) < 1e-15);
  REQUIRE(std::abs(b00(2) - cx(s, 0.0)) < 1e-15);
  const Eigen::Vector4cd b10 = bell_vector({1, 0});
  REQUIRE(std::abs(b10(0) - cx(s, 0.0)) < 1e-15);
  REQUIRE(std::abs(b10(3) - cx(s, 0.0)) < 1e-15);
  const Eigen::Vector4cd b01 = bell_vector({0, 1});
  REQUIRE(std::abs(b01(1) - cx(s, 0.0)) < 1e-15);
  REQUIRE(std::abs(b01(2) + cx(s, 0.0)) < 1e-15);
  const Eigen::Vector4cd b11 = bell_vector({1, 1});
  REQUIRE(std::abs(b11(0) - cx(s, 0.0)) < 1e-15);
  REQUIRE(std::abs(b11(3) + cx(s, 0.0)) < 1e-15);

  Eigen::Matrix4cd gram;
  const std::array<BellLabel, 4> labels{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      gram(r, c) = bell_vector(labels[r]).dot(bell_vector(labels[c]));
    }
  }
  REQUIRE(max_abs_diff(gram, Eigen::Matrix4cd::Identity()) < 1e-15);

  REQUIRE_THROWS_AS(BellLabel(2, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(bell_state({0, 0}, {"A", "B", "C"}), std::invalid_argument);
}

TEST_CASE("canonical core reduces to identity and swap at the corners") {
  REQUIRE(max_abs_diff(u_s({0.0, 0.0, 0.0}).mat(), Eigen::Matrix4cd::Identity()) < 1e-14);
  const Eigen::Matrix4cd want =
      std::exp(cx(0.0, -kQuarter)) * qcat_tests::swap_matrix();
  REQUIRE(max_abs_diff(u_s({kQuarter, kQuarter, kQuarter}).mat(), want) < 1e-14);
}

TEST_CASE("bell eigenphases take the closed-form values") {
  const CanonicalParams p{0.3, 0.2, 0.1};
  REQUIRE(bell_eigenphase(p, {0, 0}) == Catch::Approx(-0.4).margin(1e-15));
  REQUIRE(bell_eigenphase(p, {1, 0}) == Catch::Approx(-0.2).margin(1e-15));
  REQUIRE(bell_eigenphase(p, {0, 1}) == Catch::Approx(0.6).margin(1e-15));
  REQUIRE(bell_eigenphase(p, {1, 1}) == Catch::Approx(0.0).margin(1e-15));

  // Single-coordinate core: the phase depends only on the parity bit.
  const double c = 0.37;
  for (int alpha = 0; alpha < 2; ++alpha) {
    REQUIRE(bell_eigenphase({c, 0.0, 0.0}, {alpha, 0}) == Catch::Approx(-c).margin(1e-15));
    REQUIRE(bell_eigenphase({c, 0.0, 0.0}, {alpha, 1}) == Catch::Approx(c).margin(1e-15));
  }

  const UnitaryOp us = u_s(p);
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      const Eigen::Vector4cd b = bell_vector({alpha, beta});
      const cx phase = std::exp(cx(0.0, bell_eigenphase(p, {alpha, beta})));
      REQUIRE((us.mat() * b - phase * b).norm() < 1e-14);
    }
  }
}

TEST_CASE("canonical cores compose additively in the parameters") {
  const CanonicalParams a{0.3, 0.2, 0.1};
  const CanonicalParams b{0.25, -0.4, 0.7};
  const Eigen::Matrix4cd lhs = u_s(a).mat() * u_s(b).mat();
  const Eigen::Matrix4cd rhs = u_s({a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3}).mat();
  REQUIRE(max_abs_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("spectral construction of the core matches the matrix exponential") {
  SplitMix64 rng(101);
  const cx iu(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const CanonicalParams p((2.0 * rng.next_double() - 1.0) * 3.0,
                            (2.0 * rng.next_double() - 1.0) * 3.0,
                            (2.0 * rng.next_double() - 1.0) * 3.0);
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    const double c[3] = {p.c1, p.c2, p.c3};
    for (int k = 1; k <= 3; ++k) h += c[k - 1] * kron(sigma(k), sigma(k));
    REQUIRE(max_abs_diff(u_s(p).mat(), expm(-iu * h)) < 1e-12);
  }
}

TEST_CASE("magic basis diagonalizes the core with the stated phases") {
  const Eigen::Matrix4cd b = magic_basis();
  REQUIRE(max_abs_diff(b.adjoint() * b, Eigen::Matrix4cd::Identity()) < 1e-14);

  SplitMix64 rng(103);
  for (int t = 0; t < 20; ++t) {
    const CanonicalParams p((2.0 * rng.next_double() - 1.0) * 2.0,
                            (2.0 * rng.next_double() - 1.0) * 2.0,
                            (2.0 * rng.next_double() - 1.0) * 2.0);
    const Eigen::Matrix4cd d = b.adjoint() * u_s(p).mat() * b;
    const std::array<double, 4> lam = magic_lambdas(p);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const cx want = (r == c) ? std::exp(cx(0.0, -lam[r])) : cx(0.0, 0.0);
        REQUIRE(std::abs(d(r, c) - want) < 1e-13);
      }
    }
    const CanonicalParams back = params_from_lambdas(lam);
    REQUIRE(back.c1 == Catch::Approx(p.c1).margin(1e-13));
    REQUIRE(back.c2 == Catch::Approx(p.c2).margin(1e-13));
    REQUIRE(back.c3 == Catch::Approx(p.c3).margin(1e-13));
  }
}

TEST_CASE("region predicate accepts the closure and rejects the outside") {
  REQUIRE(in_weyl_chamber({0.3, 0.2, 0.1}));
  REQUIRE(in_weyl_chamber({0.3, 0.2, -0.2}));
  REQUIRE(in_weyl_chamber({kQuarter, kQuarter, kQuarter}));
  REQUIRE(in_weyl_chamber({0.0, 0.0, 0.0}));
  REQUIRE_FALSE(in_weyl_chamber({0.9, 0.2, 0.1}));
  REQUIRE_FALSE(in_weyl_chamber({0.3, 0.4, 0.1}));
  REQUIRE_FALSE(in_weyl_chamber({0.3, 0.2, 0.25}));
  REQUIRE_FALSE(in_weyl_chamber({0.3, 0.2, -0.25}));
}

TEST_CASE("phase wrapping lands in the half-open interval") {
  const double pi = std::numbers::pi;
  REQUIRE(wrap_phase(0.0) == 0.0);
  REQUIRE(wrap_phase(pi) == Catch::Approx(pi).margin(1e-15));
  REQUIRE(wrap_phase(-pi) == Catch::Approx(pi).margin(1e-15));
  REQUIRE(wrap_phase(2.0 * pi) == Catch::Approx(0.0).margin(1e-15));
  REQUIRE(wrap_phase(3.0 * pi) == Catch::Approx(pi).margin(1e-12));
  REQUIRE(wrap_phase(-1.5 * pi) == Catch::Approx(0.5 * pi).margin(1e-12));
}

TEST_CASE("region reduction is the identity on interior triples") {
  const WeylReduction w = weyl_reduce(0.3, 0.2, 0.1);
  REQUIRE(w.params.c1 == Catch::Approx(0.3).margin(1e-15));
  REQUIRE(w.params.c2 == Catch::Approx(0.2).margin(1e-15));
  REQUIRE(w.params.c3 == Catch::Approx(0.1).margin(1e-15));
  REQUIRE(max_abs_diff(w.l_a, identity2()) == 0.0);
  REQUIRE(max_abs_diff(w.l_b, identity2()) == 0.0);
  REQUIRE(max_abs_diff(w.r_a, identity2()) == 0.0);
  REQUIRE(max_abs_diff(w.r_b, identity2()) == 0.0);
  REQUIRE(w.phase == 0.0);
}

TEST_CASE("region reduction sorts and sign-fixes with valid corrections") {
  {
    const WeylReduction w = weyl_reduce(0.1, 0.3, 0.2);
    REQUIRE(w.params.c1 == Catch::Approx(0.3).margin(1e-12));
    REQUIRE(w.params.c2 == Catch::Approx(0.2).margin(1e-12));
    REQUIRE(w.params.c3 == Catch::Approx(0.1).margin(1e-12));
    REQUIRE(max_abs_diff(reassemble(w, {0.1, 0.3, 0.2}),
                         std::exp(cx(0.0, w.phase)) * u_s(w.params).mat()) < 1e-10);
  }
  {
    const WeylReduction w = weyl_reduce(0.3, -0.2, 0.1);
    REQUIRE(w.params.c1 == Catch::Approx(0.3).margin(1e-12));
    REQUIRE(w.params.c2 == Catch::Approx(0.2).margin(1e-12));
    REQUIRE(w.params.c3 == Catch::Approx(-0.1).margin(1e-12));
    REQUIRE(max_abs_diff(reassemble(w, {0.3, -0.2, 0.1}),
                         std::exp(cx(0.0, w.phase)) * u_s(w.params).mat()) < 1e-10);
  }
  {
    // Half-period shift: the raw coordinate exceeds the cell.
    const CanonicalParams raw{std::numbers::pi / 2 + 0.3, 0.2, 0.1};
    const WeylReduction w = weyl_reduce(raw);
    REQUIRE(w.params.c1 == Catch::Approx(0.3).margin(1e-12));
    REQUIRE(w.params.c2 == Catch::Approx(0.2).margin(1e-12));
    REQUIRE(w.params.c3 == Catch::Approx(0.1).margin(1e-12));
    REQUIRE(max_abs_diff(reassemble(w, raw),
                         std::exp(cx(0.0, w.phase)) * u_s(w.params).mat()) < 1e-10);
  }
  {
    // On the face c1 = pi/4 the sign of c3 is a gauge choice; the positive
    // representative wins.
    const CanonicalParams raw{kQuarter, 0.1, 0.05};
    const WeylReduction w = weyl_reduce(raw);
    REQUIRE(w.params.c1 == Catch::Approx(kQuarter).margin(1e-12));
    REQUIRE(w.params.c2 == Catch::Approx(0.1).margin(1e-12));
    REQUIRE(w.params.c3 == Catch::Approx(0.05).margin(1e-12));
    REQUIRE(max_abs_diff(reassemble(w, raw),
                         std::exp(cx(0.0, w.phase)) * u_s(w.params).mat()) < 1e-10);
  }
  REQUIRE_THROWS_AS(weyl_reduce(std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("region reduction handles random raw triples") {
  SplitMix64 rng(107);
  for (int t = 0; t < 200; ++t) {
    const CanonicalParams raw((2.0 * rng.next_double() - 1.0) * 5.0,
                              (2.0 * rng.next_double() - 1.0) * 5.0,
                              (2.0 * rng.next_double() - 1.0) * 5.0);
    const WeylReduction w = weyl_reduce(raw);
    REQUIRE(in_weyl_chamber(w.params));
    REQUIRE(max_abs_diff(reassemble(w, raw),
                         std::exp(cx(0.0, w.phase)) * u_s(w.params).mat()) < 1e-10);
  }
}

TEST_CASE("decomposition recovers the named gates") {
  {
    const KakResult k = kak_decompose(UnitaryOp(Eigen::MatrixXcd::Identity(4, 4)));
    REQUIRE(std::abs(k.params.c1) < 1e-10);
    REQUIRE(std::abs(k.params.c2) < 1e-10);
    REQUIRE(std::abs(k.params.c3) < 1e-10);
    REQUIRE(k.residual < 1e-10);
  }
  {
    const KakResult k = kak_decompose(UnitaryOp(qcat_tests::cnot_matrix()));
    REQUIRE(k.params.c1 == Catch::Approx(kQuarter).margin(1e-10));
    REQUIRE(std::abs(k.params.c2) < 1e-10);
    REQUIRE(std::abs(k.params.c3) < 1e-10);
    REQUIRE(k.residual < 1e-10);
    REQUIRE(max_abs_diff(reassemble(k), qcat_tests::cnot_matrix()) < 1e-10);
  }
  {
    const KakResult k = kak_decompose(UnitaryOp(qcat_tests::swap_matrix()));
    REQUIRE(k.params.c1 == Catch::Approx(kQuarter).margin(1e-10));
    REQUIRE(k.params.c2 == Catch::Approx(kQuarter).margin(1e-10));
    REQUIRE(k.params.c3 == Catch::Approx(kQuarter).margin(1e-10));
    REQUIRE(max_abs_diff(reassemble(k), qcat_tests::swap_matrix()) < 1e-10);
  }
  {
    const KakResult k = kak_decompose(u_s({0.3, 0.2, 0.1}));
    REQUIRE(k.params.c1 == Catch::Approx(0.3).margin(1e-10));
    REQUIRE(k.params.c2 == Catch::Approx(0.2).margin(1e-10));
    REQUIRE(k.params.c3 == Catch::Approx(0.1).margin(1e-10));
    REQUIRE(max_abs_diff(reassemble(k), u_s({0.3, 0.2, 0.1}).mat()) < 1e-10);
  }
  REQUIRE_THROWS_AS(kak_decompose(UnitaryOp(Eigen::MatrixXcd::Identity(2, 2))),
                    std::invalid_argument);
}

TEST_CASE("decomposition reassembles random unitaries inside the region") {
  SplitMix64 rng(109);
  for (int t = 0; t < 200; ++t) {
    const UnitaryOp u = haar_random_unitary(4, rng);
    const KakResult k = kak_decompose(u);
    REQUIRE(k.residual <= tol::kak_residual);
    REQUIRE(in_weyl_chamber(k.params));
    REQUIRE(max_abs_diff(reassemble(k), u.mat()) < 1e-8);
    // The local factors must be unitary on their own.
    REQUIRE(max_abs_diff(k.u * k.u.adjoint(), Eigen::Matrix2cd::Identity()) < 1e-10);
    REQUIRE(max_abs_diff(k.v * k.v.adjoint(), Eigen::Matrix2cd::Identity()) < 1e-10);
    REQUIRE(max_abs_diff(k.u_tilde * k.u_tilde.adjoint(), Eigen::Matrix2cd::Identity()) < 1e-10);
    REQUIRE(max_abs_diff(k.v_tilde * k.v_tilde.adjoint(), Eigen::Matrix2cd::Identity()) < 1e-10);
  }
}

TEST_CASE("canonical parameters are invariant under local factors") {
  SplitMix64 rng(113);
  for (int t = 0; t < 50; ++t) {
    const UnitaryOp core = haar_random_unitary(4, rng);
    const KakResult base = kak_decompose(core);
    const Eigen::Matrix4cd dressed = kron(haar_random_unitary(2, rng).mat(),
                                          haar_random_unitary(2, rng).mat()) *
                                     core.mat() *
                                     kron(haar_random_unitary(2, rng).mat(),
                                          haar_random_unitary(2, rng).mat());
    const KakResult k = kak_decompose(UnitaryOp(dressed));
    REQUIRE(std::abs(k.params.c1 - base.params.c1) <= tol::params_match);
    REQUIRE(std::abs(k.params.c2 - base.params.c2) <= tol::params_match);
    REQUIRE(std::abs(k.params.c3 - base.params.c3) <= tol::params_match);
  }
}

TEST_CASE("interchangeability under local factors is decided by the triple") {
  const UnitaryOp cnot(qcat_tests::cnot_matrix());
  const UnitaryOp cz(qcat_tests::cphase_matrix(std::numbers::pi));
  const UnitaryOp swap(qcat_tests::swap_matrix());
  REQUIRE(lu_equivalent(cnot, cnot));
  REQUIRE(lu_equivalent(cnot, cz));
  REQUIRE_FALSE(lu_equivalent(cnot, swap));
}
