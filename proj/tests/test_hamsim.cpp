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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qcat/qcat.hpp"

using namespace qcat;
using qcat_tests::max_abs_diff;

namespace {

HamParams random_normal_form(SplitMix64& rng) {
  const double c1 = rng.next_double();
  const double c2 = rng.next_double() * c1;
  const double c3 = (2.0 * rng.next_double() - 1.0) * c2;
  return {c1, c2, c3};
}

}  // namespace

TEST_CASE("interaction spectrum has the closed form") {
  {
    const LambdaSpectrum l = lambda_spectrum(HamParams(1.0, 0.0, 0.0));
    REQUIRE(l.l1 == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(l.l2 == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(l.l3 == Catch::Approx(-1.0).margin(1e-15));
    REQUIRE(l.l4 == Catch::Approx(-1.0).margin(1e-15));
  }
  {
    const LambdaSpectrum l = lambda_spectrum(HamParams(0.3, 0.2, 0.1));
    REQUIRE(l.l1 == Catch::Approx(0.4).margin(1e-15));
    REQUIRE(l.l2 == Catch::Approx(0.2).margin(1e-15));
    REQUIRE(l.l3 == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(l.l4 == Catch::Approx(-0.6).margin(1e-15));
  }
  {
    // The constant offsets every eigenvalue equally.
    const LambdaSpectrum base = lambda_spectrum(HamParams(0.3, 0.2, 0.1));
    const LambdaSpectrum shifted = lambda_spectrum(ExtHamParams(0.3, 0.2, 0.1, 0.7));
    REQUIRE(shifted.l1 == Catch::Approx(base.l1 + 0.7).margin(1e-15));
    REQUIRE(shifted.l4 == Catch::Approx(base.l4 + 0.7).margin(1e-15));
  }
}

TEST_CASE("matrix spectrum agrees with the closed form and is ordered") {
  SplitMix64 rng(503);
  for (int t = 0; t < 200; ++t) {
    const HamParams h = random_normal_form(rng);
    const Eigen::Matrix4cd m = ham_matrix(h);
    REQUIRE(max_abs_diff(m, m.adjoint()) < 1e-15);
    const LambdaSpectrum l = lambda_spectrum(h);
    REQUIRE(l.l1 >= l.l2 - 1e-12);
    REQUIRE(l.l2 >= l.l3 - 1e-12);
    REQUIRE(l.l3 >= l.l4 - 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
    REQUIRE(es.eigenvalues()(3) == Catch::Approx(l.l1).margin(1e-12));
    REQUIRE(es.eigenvalues()(2) == Catch::Approx(l.l2).margin(1e-12));
    REQUIRE(es.eigenvalues()(1) == Catch::Approx(l.l3).margin(1e-12));
    REQUIRE(es.eigenvalues()(0) == Catch::Approx(l.l4).margin(1e-12));
  }
}

TEST_CASE("normal form admission rejects unsorted coefficients") {
  REQUIRE_NOTHROW(HamParams(0.3, 0.2, -0.2));
  REQUIRE_THROWS_WITH(HamParams(0.2, 0.3, 0.1),
                      Catch::Matchers::ContainsSubstring("pre-reduce"));
  REQUIRE_THROWS_WITH(HamParams(0.3, 0.1, 0.2),
                      Catch::Matchers::ContainsSubstring("pre-reduce"));
  REQUIRE_THROWS_AS(ExtHamParams(0.2, 0.3, 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("local simulability is decided by the three sum inequalities") {
  REQUIRE(locc_simulable({0.5, 0.0, 0.0}, {0.3, 0.2, 0.0}));
  REQUIRE_FALSE(locc_simulable({0.3, 0.2, 0.0}, {0.5, 0.0, 0.0}));
  // A bare sign flip of c3 is incomparable in both directions.
  REQUIRE_FALSE(locc_simulable({0.3, 0.2, 0.1}, {0.3, 0.2, -0.1}));
  REQUIRE_FALSE(locc_simulable({0.3, 0.2, -0.1}, {0.3, 0.2, 0.1}));
}

TEST_CASE("local simulability is reflexive, transitive, and scale-monotone") {
  SplitMix64 rng(509);
  for (int t = 0; t < 200; ++t) {
    const HamParams h = random_normal_form(rng);
    REQUIRE(locc_simulable(h, h));
    const double s = rng.next_double();
    REQUIRE(locc_simulable(h, HamParams(s * h.c1, s * h.c2, s * h.c3)));
  }
  long checked = 0;
  while (checked < 50) {
    const HamParams a = random_normal_form(rng);
    const HamParams b = random_normal_form(rng);
    const HamParams c = random_normal_form(rng);
    if (locc_simulable(a, b) && locc_simulable(b, c)) {
      REQUIRE(locc_simulable(a, c));
      ++checked;
    }
  }
}

TEST_CASE("one catalysis step concentrates the coefficient sum") {
  const HamParams t = catalytic_target(HamParams(0.3, 0.2, 0.1));
  REQUIRE(t.c1 == Catch::Approx(0.5).margin(1e-15));
  REQUIRE(t.c2 == 0.0);
  REQUIRE(t.c3 == 0.0);
  // Strictly more capable than the source on this pair.
  REQUIRE(locc_simulable(catalytic_target({0.3, 0.2, 0.0}), {0.5, 0.0, 0.0}));
  REQUIRE_FALSE(locc_simulable({0.3, 0.2, 0.0}, {0.5, 0.0, 0.0}));
}

TEST_CASE("feasible constant interval matches hand calculations") {
  {
    const auto iv = catlu_feasible_c4({0.3, 0.2, 0.1}, {0.6, 0.0, 0.0});
    REQUIRE_FALSE(iv.has_value());
  }
  {
    const auto iv = catlu_feasible_c4({0.3, 0.2, 0.1}, {0.3, 0.2, 0.1});
    REQUIRE(iv.has_value());
    REQUIRE(iv->first == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(iv->second == Catch::Approx(0.0).margin(1e-12));
  }
  {
    // The sign flip pins c4 = -0.2 but the magnitude budget is zero.
    const auto iv = catlu_feasible_c4({0.3, 0.2, 0.1}, {0.3, 0.2, -0.1});
    REQUIRE_FALSE(iv.has_value());
  }
  {
    const auto iv = catlu_feasible_c4({0.7, 0.6, 0.5}, {0.65, 0.63, 0.2});
    REQUIRE(iv.has_value());
    REQUIRE(iv->first == Catch::Approx(-0.32).margin(1e-12));
    REQUIRE(iv->second == Catch::Approx(-0.28).margin(1e-12));
  }
}

TEST_CASE("local simulability implies a feasible constant near zero") {
  SplitMix64 rng(521);
  long checked = 0;
  while (checked < 100) {
    const HamParams h = random_normal_form(rng);
    const HamParams t = random_normal_form(rng);
    if (!locc_simulable(h, t)) continue;
    const auto iv = catlu_feasible_c4(h, t);
    REQUIRE(iv.has_value());
    REQUIRE(iv->first <= 1e-9);
    REQUIRE(iv->second >= -1e-9);
    ++checked;
  }
}

TEST_CASE("classification ladder returns the named verdicts") {
  {
    const SimulationVerdict v = classify_simulation({0.5, 0.0, 0.0}, {0.3, 0.2, 0.0});
    REQUIRE(v.kind == SimulationKind::LOCC_SIMULABLE);
    REQUIRE(v.witness == "locc-conditions-hold");
    REQUIRE_FALSE(v.c4_interval.has_value());
  }
  {
    const SimulationVerdict v = classify_simulation({0.3, 0.2, 0.0}, {0.5, 0.0, 0.0});
    REQUIRE(v.kind == SimulationKind::CATALYTIC_SIMULABLE);
    REQUIRE(v.witness == "catalytic-route");
    REQUIRE_FALSE(v.c4_interval.has_value());
  }
  {
    const SimulationVerdict v = classify_simulation({0.3, 0.2, 0.1}, {0.6, 0.0, 0.0});
    REQUIRE(v.kind == SimulationKind::FORBIDDEN);
    REQUIRE(v.witness == "empty-c4-interval");
    REQUIRE_FALSE(v.c4_interval.has_value());
  }
  {
    const SimulationVerdict v = classify_simulation({0.3, 0.2, 0.1}, {0.3, 0.2, -0.1});
    REQUIRE(v.kind == SimulationKind::FORBIDDEN);
    REQUIRE_FALSE(v.c4_interval.has_value());
  }
  {
    const SimulationVerdict v = classify_simulation({0.7, 0.6, 0.5}, {0.65, 0.63, 0.2});
    REQUIRE(v.kind == SimulationKind::UNDECIDED);
    REQUIRE(v.witness == "c4-interval-nonempty");
    REQUIRE(v.c4_interval.has_value());
  }
  REQUIRE(std::string(to_string(SimulationKind::LOCC_SIMULABLE)) == "LOCC_SIMULABLE");
  REQUIRE(std::string(to_string(SimulationKind::UNDECIDED)) == "UNDECIDED");
}

TEST_CASE("random pair scan hits every decided verdict") {
  SplitMix64 rng(523);
  long locc = 0, catalytic = 0, forbidden = 0, undecided = 0;
  for (int t = 0; t < 2000; ++t) {
    const SimulationVerdict v =
        classify_simulation(random_normal_form(rng), random_normal_form(rng));
    switch (v.kind) {
      case SimulationKind::LOCC_SIMULABLE:
        ++locc;
        break;
      case SimulationKind::CATALYTIC_SIMULABLE:
        ++catalytic;
        break;
      case SimulationKind::FORBIDDEN:
        ++forbidden;
        break;
      case SimulationKind::UNDECIDED:
        ++undecided;
        break;
    }
  }
  REQUIRE(locc > 0);
  REQUIRE(catalytic > 0);
  REQUIRE(forbidden > 0);
  REQUIRE(locc + catalytic + forbidden + undecided == 2000);
}

TEST_CASE("trivial mixture reproduces the bare spectrum") {
  const HamParams h{0.3, 0.2, 0.1};
  const std::vector<MixtureTerm> single = {
      {1.0, UnitaryOp(Eigen::MatrixXcd::Identity(2, 2)),
       UnitaryOp(Eigen::MatrixXcd::Identity(2, 2))}};
  const MixtureSpectrum ms = mixture_spectrum_bounds(h, single, 1, 1);
  REQUIRE(ms.within_bounds);
  const LambdaSpectrum l = lambda_spectrum(h);
  REQUIRE(ms.eigenvalues.size() == 4);
  REQUIRE(ms.eigenvalues(0) == Catch::Approx(l.l4).margin(1e-12));
  REQUIRE(ms.eigenvalues(1) == Catch::Approx(l.l3).margin(1e-12));
  REQUIRE(ms.eigenvalues(2) == Catch::Approx(l.l2).margin(1e-12));
  REQUIRE(ms.eigenvalues(3) == Catch::Approx(l.l1).margin(1e-12));
}

TEST_CASE("random mixtures stay inside the spectral interval") {
  SplitMix64 rng(541);
  for (int t = 0; t < 200; ++t) {
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
      mix.push_back(
          {w[m] / tot, haar_random_unitary(2 * da, rng), haar_random_unitary(2 * db, rng)});
    }
    const MixtureSpectrum ms = mixture_spectrum_bounds(random_normal_form(rng), mix, da, db);
    REQUIRE(ms.within_bounds);
  }
}

TEST_CASE("full two-sided pauli mixture averages the interaction away") {
  std::vector<MixtureTerm> twirl;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      twirl.push_back({1.0 / 16.0, UnitaryOp(Eigen::MatrixXcd(sigma(i))),
                       UnitaryOp(Eigen::MatrixXcd(sigma(j)))});
    }
  }
  const MixtureSpectrum ms = mixture_spectrum_bounds(HamParams(0.3, 0.2, 0.1), twirl, 1, 1);
  REQUIRE(ms.within_bounds);
  REQUIRE(ms.eigenvalues.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("mixture validation rejects malformed input") {
  const UnitaryOp id2(Eigen::MatrixXcd::Identity(2, 2));
  const UnitaryOp id4(Eigen::MatrixXcd::Identity(4, 4));
  const HamParams h{0.3, 0.2, 0.1};
  REQUIRE_THROWS_AS(mixture_spectrum_bounds(h, {}, 1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(mixture_spectrum_bounds(h, {{0.4, id2, id2}}, 1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(mixture_spectrum_bounds(h, {{1.0, id4, id2}}, 1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(mixture_spectrum_bounds(h, {{0.5, id2, id2}, {-0.5, id2, id2}, {1.0, id2, id2}}, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("cross-term coefficient is one for identity locals") {
  const UnitaryOp id4(Eigen::MatrixXcd::Identity(4, 4));
  SplitMix64 rng(547);
  for (int n = 1; n <= 3; ++n) {
    const PureState phi0 = random_state({"a", "b"}, rng);
    REQUIRE(h_coefficient(phi0, id4, id4, n) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("cross-term coefficient has exact values for a known circuit") {
  // With u = the controlled flip on (A, a) and v trivial, the coefficient
  // reduces to |<phi0| X_a |phi0>|.
  const UnitaryOp cnot(qcat_tests::cnot_matrix());
  const UnitaryOp id4(Eigen::MatrixXcd::Identity(4, 4));
  REQUIRE(h_coefficient(PureState::basis({"a", "b"}, 0), cnot, id4, 1) ==
          Catch::Approx(0.0).margin(1e-13));
  Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(4);
  plus(0) = plus(2) = 1.0 / std::numbers::sqrt2;
  REQUIRE(h_coefficient(PureState({"a", "b"}, plus), cnot, id4, 1) ==
          Catch::Approx(1.0).margin(1e-13));
  // The flip commutes with the z-axis on the control, so nothing is lost.
  REQUIRE(h_coefficient(PureState::basis({"a", "b"}, 0), cnot, id4, 3) ==
          Catch::Approx(1.0).margin(1e-13));
}

TEST_CASE("cross-term coefficient never exceeds one") {
  SplitMix64 rng(557);
  double max_h = 0.0;
  for (int t = 0; t < 2000; ++t) {
    const UnitaryOp u = haar_random_unitary(4, rng);
    const UnitaryOp v = haar_random_unitary(4, rng);
    const PureState phi0 = random_state({"a", "b"}, rng);
    max_h = std::max(max_h, h_coefficient(phi0, u, v, 1 + (t % 3)));
  }
  REQUIRE(max_h <= 1.0 + 1e-10);
  REQUIRE(max_h > 0.0);
}

TEST_CASE("cross-term coefficient validates its arguments") {
  const UnitaryOp id4(Eigen::MatrixXcd::Identity(4, 4));
  const UnitaryOp id2(Eigen::MatrixXcd::Identity(2, 2));
  const PureState phi0 = random_state(3, {"a", "b"});
  REQUIRE_THROWS_AS(h_coefficient(phi0, id4, id4, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(h_coefficient(phi0, id4, id4, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(h_coefficient(phi0, id2, id2, 1), std::invalid_argument);
}
