// Copyright 2026 The Eigencert Authors
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

#include <doctest.h>

#include <cmath>

#include "eigencert/cost.hpp"
#include "eigencert/models.hpp"
#include "eigencert/spectral.hpp"
#include "test_util.hpp"

using namespace eigencert;

namespace {

// Normalized random tail coefficients for the perturbation decomposition.
Eigen::VectorXcd random_tail(Eigen::Index size, Xoshiro256StarStar& rng) {
  Eigen::VectorXcd c(size);
  for (Eigen::Index j = 0; j < size; ++j) {
    c(j) = Complex{rng.normal(), rng.normal()};
  }
  return c;
}

}  // namespace

TEST_CASE("diagonalization basics") {
  SUBCASE("single-qubit Z") {
    PauliSum h(1);
    h.add_term("Z", 1.0);
    const Spectrum s = diagonalize(h);
    CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
    CHECK(std::abs(s.eigenvectors(1, 0)) == doctest::Approx(1.0));  // |1>
    CHECK(std::abs(s.eigenvectors(0, 1)) == doctest::Approx(1.0));  // |0>
  }
  SUBCASE("periodic 2-ring at zero field has doubled levels") {
    const Spectrum s = diagonalize(tfim({2, 1.0, 0.0}));
    CHECK(s.eigenvalues(0) == doctest::Approx(-2.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(-2.0));
    CHECK(s.eigenvalues(2) == doctest::Approx(2.0));
    CHECK(s.eigenvalues(3) == doctest::Approx(2.0));
  }
  SUBCASE("reconstruction and orthonormality") {
    const PauliSum h = random_hermitian({3, 1.0, 23});
    const Spectrum s = diagonalize(h);
    const Eigen::MatrixXcd rebuilt = s.eigenvectors *
                                     s.eigenvalues.asDiagonal() *
                                     s.eigenvectors.adjoint();
    CHECK((rebuilt - h.to_dense()).norm() < 1e-9);
    CHECK((s.eigenvectors.adjoint() * s.eigenvectors -
           Eigen::MatrixXcd::Identity(8, 8))
              .norm() < 1e-10);
  }
}

TEST_CASE("overlap basics") {
  Xoshiro256StarStar rng(127);
  const StateVector psi = testutil::random_state(2, rng);
  CHECK(overlap(psi, psi) == doctest::Approx(1.0));
  CHECK(overlap(StateVector::basis_state(2, 1), StateVector::basis_state(2, 2)) ==
        doctest::Approx(0.0));
  const StateVector plus =
      apply_gate(StateVector::zero_state(1), Gate::h(0));
  CHECK(overlap(plus, StateVector::zero_state(1)) == doctest::Approx(0.5));
}

TEST_CASE("closest eigenstate identification") {
  // A random instance: its spectrum is non-degenerate, so index questions
  // have unambiguous answers (the ring model has symmetry-doubled levels).
  const PauliSum h = random_hermitian({3, 1.0, 77});
  const Spectrum s = diagonalize(h);

  SUBCASE("an eigenvector maps to itself with overlap 1") {
    const auto best = closest_eigenstate(s.eigenstate(3), s);
    CHECK(best.index == 3);
    CHECK(best.overlap == doctest::Approx(1.0));
  }
  SUBCASE("a 0.9-weighted mix picks the dominant index") {
    std::vector<Complex> amp(8);
    for (Eigen::Index k = 0; k < 8; ++k) {
      amp[static_cast<std::size_t>(k)] =
          0.9 * s.eigenvectors(k, 2) +
          std::sqrt(1.0 - 0.81) * s.eigenvectors(k, 5);
    }
    const auto best = closest_eigenstate(StateVector(3, std::move(amp)), s);
    CHECK(best.index == 2);
    CHECK(best.overlap == doctest::Approx(0.81));
  }
  SUBCASE("degenerate subspaces aggregate the overlap") {
    const Spectrum deg = diagonalize(tfim({2, 1.0, 0.0}));
    // Any combination within the lowest (doubled) level has subspace
    // overlap 1.
    std::vector<Complex> amp(4);
    for (Eigen::Index k = 0; k < 4; ++k) {
      amp[static_cast<std::size_t>(k)] =
          (deg.eigenvectors(k, 0) + deg.eigenvectors(k, 1)) / std::sqrt(2.0);
    }
    const auto best = closest_eigenstate(StateVector(2, std::move(amp)), deg);
    CHECK(best.index == 0);
    CHECK(best.overlap == doctest::Approx(1.0));
    CHECK(subspace_overlap(deg.eigenstate(0), deg, 1) == doctest::Approx(1.0));
  }
}

TEST_CASE("energy bound") {
  const PauliSum h = tfim({3, 1.0, 0.8});
  const Spectrum s = diagonalize(h);

  SUBCASE("eigenvector sits exactly on an eigenvalue") {
    const auto check = check_energy_bound(s.eigenstate(1), h, s);
    CHECK(check.holds);
    CHECK(check.sqrt_variance < 1e-6);
    CHECK(check.energy == doctest::Approx(s.eigenvalues(1)).epsilon(1e-9));
  }
  SUBCASE("equal two-level mix is the boundary case") {
    // A genuine two-level system: |+> sits exactly halfway between the Z
    // eigenvalues, and sqrt(F_H) equals that distance.
    PauliSum z(1);
    z.add_term("Z", 1.0);
    const Spectrum sz = diagonalize(z);
    const StateVector plus = apply_gate(StateVector::zero_state(1), Gate::h(0));
    const auto check = check_energy_bound(plus, z, sz);
    CHECK(check.sqrt_variance == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(check.energy - check.nearest_eigenvalue) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(check.holds);
  }
  SUBCASE("random states always satisfy the bound") {
    Xoshiro256StarStar rng(131);
    for (int trial = 0; trial < 200; ++trial) {
      CHECK(check_energy_bound(testutil::random_state(3, rng), h, s).holds);
    }
  }
}

TEST_CASE("variance expansion near an eigenstate") {
  SUBCASE("two-level case reduces to delta = eps^2") {
    PerturbationData pd;
    pd.epsilon = 1e-3;
    pd.lambda1 = 0.0;
    pd.coefficients = Eigen::VectorXcd::Ones(1);
    pd.lambdas = Eigen::VectorXd::Ones(1);
    const VarianceExpansion ex = variance_expansion(pd);
    CHECK(ex.quadratic == doctest::Approx(1.0));
    CHECK(ex.predict(0.0) == 0.0);
    CHECK(ex.predict(1e-3) == doctest::Approx(1e-6).epsilon(1e-5));
  }
  SUBCASE("prediction matches direct evaluation on random instances") {
    Xoshiro256StarStar rng(137);
    for (int trial = 0; trial < 20; ++trial) {
      const PauliSum h = random_hermitian({3, 0.5, 1000 + static_cast<std::uint64_t>(trial)});
      const Spectrum s = diagonalize(h);
      const double eps = 1e-3;
      const auto pd = PerturbationData::from_spectrum(
          s, 0, random_tail(7, rng), eps);
      const double measured = f_h_exact(pd.realize(s, 0), h);
      const VarianceExpansion ex = variance_expansion(pd);
      const double tol = (std::abs(ex.quartic) + 1.0) * eps * eps * eps * eps;
      CHECK(std::abs(measured - ex.quadratic * eps * eps) <= tol);
    }
  }
  SUBCASE("series inversion recovers eps^2 from delta") {
    Xoshiro256StarStar rng(139);
    const PauliSum h = random_hermitian({3, 0.5, 2000});
    const Spectrum s = diagonalize(h);
    const double eps = 1e-3;
    const auto pd =
        PerturbationData::from_spectrum(s, 0, random_tail(7, rng), eps);
    const double delta = f_h_exact(pd.realize(s, 0), h);
    CHECK(epsilon_squared_from_delta(pd, delta) ==
          doctest::Approx(eps * eps).epsilon(1e-3));
  }
}

TEST_CASE("unitary-cost expansion near an eigenstate") {
  SUBCASE("t=0 and resonant gaps vanish") {
    PerturbationData pd;
    pd.epsilon = 1e-2;
    pd.lambda1 = 0.0;
    pd.coefficients = Eigen::VectorXcd::Ones(1);
    pd.lambdas = Eigen::VectorXd::Ones(1);
    CHECK(fq_expansion(pd, 0.0) == 0.0);
    CHECK(fq_expansion(pd, 2.0 * std::numbers::pi) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("formula matches the measured deviation to o(eps^2)") {
    Xoshiro256StarStar rng(149);
    for (int trial = 0; trial < 20; ++trial) {
      const PauliSum h = random_hermitian({3, 0.5, 3000 + static_cast<std::uint64_t>(trial)});
      const Spectrum s = diagonalize(h);
      const double eps = 1e-3;
      const auto pd =
          PerturbationData::from_spectrum(s, 0, random_tail(7, rng), eps);
      const StateVector psi = pd.realize(s, 0);
      const double t = 1.0;
      const double measured = f_q_exact(psi, s, t);
      CHECK(std::abs(measured - fq_expansion(pd, t)) <=
            10.0 * eps * eps * eps * eps);
    }
  }
}

TEST_CASE("closest eigenstate is invariant under positive rescaling") {
  Xoshiro256StarStar rng(151);
  const PauliSum h = random_hermitian({3, 1.0, 29});
  PauliSum scaled = h;
  scaled *= Complex{3.5, 0.0};
  const Spectrum s1 = diagonalize(h);
  const Spectrum s2 = diagonalize(scaled);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = testutil::random_state(3, rng);
    CHECK(closest_eigenstate(psi, s1).index ==
          closest_eigenstate(psi, s2).index);
  }
}

TEST_CASE("small spectral spread collapses F_Q onto the variance") {
  // F_Q(psi, sH, t)/t^2 approaches <H^2> - <H>^2 (in units of s^2) as
  // s t -> 0, at quadratic rate.
  Xoshiro256StarStar rng(157);
  const PauliSum h = random_hermitian({3, 1.0, 31});
  const StateVector psi = testutil::random_state(3, rng);
  const double variance = f_h_exact(psi, h);
  const double t = 1.0;
  double prev_gap = 1e9;
  for (double s : {0.3, 0.15, 0.075}) {
    PauliSum scaled = h;
    scaled *= Complex{s, 0.0};
    const double ratio = f_q_exact(psi, scaled, t) / (s * s * t * t);
    const double gap = std::abs(ratio - variance);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}
