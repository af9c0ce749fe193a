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
#include <numbers>

#include "eigencert/ansatz.hpp"
#include "eigencert/models.hpp"
#include "eigencert/simulator.hpp"
#include "eigencert/spectral.hpp"
#include "test_util.hpp"

using namespace eigencert;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("zero-angle rotations are the identity") {
  Xoshiro256StarStar rng(1);
  const StateVector psi = testutil::random_state(2, rng);
  for (const Gate& g : {Gate::rx_fixed(0, 0.0), Gate::ry_fixed(1, 0.0),
                        Gate::rz_fixed(0, 0.0), Gate::cry_fixed(0, 1, 0.0)}) {
    const StateVector out = apply_gate(psi, g);
    CHECK(std::abs(psi.inner(out) - Complex{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("full-angle convention: RX(pi/2)|0> = -i|1>") {
  const StateVector out =
      apply_gate(StateVector::zero_state(1), Gate::rx_fixed(0, kPi / 2));
  CHECK(std::abs(out.amplitude(0)) < 1e-12);
  CHECK(std::abs(out.amplitude(1) - Complex{0.0, -1.0}) < 1e-12);
}

TEST_CASE("H maps |0> to the equal superposition") {
  const StateVector out = apply_gate(StateVector::zero_state(1), Gate::h(0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out.amplitude(0) - Complex{r, 0.0}) < 1e-12);
  CHECK(std::abs(out.amplitude(1) - Complex{r, 0.0}) < 1e-12);
}

TEST_CASE("gates preserve the norm") {
  Xoshiro256StarStar rng(3);
  StateVector psi = testutil::random_state(3, rng);
  for (int k = 0; k < 50; ++k) {
    const int q = static_cast<int>(rng.next() % 3);
    apply_gate_in_place(psi, Gate::rx_fixed(q, rng.angle()));
    apply_gate_in_place(psi, Gate::cry_fixed(q, (q + 1) % 3, rng.angle()));
    apply_gate_in_place(psi, Gate::sdg(q));
  }
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("qubit 0 is the leftmost tensor factor") {
  // X on qubit 0 of |000> flips the most significant bit: index 4.
  StateVector psi = StateVector::zero_state(3);
  psi = apply_pauli(PauliString::single(3, 0, 'X'), psi);
  CHECK(std::abs(psi.amplitude(4) - Complex{1.0, 0.0}) < 1e-12);
}

TEST_CASE("expectation values on simple states") {
  SUBCASE("ferromagnetic basis state sees energy n at h=0") {
    for (int n : {3, 4, 5}) {
      const StateVector zero = StateVector::zero_state(n);
      CHECK(expectation(zero, tfim({n, 1.0, 0.0})) ==
            doctest::Approx(static_cast<double>(n)));
    }
  }
  SUBCASE("<+|X|+> = 1") {
    const StateVector plus =
        apply_gate(StateVector::zero_state(1), Gate::h(0));
    PauliSum x(1);
    x.add_term("X", 1.0);
    CHECK(expectation(plus, x) == doctest::Approx(1.0));
  }
  SUBCASE("random state matches the dense quadratic form") {
    Xoshiro256StarStar rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      const StateVector psi = testutil::random_state(4, rng);
      const PauliSum h = testutil::random_pauli_sum(4, 10, rng);
      const double oracle =
          testutil::dense_quadratic_form(h.to_dense(), psi).real();
      CHECK(expectation(psi, h) == doctest::Approx(oracle).epsilon(1e-10));
    }
  }
  SUBCASE("non-Hermitian sums are rejected") {
    PauliSum h(1);
    h.add_term("Z", Complex{0.0, 1.0});
    CHECK_THROWS_AS(expectation(StateVector::zero_state(1), h),
                    std::domain_error);
  }
}

TEST_CASE("exact evolution properties") {
  const PauliSum h = tfim({3, 1.0, 0.8});
  Xoshiro256StarStar rng(23);
  const StateVector psi = testutil::random_state(3, rng);

  SUBCASE("t=0 is the identity") {
    const StateVector out = evolve_exact(psi, h, 0.0);
    CHECK(std::abs(psi.inner(out) - Complex{1.0, 0.0}) < 1e-12);
  }
  SUBCASE("eigenvectors pick up a pure phase") {
    const Spectrum spectrum = diagonalize(h);
    const StateVector v = spectrum.eigenstate(2);
    const StateVector out = evolve_exact(v, h, 0.9);
    const Complex expect =
        std::exp(Complex{0.0, -spectrum.eigenvalues(2) * 0.9});
    CHECK(std::abs(v.inner(out) - expect) < 1e-10);
  }
  SUBCASE("composition over time is additive") {
    const StateVector two_step =
        evolve_exact(evolve_exact(psi, h, 0.4), h, 0.35);
    const StateVector one_step = evolve_exact(psi, h, 0.75);
    CHECK(std::abs(two_step.inner(one_step) - Complex{1.0, 0.0}) < 1e-9);
  }
  SUBCASE("|<e^{-iHt}>| is invariant under constant shifts") {
    PauliSum shifted = h;
    shifted.add_term("III", 1.7);
    const double a = std::abs(psi.inner(evolve_exact(psi, h, 1.3)));
    const double b = std::abs(psi.inner(evolve_exact(psi, shifted, 1.3)));
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
}

TEST_CASE("Trotter product approaches the exact propagator") {
  Xoshiro256StarStar rng(29);
  SUBCASE("n=3, t=0.7, r=2048 is within 5e-4 of exact") {
    const StateVector psi = testutil::random_state(3, rng);
    const PauliSum h = tfim({3, 1.0, 1.0});
    // evolve_trotter approximates e^{+iHt}; compare against exact at -t.
    const StateVector exact = evolve_exact(psi, h, -0.7);
    const StateVector approx = evolve_trotter(psi, 1.0, 1.0, 0.7, 2048);
    double err = 0.0;
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
      err += std::norm(exact.amplitude(i) - approx.amplitude(i));
    }
    CHECK(std::sqrt(err) < 5e-4);
  }
  SUBCASE("zero field: the diagonal layer is exact at any r") {
    const StateVector psi = testutil::random_state(4, rng);
    const StateVector a = evolve_trotter(psi, 1.0, 0.0, 1.1, 1);
    const StateVector b = evolve_trotter(psi, 1.0, 0.0, 1.1, 7);
    CHECK(std::abs(a.inner(b) - Complex{1.0, 0.0}) < 1e-12);
  }
  SUBCASE("first-order error shrinks at least 4x from r=1 to r=8") {
    const StateVector psi = testutil::random_state(5, rng);
    const PauliSum h = tfim({5, 1.0, 1.0});
    const StateVector exact = evolve_exact(psi, h, -1.0);
    auto error = [&](int r) {
      const StateVector approx = evolve_trotter(psi, 1.0, 1.0, 1.0, r);
      double e = 0.0;
      for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        e += std::norm(exact.amplitude(i) - approx.amplitude(i));
      }
      return std::sqrt(e);
    };
    CHECK(error(1) >= 4.0 * error(8));
  }
  SUBCASE("r < 1 is rejected") {
    CHECK_THROWS_AS(
        evolve_trotter(StateVector::zero_state(2), 1.0, 1.0, 1.0, 0),
        std::invalid_argument);
  }
}

TEST_CASE("bitstring sampling") {
  SUBCASE("a basis state always samples itself") {
    const auto draws =
        sample_bitstrings(StateVector::basis_state(3, 5), {200, 99});
    for (std::uint64_t d : draws) CHECK(d == 5);
  }
  SUBCASE("|+> samples ones near half the time") {
    const StateVector plus =
        apply_gate(StateVector::zero_state(1), Gate::h(0));
    const auto draws = sample_bitstrings(plus, {1000, 7});
    int ones = 0;
    for (std::uint64_t d : draws) ones += d == 1;
    // 5 sigma of Binomial(1000, 0.5).
    CHECK(std::abs(ones - 500) < 5 * 15.9);
  }
  SUBCASE("fixed seed reproduces the draw sequence") {
    Xoshiro256StarStar rng(41);
    const StateVector psi = testutil::random_state(3, rng);
    CHECK(sample_bitstrings(psi, {100, 12345}) ==
          sample_bitstrings(psi, {100, 12345}));
  }
}

TEST_CASE("sampled expectation estimation") {
  SUBCASE("Z term on a basis state is exact for any shot count") {
    Circuit empty;
    empty.n = 1;
    PauliSum z(1);
    z.add_term("Z", 1.0);
    CHECK(estimate_expectation_sampled(empty, {}, z, {10, 3}) ==
          doctest::Approx(1.0));
  }
  SUBCASE("identity-only sum returns the constant") {
    Circuit empty;
    empty.n = 2;
    PauliSum h(2);
    h.add_term("II", -1.25);
    CHECK(estimate_expectation_sampled(empty, {}, h, {1, 3}) ==
          doctest::Approx(-1.25));
  }
  SUBCASE("large m converges to the exact expectation") {
    const AnsatzSpec spec{4, 2};
    const Circuit circuit = build_ansatz(spec);
    Xoshiro256StarStar rng(55);
    const auto params = random_parameters(spec, rng);
    const PauliSum h = tfim({4, 1.0, 1.0});
    const double exact = expectation(run_circuit(circuit, params), h);
    const double sampled =
        estimate_expectation_sampled(circuit, params, h, {1000000, 77});
    const double k = static_cast<double>(h.num_terms());
    CHECK(std::abs(sampled - exact) < 3.0 * k / 1000.0);
  }
}

TEST_CASE("bound circuits invert exactly") {
  const AnsatzSpec spec{3, 2};
  const Circuit circuit = build_ansatz(spec);
  Xoshiro256StarStar rng(61);
  const auto params = random_parameters(spec, rng);
  const Circuit bound = circuit.bind(params);
  const StateVector round_trip =
      apply_circuit(bound.inverse(), run_circuit(bound, {}), {});
  CHECK(std::abs(round_trip.amplitude(0) - Complex{1.0, 0.0}) < 1e-10);
}
