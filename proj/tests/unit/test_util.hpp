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

#pragma once

#include <vector>

#include "eigencert/pauli.hpp"
#include "eigencert/rng.hpp"
#include "eigencert/simulator.hpp"

namespace eigencert::testutil {

// Haar-ish random normalized state: i.i.d. complex normal amplitudes.
inline StateVector random_state(int n, Xoshiro256StarStar& rng) {
  std::vector<Complex> amp(1ULL << n);
  for (Complex& a : amp) a = Complex{rng.normal(), rng.normal()};
  StateVector psi(n, std::move(amp));
  psi.normalize();
  return psi;
}

// Random Hermitian PauliSum with real coefficients on random strings.
inline PauliSum random_pauli_sum(int n, int terms, Xoshiro256StarStar& rng) {
  PauliSum h(n);
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (int k = 0; k < terms; ++k) {
    std::string ops(static_cast<std::size_t>(n), 'I');
    for (char& c : ops) c = letters[rng.next() % 4];
    h.add_term(ops, Complex{rng.normal(), 0.0});
  }
  return h;
}

// <psi|M|psi> straight from the dense matrix (independent oracle).
inline Complex dense_quadratic_form(const Eigen::MatrixXcd& m,
                                    const StateVector& psi) {
  const auto& amp = psi.amplitudes();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amp.size()));
  for (std::size_t i = 0; i < amp.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = amp[i];
  }
  return (v.adjoint() * m * v)(0);
}

}  // namespace eigencert::testutil
