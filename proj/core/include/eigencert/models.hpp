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

#include <cstdint>

#include "eigencert/pauli.hpp"

namespace eigencert {

/// Transverse field Ising chain with periodic closure,
/// H = J sum_j (Z_j Z_{j+1} + h X_j).
struct TfimSpec {
  int n = 4;
  double coupling = 1.0;  // J
  double field = 1.0;     // h, dimensionless in units of J
};

/// Staggered-mass lattice Schwinger model; n must be even.
struct SchwingerSpec {
  int n = 4;
  double mass = -0.7;  // m_c
};

/// Spinless fermions with nearest and next-nearest density interactions,
/// mapped to qubits with the Jordan-Wigner transformation.
struct FermionSpec {
  int n = 4;
  double hopping = 1.0;  // t
  double u1 = 2.0;
  double u2 = 1.0;
};

/// GUE-style random Hermitian instance, converted to a PauliSum.
struct RandomHermitianSpec {
  int n = 4;
  double scale = 1.0;
  std::uint64_t seed = 0;
};

PauliSum tfim(const TfimSpec& spec);
PauliSum schwinger(const SchwingerSpec& spec);
PauliSum fermions_jw(const FermionSpec& spec);
// Total occupation sum_j n_j as a PauliSum (conserved by fermions_jw).
PauliSum fermion_number_operator(int n);
PauliSum random_hermitian(const RandomHermitianSpec& spec);
// The dense matrix the conversion started from (seeded identically).
Eigen::MatrixXcd random_hermitian_dense(const RandomHermitianSpec& spec);

}  // namespace eigencert
