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

#include <span>
#include <vector>

#include "eigencert/rng.hpp"
#include "eigencert/simulator.hpp"

namespace eigencert {

/// Hardware-efficient ansatz: per layer, an X-Z decomposed universal
/// single-qubit block (RZ-RX-RZ) on every qubit followed by a closed ring
/// of controlled-Y rotations (control j, target j+1 mod n). 4*layers*n
/// parameters.
struct AnsatzSpec {
  int n = 4;
  int layers = 3;

  int num_parameters() const { return 4 * layers * n; }
};

// Deterministic circuit construction. Slots are numbered layer-major,
// qubit-minor: per layer, 3 rotation slots per qubit, then n entangler
// slots. Throws std::invalid_argument for n < 2 or layers < 1.
Circuit build_ansatz(const AnsatzSpec& spec);

// U(theta)|0...0>
StateVector prepare_ansatz_state(const AnsatzSpec& spec,
                                 std::span<const double> params);

// Initial-parameter draw, uniform on [0, 2pi)^p.
std::vector<double> random_parameters(const AnsatzSpec& spec,
                                      Xoshiro256StarStar& rng);

}  // namespace eigencert
