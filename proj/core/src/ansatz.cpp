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

#include "eigencert/ansatz.hpp"

#include <stdexcept>

namespace eigencert {

Circuit build_ansatz(const AnsatzSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("build_ansatz: need at least 2 qubits");
  if (spec.layers < 1) throw std::invalid_argument("build_ansatz: need at least 1 layer");
  Circuit c;
  c.n = spec.n;
  int slot = 0;
  for (int layer = 0; layer < spec.layers; ++layer) {
    for (int q = 0; q < spec.n; ++q) {
      c.append(Gate::rz(q, slot++));
      c.append(Gate::rx(q, slot++));
      c.append(Gate::rz(q, slot++));
    }
    for (int q = 0; q < spec.n; ++q) {
      c.append(Gate::cry(q, (q + 1) % spec.n, slot++));
    }
  }
  return c;
}

StateVector prepare_ansatz_state(const AnsatzSpec& spec,
                                 std::span<const double> params) {
  if (static_cast<int>(params.size()) != spec.num_parameters()) {
    throw std::invalid_argument("prepare_ansatz_state: parameter count mismatch");
  }
  return run_circuit(build_ansatz(spec), params);
}

std::vector<double> random_parameters(const AnsatzSpec& spec,
                                      Xoshiro256StarStar& rng) {
  std::vector<double> params(static_cast<std::size_t>(spec.num_parameters()));
  for (double& p : params) p = rng.angle();
  return params;
}

}  // namespace eigencert
