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

#include "eigencert/costmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "eigencert/models.hpp"

namespace eigencert {

ResourceCount count_resources(int n, int layers, int trotter_steps) {
  if (n < 2 || layers < 1 || trotter_steps < 1) {
    throw std::invalid_argument(
        "count_resources: need n >= 2, layers >= 1, trotter_steps >= 1");
  }
  ResourceCount rc;
  rc.n = n;
  rc.layers = layers;
  rc.trotter_steps = trotter_steps;
  rc.n_u = std::int64_t{2} * n * trotter_steps;
  rc.n_v = std::int64_t{4} * layers * n;
  rc.n_q = 2 * rc.n_v + rc.n_u;

  // Measurement circuits for F_H, enumerated from the actual TFIM terms at
  // h = 1: one circuit per stored term (the identity term of H^2 included,
  // as a bare ansatz circuit), one Hadamard per X factor.
  const PauliSum h = tfim({n, 1.0, 1.0});
  const PauliSum h2 = h.squared();
  auto tally = [&rc](const PauliSum& op) {
    std::int64_t gates = 0;
    for (const auto& [ops, coeff] : op.terms()) {
      (void)coeff;
      gates += rc.n_v;
      for (char c : ops) gates += c == 'X';
    }
    return gates;
  };
  rc.n_h1 = tally(h);
  rc.n_h2 = tally(h2);
  rc.n_h = rc.n_h1 + rc.n_h2;
  rc.circuits_h = static_cast<std::int64_t>(h.num_terms() + h2.num_terms());
  return rc;
}

CrossoverReport crossover(int n_min, int n_max, int layers, double alpha) {
  if (n_min < 2 || n_max < n_min || layers < 1) {
    throw std::invalid_argument("crossover: invalid range or layer count");
  }
  CrossoverReport report;
  report.alpha = alpha;
  report.layers = layers;
  for (int n = n_min; n <= n_max; ++n) {
    const int r = std::max(1, static_cast<int>(
                                  std::ceil(std::pow(n, alpha))));
    const ResourceCount rc = count_resources(n, layers, r);
    report.rows.push_back({n, r, rc.n_q, rc.n_h});
    if (report.first_n_with_nq_below < 0 && rc.n_q < rc.n_h) {
      report.first_n_with_nq_below = n;
    }
  }
  return report;
}

}  // namespace eigencert
