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
#include <vector>

namespace eigencert {

/// Gate and circuit counts for evaluating the two cost functions on the
/// n-spin TFIM with an l-layered ansatz and r Trotter steps.
struct ResourceCount {
  int n = 0;
  int layers = 0;
  int trotter_steps = 0;
  std::int64_t n_u = 0;   // Trotterized evolution gates, 2nr
  std::int64_t n_v = 0;   // ansatz gates, 4ln
  std::int64_t n_q = 0;   // F_Q circuit, 2 N_V + N_U
  std::int64_t n_h1 = 0;  // gates for <H>
  std::int64_t n_h2 = 0;  // gates for <H^2>
  std::int64_t n_h = 0;   // N_H1 + N_H2
  std::int64_t circuits_h = 0;  // measurement circuits for F_H
};

// Counts from constructive enumeration of the actual measurement circuits:
// one circuit per stored term of H and of H^2, each with N_V ansatz gates
// plus one Hadamard per X factor in the measured term. Reproduces the
// closed forms for N_H2 and N_H = (4l-2)(n-n^2) + 8ln^3 at every n >= 3.
// Throws std::invalid_argument for non-positive inputs or n < 2.
ResourceCount count_resources(int n, int layers, int trotter_steps);

struct CrossoverRow {
  int n = 0;
  int trotter_steps = 0;  // ceil(n^alpha)
  std::int64_t n_q = 0;
  std::int64_t n_h = 0;
};

/// Tabulates N_Q(n, l, r = ceil(n^alpha)) against N_H(n, l).
struct CrossoverReport {
  double alpha = 0.0;
  int layers = 0;
  std::vector<CrossoverRow> rows;
  // Least n in range with N_Q < N_H, or -1 if none.
  int first_n_with_nq_below = -1;
};

CrossoverReport crossover(int n_min, int n_max, int layers, double alpha);

}  // namespace eigencert
