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

#include <benchmark/benchmark.h>

#include "eigencert/ansatz.hpp"
#include "eigencert/cost.hpp"
#include "eigencert/models.hpp"
#include "eigencert/rng.hpp"
#include "eigencert/simulator.hpp"

namespace {

void BM_AnsatzState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const eigencert::AnsatzSpec spec{n, 3};
  const eigencert::Circuit circuit = eigencert::build_ansatz(spec);
  eigencert::Xoshiro256StarStar rng(7);
  const auto params = eigencert::random_parameters(spec, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigencert::run_circuit(circuit, params));
  }
}
BENCHMARK(BM_AnsatzState)->Arg(4)->Arg(6)->Arg(8);

void BM_PauliSquare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const eigencert::PauliSum h = eigencert::tfim({n, 1.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(h.squared());
  }
}
BENCHMARK(BM_PauliSquare)->Arg(4)->Arg(6)->Arg(8);

void BM_VarianceCost(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const eigencert::AnsatzSpec spec{n, 3};
  const eigencert::CostFunction cost(eigencert::CostKind::Variance,
                                     eigencert::tfim({n, 1.0, 1.0}),
                                     eigencert::build_ansatz(spec));
  eigencert::Xoshiro256StarStar rng(7);
  const auto params = eigencert::random_parameters(spec, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost.value(params));
  }
}
BENCHMARK(BM_VarianceCost)->Arg(4)->Arg(6);

void BM_TrotterStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const eigencert::StateVector psi = eigencert::StateVector::zero_state(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigencert::evolve_trotter(psi, 1.0, 1.0, 1.0, 8));
  }
}
BENCHMARK(BM_TrotterStep)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
