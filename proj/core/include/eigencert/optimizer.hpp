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
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace eigencert {

struct BfgsConfig {
  double grad_tol = 1e-5;  // infinity norm
  int max_iters = 1000;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
};

enum class Termination {
  GradientTolerance,
  MaxIterations,
  LineSearchFailure,
  Numerical,
};

std::string to_string(Termination t);

/// One optimization trajectory.
struct RunRecord {
  std::uint64_t seed = 0;
  std::vector<double> initial_params;
  std::vector<double> final_params;
  std::vector<double> cost_trace;  // accepted iterates, starting at f(x0)
  int iterations = 0;
  Termination reason = Termination::MaxIterations;
  double final_cost = 0.0;
  // Filled by the harness after the run.
  double final_overlap = -1.0;
  double initial_overlap = -1.0;
  int closest_eigenstate_index = -1;
};

using Objective = std::function<double(std::span<const double>)>;
using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

// BFGS with a strong-Wolfe line search. Terminates when the gradient
// infinity norm drops below grad_tol or max_iters is reached. Curvature
// failures (y.s <= 1e-10) skip the inverse-Hessian update.
RunRecord minimize(const Objective& objective, const GradientFn& gradient,
                   std::vector<double> x0, const BfgsConfig& config = {});

}  // namespace eigencert
