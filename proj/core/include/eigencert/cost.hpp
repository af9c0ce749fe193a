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

#include "eigencert/models.hpp"
#include "eigencert/pauli.hpp"
#include "eigencert/simulator.hpp"
#include "eigencert/spectral.hpp"

namespace eigencert {

enum class CostKind { Variance, Unitary };

// F_H = <H^2> - <H>^2, exact. The squared sum is recomputed; prefer the
// overload with a precomputed square in hot paths.
double f_h_exact(const StateVector& psi, const PauliSum& h);
double f_h_exact(const StateVector& psi, const PauliSum& h,
                 const PauliSum& h_squared);

// Sampled F_H: every Pauli term of H and of H^2 is estimated with its own
// circuit and m shots. May come out slightly negative; returned as-is.
double f_h_sampled(const Circuit& circuit, std::span<const double> params,
                   const PauliSum& h, const PauliSum& h_squared,
                   const ShotPlan& plan);

// F_Q = 1 - |<psi|e^{-iHt}|psi>|^2, exact.
double f_q_exact(const StateVector& psi, const PauliSum& h, double t);
double f_q_exact(const StateVector& psi, const Spectrum& spectrum, double t);

// F_Q with the evolution replaced by the r-step Trotter product (TFIM only).
double f_q_trotter(const StateVector& psi, const TfimSpec& tfim_spec, double t,
                   int steps);

// Sampled F_Q, ancilla-free: run V, the Trotterized evolution, then V^dagger
// on |0...0>; return 1 - P(all zeros) estimated from m shots.
double f_q_sampled(const Circuit& ansatz, std::span<const double> params,
                   const TfimSpec& tfim_spec, double t, int steps,
                   const ShotPlan& plan);

// Shot-noise-free value of the same V -> trotter -> V^dagger protocol:
// 1 - P(all zeros) computed from the final amplitudes. Reference point for
// the shot-noise studies.
double f_q_trotter_circuit(const Circuit& ansatz, std::span<const double> params,
                           const TfimSpec& tfim_spec, double t, int steps);

/// Exact objective over ansatz parameters, with cached spectral data and a
/// finite-difference gradient. Pure given params; safe to share across
/// threads.
class CostFunction {
 public:
  static constexpr double kDefaultFdStep = 1e-6;

  // t is ignored for Variance. Throws std::invalid_argument for a Unitary
  // cost with t == 0 (F_Q would be identically zero).
  CostFunction(CostKind kind, PauliSum h, Circuit ansatz, double t = 1.0);

  CostKind kind() const { return kind_; }
  int num_parameters() const { return ansatz_.num_slots; }
  const Circuit& ansatz() const { return ansatz_; }
  const PauliSum& hamiltonian() const { return h_; }
  const Spectrum& spectrum() const { return spectrum_; }
  double evolution_time() const { return t_; }

  double value(std::span<const double> params) const;
  double value_at_state(const StateVector& psi) const;

  // Central differences, step 1e-6.
  std::vector<double> gradient(std::span<const double> params,
                               double step = kDefaultFdStep) const;

 private:
  CostKind kind_;
  PauliSum h_;
  PauliSum h_squared_;
  Circuit ansatz_;
  double t_;
  Spectrum spectrum_;
  // Dense realizations for the hot path; the PauliSum route stays the
  // independent cross-check in tests.
  Eigen::MatrixXcd h_dense_;
  Eigen::MatrixXcd h2_dense_;
  Eigen::MatrixXcd propagator_;  // Unitary only
};

}  // namespace eigencert
