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
#include <span>
#include <string>
#include <vector>

#include "eigencert/pauli.hpp"

namespace eigencert {

/// Dense amplitude vector over n qubits. Qubit 0 is the leftmost tensor
/// factor, so basis index b holds qubit q in bit (n-1-q) (big-endian).
class StateVector {
 public:
  static StateVector zero_state(int n);
  static StateVector basis_state(int n, std::uint64_t index);
  StateVector(int n, std::vector<Complex> amplitudes);

  int num_qubits() const { return n_; }
  std::uint64_t dim() const { return 1ULL << n_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  std::vector<Complex>& amplitudes() { return amp_; }
  Complex amplitude(std::uint64_t index) const { return amp_[index]; }

  double norm() const;
  void normalize();

  Complex inner(const StateVector& other) const;  // <this|other>

 private:
  int n_;
  std::vector<Complex> amp_;
};

/// One circuit element. Rotation convention is the full-angle form
/// R_sigma(theta) = exp(-i theta sigma); no implicit half angle.
struct Gate {
  enum class Kind { RX, RY, RZ, CRY, H, S, SDG };

  Kind kind;
  int target = 0;
  int control = -1;        // CRY only
  int param_slot = -1;     // exclusive with fixed_angle for rotations
  double fixed_angle = 0.0;
  bool has_slot = false;

  static Gate rx(int target, int slot);
  static Gate ry(int target, int slot);
  static Gate rz(int target, int slot);
  static Gate cry(int control, int target, int slot);
  static Gate rx_fixed(int target, double angle);
  static Gate ry_fixed(int target, double angle);
  static Gate rz_fixed(int target, double angle);
  static Gate cry_fixed(int control, int target, double angle);
  static Gate h(int target);
  static Gate s(int target);
  static Gate sdg(int target);

  double angle(std::span<const double> params) const;
};

/// Ordered gate list with parameter slots.
struct Circuit {
  int n = 0;
  int num_slots = 0;
  std::vector<Gate> gates;

  void append(Gate g);
  // Copy with every parameter slot replaced by its bound angle.
  Circuit bind(std::span<const double> params) const;
  // Reversed gate order with negated angles; parameters must be bound first.
  Circuit inverse() const;
  // One line per qubit, for docs and tests.
  std::string diagram() const;
};

/// Finite-shot emulation plan.
struct ShotPlan {
  int shots = 1000;
  std::uint64_t rng_seed = 0;
};

void apply_gate_in_place(StateVector& state, const Gate& gate,
                         std::span<const double> params = {});
StateVector apply_gate(const StateVector& state, const Gate& gate,
                       std::span<const double> params = {});

StateVector apply_circuit(const Circuit& circuit, const StateVector& state,
                          std::span<const double> params);
// U(params) |0...0>
StateVector run_circuit(const Circuit& circuit, std::span<const double> params);

StateVector apply_pauli(const PauliString& p, const StateVector& state);

// <psi|H|psi> for Hermitian H. Throws std::domain_error on a non-Hermitian
// sum, std::invalid_argument on dimension mismatch.
double expectation(const StateVector& state, const PauliSum& h);

// exp(-iHt)|psi> via dense eigendecomposition.
StateVector evolve_exact(const StateVector& state, const PauliSum& h, double t);

// r-step first-order Trotter product for the periodic TFIM
// H = J sum_j (Z_j Z_{j+1} + h X_j). Applies
// (prod_j e^{+i J t ZZ / r} prod_j e^{+i J h t X / r})^r, i.e. the
// approximation of U = e^{+iHt}; pass -t for the e^{-iHt} direction.
StateVector evolve_trotter(const StateVector& state, double coupling,
                           double field, double t, int steps);

// m seeded draws from the |amplitude|^2 distribution, in draw order.
std::vector<std::uint64_t> sample_bitstrings(const StateVector& state,
                                             const ShotPlan& plan);

// Per-term sampled estimate of <psi|H|psi> where |psi> = circuit|0...0>.
// Each non-identity term gets its own basis-change circuit and m shots
// (H for X, SDG then H for Y), no term grouping.
double estimate_expectation_sampled(const Circuit& circuit,
                                    std::span<const double> params,
                                    const PauliSum& h, const ShotPlan& plan);

}  // namespace eigencert
