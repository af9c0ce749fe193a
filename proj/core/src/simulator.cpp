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

#include "eigencert/simulator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eigencert/rng.hpp"

namespace eigencert {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInvSqrt2 = 0.70710678118654752440;

struct Matrix2 {
  Complex a, b, c, d;  // [[a, b], [c, d]]
};

Matrix2 gate_matrix(const Gate& g, std::span<const double> params) {
  switch (g.kind) {
    case Gate::Kind::RX: {
      const double th = g.angle(params);
      return {std::cos(th), -kI * std::sin(th), -kI * std::sin(th), std::cos(th)};
    }
    case Gate::Kind::RY:
    case Gate::Kind::CRY: {
      const double th = g.angle(params);
      return {Complex{std::cos(th), 0.0}, Complex{-std::sin(th), 0.0},
              Complex{std::sin(th), 0.0}, Complex{std::cos(th), 0.0}};
    }
    case Gate::Kind::RZ: {
      const double th = g.angle(params);
      return {std::exp(-kI * th), {0.0, 0.0}, {0.0, 0.0}, std::exp(kI * th)};
    }
    case Gate::Kind::H:
      return {{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, {-kInvSqrt2, 0.0}};
    case Gate::Kind::S:
      return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, kI};
    default:  // SDG
      return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, -kI};
  }
}

bool is_rotation(Gate::Kind k) {
  return k == Gate::Kind::RX || k == Gate::Kind::RY || k == Gate::Kind::RZ ||
         k == Gate::Kind::CRY;
}

}  // namespace

StateVector StateVector::zero_state(int n) { return basis_state(n, 0); }

StateVector StateVector::basis_state(int n, std::uint64_t index) {
  if (n < 1 || n > PauliSum::kDenseCap) {
    throw std::length_error("StateVector: qubit count out of range");
  }
  std::vector<Complex> amp(1ULL << n, Complex{0.0, 0.0});
  amp.at(index) = Complex{1.0, 0.0};
  return StateVector(n, std::move(amp));
}

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amp_(std::move(amplitudes)) {
  if (amp_.size() != (1ULL << n_)) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^n");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw std::domain_error("StateVector: cannot normalize zero vector");
  for (Complex& a : amp_) a /= nrm;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("StateVector::inner: dimension mismatch");
  }
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    s += std::conj(amp_[i]) * other.amp_[i];
  }
  return s;
}

Gate Gate::rx(int target, int slot) {
  return {Kind::RX, target, -1, slot, 0.0, true};
}
Gate Gate::ry(int target, int slot) {
  return {Kind::RY, target, -1, slot, 0.0, true};
}
Gate Gate::rz(int target, int slot) {
  return {Kind::RZ, target, -1, slot, 0.0, true};
}
Gate Gate::cry(int control, int target, int slot) {
  return {Kind::CRY, target, control, slot, 0.0, true};
}
Gate Gate::rx_fixed(int target, double angle) {
  return {Kind::RX, target, -1, -1, angle, false};
}
Gate Gate::ry_fixed(int target, double angle) {
  return {Kind::RY, target, -1, -1, angle, false};
}
Gate Gate::rz_fixed(int target, double angle) {
  return {Kind::RZ, target, -1, -1, angle, false};
}
Gate Gate::cry_fixed(int control, int target, double angle) {
  return {Kind::CRY, target, control, -1, angle, false};
}
Gate Gate::h(int target) { return {Kind::H, target, -1, -1, 0.0, false}; }
Gate Gate::s(int target) { return {Kind::S, target, -1, -1, 0.0, false}; }
Gate Gate::sdg(int target) { return {Kind::SDG, target, -1, -1, 0.0, false}; }

double Gate::angle(std::span<const double> params) const {
  if (!is_rotation(kind)) return 0.0;
  if (has_slot) {
    if (param_slot < 0 || static_cast<std::size_t>(param_slot) >= params.size()) {
      throw std::invalid_argument("Gate: parameter slot out of range");
    }
    return params[static_cast<std::size_t>(param_slot)];
  }
  return fixed_angle;
}

void Circuit::append(Gate g) {
  gates.push_back(g);
  if (g.has_slot) num_slots = std::max(num_slots, g.param_slot + 1);
}

Circuit Circuit::bind(std::span<const double> params) const {
  if (static_cast<int>(params.size()) < num_slots) {
    throw std::invalid_argument("Circuit::bind: parameter vector too short");
  }
  Circuit bound;
  bound.n = n;
  for (Gate g : gates) {
    if (g.has_slot) {
      g.fixed_angle = g.angle(params);
      g.has_slot = false;
      g.param_slot = -1;
    }
    bound.gates.push_back(g);
  }
  return bound;
}

Circuit Circuit::inverse() const {
  Circuit inv;
  inv.n = n;
  inv.num_slots = num_slots;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    if (is_rotation(g.kind)) {
      if (g.has_slot) {
        throw std::logic_error(
            "Circuit::inverse: bind parameters before inverting");
      }
      g.fixed_angle = -g.fixed_angle;
    } else if (g.kind == Gate::Kind::S) {
      g.kind = Gate::Kind::SDG;
    } else if (g.kind == Gate::Kind::SDG) {
      g.kind = Gate::Kind::S;
    }
    inv.gates.push_back(g);
  }
  return inv;
}

std::string Circuit::diagram() const {
  std::vector<std::string> lines(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    lines[static_cast<std::size_t>(q)] = "q" + std::to_string(q) + ": ";
  }
  auto pad = [&lines] {
    std::size_t width = 0;
    for (const auto& l : lines) width = std::max(width, l.size());
    for (auto& l : lines) l.resize(width, '-');
  };
  for (const Gate& g : gates) {
    pad();
    std::string label;
    switch (g.kind) {
      case Gate::Kind::RX: label = "RX"; break;
      case Gate::Kind::RY: label = "RY"; break;
      case Gate::Kind::RZ: label = "RZ"; break;
      case Gate::Kind::CRY: label = "RY"; break;
      case Gate::Kind::H: label = "H"; break;
      case Gate::Kind::S: label = "S"; break;
      case Gate::Kind::SDG: label = "Sdg"; break;
    }
    if (g.has_slot) label += "(t" + std::to_string(g.param_slot) + ")";
    lines[static_cast<std::size_t>(g.target)] += "[" + label + "]";
    if (g.kind == Gate::Kind::CRY) {
      lines[static_cast<std::size_t>(g.control)] += "[*]";
    }
  }
  pad();
  std::ostringstream out;
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

void apply_gate_in_place(StateVector& state, const Gate& gate,
                         std::span<const double> params) {
  const int n = state.num_qubits();
  if (gate.target < 0 || gate.target >= n ||
      (gate.kind == Gate::Kind::CRY &&
       (gate.control < 0 || gate.control >= n || gate.control == gate.target))) {
    throw std::invalid_argument("apply_gate: qubit index out of range");
  }
  const Matrix2 m = gate_matrix(gate, params);
  auto& amp = state.amplitudes();
  const std::uint64_t dim = state.dim();
  const std::uint64_t tbit = 1ULL << (n - 1 - gate.target);
  const std::uint64_t cbit =
      gate.kind == Gate::Kind::CRY ? 1ULL << (n - 1 - gate.control) : 0;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & tbit) continue;
    if (cbit && !(i & cbit)) continue;
    const std::uint64_t j = i | tbit;
    const Complex a0 = amp[i];
    const Complex a1 = amp[j];
    amp[i] = m.a * a0 + m.b * a1;
    amp[j] = m.c * a0 + m.d * a1;
  }
}

StateVector apply_gate(const StateVector& state, const Gate& gate,
                       std::span<const double> params) {
  StateVector out = state;
  apply_gate_in_place(out, gate, params);
  return out;
}

StateVector apply_circuit(const Circuit& circuit, const StateVector& state,
                          std::span<const double> params) {
  if (circuit.n != state.num_qubits()) {
    throw std::invalid_argument("apply_circuit: dimension mismatch");
  }
  if (static_cast<int>(params.size()) < circuit.num_slots) {
    throw std::invalid_argument("apply_circuit: parameter vector too short");
  }
  StateVector out = state;
  for (const Gate& g : circuit.gates) apply_gate_in_place(out, g, params);
  return out;
}

StateVector run_circuit(const Circuit& circuit, std::span<const double> params) {
  return apply_circuit(circuit, StateVector::zero_state(circuit.n), params);
}

StateVector apply_pauli(const PauliString& p, const StateVector& state) {
  if (p.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("apply_pauli: dimension mismatch");
  }
  const std::uint64_t dim = state.dim();
  const std::uint64_t flips = p.flip_mask();
  std::vector<Complex> out(dim);
  const auto& amp = state.amplitudes();
  for (std::uint64_t in = 0; in < dim; ++in) {
    out[in ^ flips] = p.column_factor(in) * amp[in];
  }
  return StateVector(state.num_qubits(), std::move(out));
}

double expectation(const StateVector& state, const PauliSum& h) {
  if (h.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  if (!h.is_hermitian()) {
    throw std::domain_error("expectation: operator is not Hermitian");
  }
  const auto& amp = state.amplitudes();
  const std::uint64_t dim = state.dim();
  Complex total{0.0, 0.0};
  for (const auto& [ops, c] : h.terms()) {
    const PauliString p = PauliString::from_ops(ops);
    const std::uint64_t flips = p.flip_mask();
    Complex term{0.0, 0.0};
    for (std::uint64_t in = 0; in < dim; ++in) {
      term += std::conj(amp[in ^ flips]) * p.column_factor(in) * amp[in];
    }
    total += c * term;
  }
  if (std::abs(total.imag()) >= 1e-9) {
    throw std::domain_error("expectation: imaginary residue above tolerance");
  }
  return total.real();
}

StateVector evolve_exact(const StateVector& state, const PauliSum& h, double t) {
  if (h.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("evolve_exact: dimension mismatch");
  }
  const Eigen::MatrixXcd dense = h.to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("evolve_exact: eigendecomposition failed");
  }
  const std::uint64_t dim = state.dim();
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    psi(static_cast<Eigen::Index>(i)) = state.amplitudes()[i];
  }
  Eigen::VectorXcd coeffs = solver.eigenvectors().adjoint() * psi;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    coeffs(j) *= std::exp(-kI * solver.eigenvalues()(j) * t);
  }
  psi = solver.eigenvectors() * coeffs;
  std::vector<Complex> out(dim);
  for (std::uint64_t i = 0; i < dim; ++i) out[i] = psi(static_cast<Eigen::Index>(i));
  return StateVector(state.num_qubits(), std::move(out));
}

StateVector evolve_trotter(const StateVector& state, double coupling,
                           double field, double t, int steps) {
  if (steps < 1) throw std::invalid_argument("evolve_trotter: steps must be >= 1");
  const int n = state.num_qubits();
  const std::uint64_t dim = state.dim();
  // ZZ layer is diagonal; precompute the per-basis phase for one step.
  const double alpha = coupling * t / steps;
  std::vector<Complex> zz_phase(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    int parity_sum = 0;  // sum over bonds of z_j z_{j+1}, periodic
    for (int q = 0; q < n; ++q) {
      const int z1 = (b >> (n - 1 - q)) & 1 ? -1 : 1;
      const int z2 = (b >> (n - 1 - (q + 1) % n)) & 1 ? -1 : 1;
      parity_sum += z1 * z2;
    }
    zz_phase[b] = std::exp(kI * alpha * static_cast<double>(parity_sum));
  }
  const double beta = coupling * field * t / steps;
  // e^{+i beta X}
  const Matrix2 x_rot{Complex{std::cos(beta), 0.0}, kI * std::sin(beta),
                      kI * std::sin(beta), Complex{std::cos(beta), 0.0}};
  StateVector out = state;
  auto& amp = out.amplitudes();
  for (int step = 0; step < steps; ++step) {
    for (std::uint64_t b = 0; b < dim; ++b) amp[b] *= zz_phase[b];
    for (int q = 0; q < n; ++q) {
      const std::uint64_t tbit = 1ULL << (n - 1 - q);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & tbit) continue;
        const std::uint64_t j = i | tbit;
        const Complex a0 = amp[i];
        const Complex a1 = amp[j];
        amp[i] = x_rot.a * a0 + x_rot.b * a1;
        amp[j] = x_rot.c * a0 + x_rot.d * a1;
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> sample_bitstrings(const StateVector& state,
                                             const ShotPlan& plan) {
  if (plan.shots < 1) throw std::invalid_argument("sample_bitstrings: shots must be >= 1");
  const std::uint64_t dim = state.dim();
  std::vector<double> cumulative(dim);
  double acc = 0.0;
  for (std::uint64_t b = 0; b < dim; ++b) {
    acc += std::norm(state.amplitudes()[b]);
    cumulative[b] = acc;
  }
  Xoshiro256StarStar rng(plan.rng_seed);
  std::vector<std::uint64_t> draws(static_cast<std::size_t>(plan.shots));
  for (auto& d : draws) {
    const double u = rng.uniform() * acc;
    d = static_cast<std::uint64_t>(
        std::lower_bound(cumulative.begin(), cumulative.end(), u) -
        cumulative.begin());
    if (d >= dim) d = dim - 1;
  }
  return draws;
}

double estimate_expectation_sampled(const Circuit& circuit,
                                    std::span<const double> params,
                                    const PauliSum& h, const ShotPlan& plan) {
  const StateVector base = run_circuit(circuit, params);
  const auto decomposition = h.expectation_decompose();
  double total = decomposition.constant;
  std::uint64_t term_index = 0;
  for (const auto& [term, coeff] : decomposition.terms) {
    StateVector rotated = base;
    std::uint64_t support = 0;
    const int n = term.num_qubits();
    for (int q = 0; q < n; ++q) {
      switch (term.op(q)) {
        case 'X':
          apply_gate_in_place(rotated, Gate::h(q));
          break;
        case 'Y':
          apply_gate_in_place(rotated, Gate::sdg(q));
          apply_gate_in_place(rotated, Gate::h(q));
          break;
        default:
          break;
      }
      if (term.op(q) != 'I') support |= 1ULL << (n - 1 - q);
    }
    const ShotPlan term_plan{plan.shots,
                             derive_seed(plan.rng_seed, {term_index++})};
    const auto draws = sample_bitstrings(rotated, term_plan);
    double parity_sum = 0.0;
    for (std::uint64_t d : draws) {
      parity_sum += (std::popcount(d & support) & 1) ? -1.0 : 1.0;
    }
    total += coeff * parity_sum / static_cast<double>(plan.shots);
  }
  return total;
}

}  // namespace eigencert
