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

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eigencert {

using Complex = std::complex<double>;

/// Tensor product of single-qubit Pauli operators with a unit phase i^k.
///
/// Qubit 0 is the leftmost tensor factor; a string is printed as its
/// operator letters in qubit order, e.g. "ZZII".
class PauliString {
 public:
  // Identity on n qubits.
  explicit PauliString(int n);

  // From operator letters, e.g. "XIZ". phase_power k encodes the phase i^k.
  static PauliString from_ops(std::string_view ops, int phase_power = 0);

  // Single-site operator embedded in an n-qubit identity string.
  static PauliString single(int n, int qubit, char op);

  int num_qubits() const { return static_cast<int>(ops_.size()); }
  const std::string& ops() const { return ops_; }
  char op(int qubit) const { return ops_[static_cast<std::size_t>(qubit)]; }

  int phase_power() const { return phase_power_; }
  Complex phase() const;

  bool is_identity() const;
  // Number of non-identity factors.
  int weight() const;
  int count_op(char op) const;

  // Same string with phase reset to +1.
  PauliString phaseless() const;

  // Product with exact phase tracking. Throws std::invalid_argument on a
  // qubit-count mismatch.
  friend PauliString operator*(const PauliString& a, const PauliString& b);

  // Dense 2^n x 2^n realization including the phase.
  Eigen::MatrixXcd to_dense() const;

  // Sparse action on basis states: P|in> = column_factor(in) |in ^ flip_mask()>.
  std::uint64_t flip_mask() const;
  Complex column_factor(std::uint64_t in) const;

  bool operator==(const PauliString& other) const = default;

 private:
  PauliString(std::string ops, int phase_power)
      : ops_(std::move(ops)), phase_power_(((phase_power % 4) + 4) % 4) {}

  std::string ops_;
  int phase_power_ = 0;  // phase is i^phase_power_
};

std::ostream& operator<<(std::ostream& os, const PauliString& p);

/// Weighted sum of Pauli strings, the universal Hamiltonian representation.
///
/// Canonical form: stored strings carry phase +1 (phases are folded into
/// the coefficients), keys are unique and ordered lexicographically over
/// the operator letters, and terms with |coefficient| <= kPruneTol are
/// dropped.
class PauliSum {
 public:
  static constexpr double kPruneTol = 1e-12;
  static constexpr double kHermitianTol = 1e-12;
  // Dense realizations are refused above this qubit count.
  static constexpr int kDenseCap = 12;

  explicit PauliSum(int n);

  int num_qubits() const { return n_; }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<std::string, Complex>& terms() const { return terms_; }

  void add(const PauliString& p, Complex coefficient);
  void add_term(std::string_view ops, Complex coefficient);
  Complex coefficient(std::string_view ops) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);
  friend PauliSum operator+(PauliSum a, const PauliSum& b);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(Complex scale, PauliSum a);

  // All coefficients real within kHermitianTol.
  bool is_hermitian() const;

  // h*h, canonicalized. Precondition: Hermitian.
  PauliSum squared() const;

  // One entry per stored non-identity term; the identity coefficient is
  // returned separately since its expectation needs no circuit.
  struct Decomposition {
    double constant = 0.0;  // identity-term coefficient
    std::vector<std::pair<PauliString, double>> terms;
  };
  Decomposition expectation_decompose() const;

  // Dense Kronecker-product realization. Throws on n > kDenseCap.
  Eigen::MatrixXcd to_dense() const;

  // From a dense Hermitian matrix via trace inner products with all 4^n
  // Pauli strings.
  static PauliSum from_dense(const Eigen::MatrixXcd& m, int n);

  // One term per line: coefficient<TAB>letters, 17 significant digits.
  std::string to_text() const;
  static PauliSum from_text(std::string_view text);

 private:
  void prune();

  int n_;
  std::map<std::string, Complex> terms_;
};

}  // namespace eigencert
