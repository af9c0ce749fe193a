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

#include "eigencert/pauli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eigencert {

namespace {

constexpr Complex kI{0.0, 1.0};

bool valid_op(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

// Single-qubit product a*b -> (result op, phase power k with factor i^k).
std::pair<char, int> mul_single(char a, char b) {
  if (a == 'I') return {b, 0};
  if (b == 'I') return {a, 0};
  if (a == b) return {'I', 0};
  // Cyclic rule: XY = iZ, YZ = iX, ZX = iY; reversed order picks up i^3.
  switch (a) {
    case 'X':
      return b == 'Y' ? std::pair{'Z', 1} : std::pair{'Y', 3};  // XZ = -iY
    case 'Y':
      return b == 'Z' ? std::pair{'X', 1} : std::pair{'Z', 3};  // YX = -iZ
    default:
      return b == 'X' ? std::pair{'Y', 1} : std::pair{'X', 3};  // ZY = -iX
  }
}

Complex unit_phase(int power) {
  switch (((power % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::uint64_t ops_flip_mask(const std::string& ops) {
  const int n = static_cast<int>(ops.size());
  std::uint64_t mask = 0;
  for (int q = 0; q < n; ++q) {
    if (ops[static_cast<std::size_t>(q)] == 'X' ||
        ops[static_cast<std::size_t>(q)] == 'Y') {
      mask |= 1ULL << (n - 1 - q);
    }
  }
  return mask;
}

// <in ^ flip | P | in> for the phaseless part of the string.
Complex ops_column_factor(const std::string& ops, std::uint64_t in) {
  const int n = static_cast<int>(ops.size());
  Complex f{1.0, 0.0};
  for (int q = 0; q < n; ++q) {
    const bool bit = (in >> (n - 1 - q)) & 1ULL;
    switch (ops[static_cast<std::size_t>(q)]) {
      case 'Z':
        if (bit) f = -f;
        break;
      case 'Y':
        f *= bit ? -kI : kI;
        break;
      default:
        break;
    }
  }
  return f;
}

}  // namespace

PauliString::PauliString(int n) : ops_(static_cast<std::size_t>(n), 'I') {
  if (n < 1) throw std::invalid_argument("PauliString: qubit count must be >= 1");
}

PauliString PauliString::from_ops(std::string_view ops, int phase_power) {
  if (ops.empty()) throw std::invalid_argument("PauliString: empty operator string");
  for (char c : ops) {
    if (!valid_op(c)) {
      throw std::invalid_argument("PauliString: invalid operator letter");
    }
  }
  return PauliString(std::string(ops), phase_power);
}

PauliString PauliString::single(int n, int qubit, char op) {
  if (qubit < 0 || qubit >= n) {
    throw std::invalid_argument("PauliString: qubit index out of range");
  }
  if (!valid_op(op)) throw std::invalid_argument("PauliString: invalid operator letter");
  PauliString p(n);
  p.ops_[static_cast<std::size_t>(qubit)] = op;
  return p;
}

Complex PauliString::phase() const { return unit_phase(phase_power_); }

bool PauliString::is_identity() const {
  return ops_.find_first_not_of('I') == std::string::npos;
}

int PauliString::weight() const {
  return num_qubits() - count_op('I');
}

int PauliString::count_op(char op) const {
  return static_cast<int>(std::count(ops_.begin(), ops_.end(), op));
}

PauliString PauliString::phaseless() const { return PauliString(ops_, 0); }

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("PauliString product: qubit count mismatch");
  }
  std::string ops(a.ops_.size(), 'I');
  int power = a.phase_power_ + b.phase_power_;
  for (std::size_t q = 0; q < ops.size(); ++q) {
    auto [op, k] = mul_single(a.ops_[q], b.ops_[q]);
    ops[q] = op;
    power += k;
  }
  return PauliString(std::move(ops), power);
}

Eigen::MatrixXcd PauliString::to_dense() const {
  const int n = num_qubits();
  if (n > PauliSum::kDenseCap) {
    throw std::length_error("PauliString: dense realization over qubit cap");
  }
  const std::uint64_t dim = 1ULL << n;
  const std::uint64_t flips = ops_flip_mask(ops_);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  const Complex ph = phase();
  for (std::uint64_t in = 0; in < dim; ++in) {
    m(static_cast<Eigen::Index>(in ^ flips), static_cast<Eigen::Index>(in)) =
        ph * ops_column_factor(ops_, in);
  }
  return m;
}

std::uint64_t PauliString::flip_mask() const { return ops_flip_mask(ops_); }

Complex PauliString::column_factor(std::uint64_t in) const {
  return phase() * ops_column_factor(ops_, in);
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
  switch (p.phase_power()) {
    case 1: os << "i*"; break;
    case 2: os << "-"; break;
    case 3: os << "-i*"; break;
    default: break;
  }
  return os << p.ops();
}

PauliSum::PauliSum(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("PauliSum: qubit count must be >= 1");
}

void PauliSum::add(const PauliString& p, Complex coefficient) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("PauliSum: qubit count mismatch");
  }
  auto it = terms_.find(p.ops());
  const Complex c = coefficient * p.phase();
  if (it == terms_.end()) {
    if (std::abs(c) > kPruneTol) terms_.emplace(p.ops(), c);
  } else {
    it->second += c;
    if (std::abs(it->second) <= kPruneTol) terms_.erase(it);
  }
}

void PauliSum::add_term(std::string_view ops, Complex coefficient) {
  add(PauliString::from_ops(ops), coefficient);
}

Complex PauliSum::coefficient(std::string_view ops) const {
  auto it = terms_.find(std::string(ops));
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) throw std::invalid_argument("PauliSum: qubit count mismatch");
  for (const auto& [ops, c] : other.terms_) {
    auto it = terms_.find(ops);
    if (it == terms_.end()) {
      terms_.emplace(ops, c);
    } else {
      it->second += c;
    }
  }
  prune();
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& [ops, c] : terms_) c *= scale;
  prune();
  return *this;
}

PauliSum operator+(PauliSum a, const PauliSum& b) {
  a += b;
  return a;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("PauliSum: qubit count mismatch");
  PauliSum out(a.n_);
  for (const auto& [ops_a, ca] : a.terms_) {
    const PauliString pa = PauliString::from_ops(ops_a);
    for (const auto& [ops_b, cb] : b.terms_) {
      out.add(pa * PauliString::from_ops(ops_b), ca * cb);
    }
  }
  out.prune();
  return out;
}

PauliSum operator*(Complex scale, PauliSum a) {
  a *= scale;
  return a;
}

bool PauliSum::is_hermitian() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::abs(t.second.imag()) <= kHermitianTol;
  });
}

PauliSum PauliSum::squared() const {
  if (!is_hermitian()) {
    throw std::domain_error("PauliSum::squared: operator is not Hermitian");
  }
  return (*this) * (*this);
}

PauliSum::Decomposition PauliSum::expectation_decompose() const {
  Decomposition d;
  const std::string identity(static_cast<std::size_t>(n_), 'I');
  for (const auto& [ops, c] : terms_) {
    if (ops == identity) {
      d.constant = c.real();
    } else {
      d.terms.emplace_back(PauliString::from_ops(ops), c.real());
    }
  }
  return d;
}

Eigen::MatrixXcd PauliSum::to_dense() const {
  if (n_ > kDenseCap) {
    throw std::length_error("PauliSum: dense realization over qubit cap");
  }
  const std::uint64_t dim = 1ULL << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& [ops, c] : terms_) {
    const std::uint64_t flips = ops_flip_mask(ops);
    for (std::uint64_t in = 0; in < dim; ++in) {
      m(static_cast<Eigen::Index>(in ^ flips), static_cast<Eigen::Index>(in)) +=
          c * ops_column_factor(ops, in);
    }
  }
  return m;
}

PauliSum PauliSum::from_dense(const Eigen::MatrixXcd& m, int n) {
  if (n > kDenseCap) {
    throw std::length_error("PauliSum: dense conversion over qubit cap");
  }
  const std::uint64_t dim = 1ULL << n;
  if (m.rows() != static_cast<Eigen::Index>(dim) ||
      m.cols() != static_cast<Eigen::Index>(dim)) {
    throw std::invalid_argument("PauliSum::from_dense: matrix dimension mismatch");
  }
  PauliSum out(n);
  // Enumerate all 4^n strings in lexicographic order; coefficient is
  // Tr(P m) / 2^n.
  std::string ops(static_cast<std::size_t>(n), 'I');
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  const std::uint64_t total = 1ULL << (2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int q = n - 1; q >= 0; --q) {
      ops[static_cast<std::size_t>(q)] = letters[c & 3];
      c >>= 2;
    }
    const std::uint64_t flips = ops_flip_mask(ops);
    Complex trace{0.0, 0.0};
    for (std::uint64_t j = 0; j < dim; ++j) {
      trace += ops_column_factor(ops, j) *
               m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j ^ flips));
    }
    const Complex coeff = trace / static_cast<double>(dim);
    if (std::abs(coeff) > kPruneTol) {
      out.terms_.emplace(ops, coeff);
    }
  }
  return out;
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[128];
  for (const auto& [ops, c] : terms_) {
    if (std::abs(c.imag()) <= kHermitianTol) {
      std::snprintf(buf, sizeof buf, "%.17g\t%s\n", c.real(), ops.c_str());
    } else {
      std::snprintf(buf, sizeof buf, "(%.17g,%.17g)\t%s\n", c.real(), c.imag(),
                    ops.c_str());
    }
    out += buf;
  }
  return out;
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  PauliSum out(1);
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::invalid_argument("PauliSum::from_text: missing tab separator");
    }
    const std::string coeff_str = line.substr(0, tab);
    const std::string ops = line.substr(tab + 1);
    Complex coeff;
    if (!coeff_str.empty() && coeff_str.front() == '(') {
      double re = 0.0, im = 0.0;
      if (std::sscanf(coeff_str.c_str(), "(%lg,%lg)", &re, &im) != 2) {
        throw std::invalid_argument("PauliSum::from_text: bad coefficient");
      }
      coeff = {re, im};
    } else {
      coeff = {std::stod(coeff_str), 0.0};
    }
    if (first) {
      out = PauliSum(static_cast<int>(ops.size()));
      first = false;
    }
    out.add_term(ops, coeff);
  }
  if (first) throw std::invalid_argument("PauliSum::from_text: empty input");
  return out;
}

void PauliSum::prune() {
  std::erase_if(terms_, [](const auto& t) {
    return std::abs(t.second) <= kPruneTol;
  });
}

}  // namespace eigencert
