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

#include "eigencert/models.hpp"

#include <stdexcept>

#include "eigencert/rng.hpp"

namespace eigencert {

namespace {

constexpr Complex kI{0.0, 1.0};

// sigma^+/- on one site of an n-qubit register, as two-term PauliSums.
PauliSum sigma_plus(int n, int qubit) {
  PauliSum s(n);
  s.add(PauliString::single(n, qubit, 'X'), 0.5);
  s.add(PauliString::single(n, qubit, 'Y'), 0.5 * kI);
  return s;
}

PauliSum sigma_minus(int n, int qubit) {
  PauliSum s(n);
  s.add(PauliString::single(n, qubit, 'X'), 0.5);
  s.add(PauliString::single(n, qubit, 'Y'), -0.5 * kI);
  return s;
}

// Jordan-Wigner ladder operators: Z string on sites below the target.
PauliSum jw_ladder(int n, int site, bool creation) {
  PauliSum op = creation ? sigma_plus(n, site) : sigma_minus(n, site);
  PauliSum z_string(n);
  std::string ops(static_cast<std::size_t>(n), 'I');
  for (int k = 0; k < site; ++k) ops[static_cast<std::size_t>(k)] = 'Z';
  z_string.add_term(ops, 1.0);
  return z_string * op;
}

// n_j = (I - Z_j) / 2
PauliSum number_op(int n, int site) {
  PauliSum op(n);
  op.add(PauliString(n), 0.5);
  op.add(PauliString::single(n, site, 'Z'), -0.5);
  return op;
}

}  // namespace

PauliSum tfim(const TfimSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("tfim: need at least 2 qubits");
  PauliSum h(spec.n);
  for (int j = 0; j < spec.n; ++j) {
    // Periodic closure: the bond (n-1, 0) realizes Z_n Z_{n+1} = Z_1 Z_n.
    std::string ops(static_cast<std::size_t>(spec.n), 'I');
    ops[static_cast<std::size_t>(j)] = 'Z';
    ops[static_cast<std::size_t>((j + 1) % spec.n)] = 'Z';
    h.add_term(ops, spec.coupling);
    if (spec.field != 0.0) {
      h.add(PauliString::single(spec.n, j, 'X'), spec.coupling * spec.field);
    }
  }
  return h;
}

PauliSum schwinger(const SchwingerSpec& spec) {
  if (spec.n < 2 || spec.n % 2 != 0) {
    throw std::invalid_argument("schwinger: n must be even and >= 2");
  }
  const int n = spec.n;
  PauliSum h(n);
  // Hopping, open boundary: site n+1 is undefined in the staggered chain.
  for (int j = 0; j < n - 1; ++j) {
    h += sigma_plus(n, j) * sigma_minus(n, j + 1);
    h += sigma_minus(n, j) * sigma_plus(n, j + 1);
  }
  // Staggered mass; (-1)^j with 1-based site index j.
  for (int j = 1; j <= n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    h.add(PauliString::single(n, j - 1, 'Z'), 0.5 * spec.mass * sign);
  }
  // Gauge-field energy: L_j = -1/2 sum_{i<=j} [Z_i + (-1)^i I], squared.
  for (int j = 1; j <= n; ++j) {
    PauliSum l(n);
    for (int i = 1; i <= j; ++i) {
      l.add(PauliString::single(n, i - 1, 'Z'), -0.5);
      l.add(PauliString(n), (i % 2 == 0) ? -0.5 : 0.5);
    }
    h += l * l;
  }
  return h;
}

PauliSum fermions_jw(const FermionSpec& spec) {
  if (spec.n < 3) {
    throw std::invalid_argument("fermions_jw: need at least 3 sites");
  }
  const int n = spec.n;
  PauliSum h(n);
  // Hopping over nearest-neighbor bonds, both orientations, periodic.
  for (int j = 0; j < n; ++j) {
    const int k = (j + 1) % n;
    h += Complex{-spec.hopping, 0.0} *
         (jw_ladder(n, j, true) * jw_ladder(n, k, false) +
          jw_ladder(n, k, true) * jw_ladder(n, j, false));
  }
  // Density-density interactions with periodic index wrap.
  for (int j = 0; j < n; ++j) {
    h += Complex{spec.u1, 0.0} * (number_op(n, j) * number_op(n, (j + 1) % n));
    h += Complex{spec.u2, 0.0} * (number_op(n, j) * number_op(n, (j + 2) % n));
  }
  return h;
}

PauliSum fermion_number_operator(int n) {
  PauliSum total(n);
  for (int j = 0; j < n; ++j) total += number_op(n, j);
  return total;
}

Eigen::MatrixXcd random_hermitian_dense(const RandomHermitianSpec& spec) {
  if (spec.n < 1 || spec.n > PauliSum::kDenseCap) {
    throw std::invalid_argument("random_hermitian: qubit count out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << spec.n;
  Xoshiro256StarStar rng(spec.seed);
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = Complex{rng.normal(), rng.normal()};
    }
  }
  return spec.scale * 0.5 * (a + a.adjoint()).eval();
}

PauliSum random_hermitian(const RandomHermitianSpec& spec) {
  return PauliSum::from_dense(random_hermitian_dense(spec), spec.n);
}

}  // namespace eigencert
