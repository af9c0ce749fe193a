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

#include "eigencert/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace eigencert {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::VectorXcd to_eigen(const StateVector& psi) {
  const auto& amp = psi.amplitudes();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amp.size()));
  for (std::size_t i = 0; i < amp.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = amp[i];
  }
  return v;
}

StateVector from_eigen(int n, const Eigen::VectorXcd& v) {
  std::vector<Complex> amp(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    amp[static_cast<std::size_t>(i)] = v(i);
  }
  return StateVector(n, std::move(amp));
}

// Degenerate-subspace boundaries: index of the first eigenvalue of each
// group, plus a final sentinel.
std::vector<int> subspace_starts(const Eigen::VectorXd& lambdas) {
  const double scale = std::max(lambdas.cwiseAbs().maxCoeff(), 1.0);
  std::vector<int> starts{0};
  for (Eigen::Index j = 1; j < lambdas.size(); ++j) {
    if (lambdas(j) - lambdas(j - 1) > kDegeneracyRelTol * scale) {
      starts.push_back(static_cast<int>(j));
    }
  }
  starts.push_back(static_cast<int>(lambdas.size()));
  return starts;
}

}  // namespace

StateVector Spectrum::eigenstate(int index) const {
  return from_eigen(n, eigenvectors.col(index));
}

Spectrum diagonalize(const PauliSum& h) {
  if (!h.is_hermitian()) {
    throw std::domain_error("diagonalize: operator is not Hermitian");
  }
  return diagonalize_dense(h.to_dense(), h.num_qubits());
}

Spectrum diagonalize_dense(const Eigen::MatrixXcd& m, int n) {
  if (n > PauliSum::kDenseCap) {
    throw std::length_error("diagonalize: qubit count over dense cap");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("diagonalize: eigendecomposition failed");
  }
  return Spectrum{n, solver.eigenvalues(), solver.eigenvectors()};
}

double overlap(const StateVector& psi, const StateVector& phi) {
  return std::norm(psi.inner(phi));
}

ClosestEigenstate closest_eigenstate(const StateVector& psi,
                                     const Spectrum& spectrum) {
  const Eigen::VectorXcd v = to_eigen(psi);
  const Eigen::VectorXd weights =
      (spectrum.eigenvectors.adjoint() * v).cwiseAbs2();
  const auto starts = subspace_starts(spectrum.eigenvalues);
  ClosestEigenstate best;
  best.overlap = -1.0;
  for (std::size_t g = 0; g + 1 < starts.size(); ++g) {
    double w = 0.0;
    for (int j = starts[g]; j < starts[g + 1]; ++j) w += weights(j);
    if (w > best.overlap) {
      best.overlap = w;
      best.index = starts[g];
    }
  }
  return best;
}

double subspace_overlap(const StateVector& psi, const Spectrum& spectrum,
                        int member_index) {
  const Eigen::VectorXcd v = to_eigen(psi);
  const Eigen::VectorXd weights =
      (spectrum.eigenvectors.adjoint() * v).cwiseAbs2();
  const auto starts = subspace_starts(spectrum.eigenvalues);
  for (std::size_t g = 0; g + 1 < starts.size(); ++g) {
    if (member_index >= starts[g] && member_index < starts[g + 1]) {
      double w = 0.0;
      for (int j = starts[g]; j < starts[g + 1]; ++j) w += weights(j);
      return w;
    }
  }
  throw std::invalid_argument("subspace_overlap: index out of range");
}

EnergyBoundCheck check_energy_bound(const StateVector& psi, const PauliSum& h,
                                    const Spectrum& spectrum) {
  EnergyBoundCheck out;
  out.energy = expectation(psi, h);
  const double h2 = expectation(psi, h.squared());
  out.sqrt_variance = std::sqrt(std::max(h2 - out.energy * out.energy, 0.0));
  double best = std::abs(out.energy - spectrum.eigenvalues(0));
  out.nearest_eigenvalue = spectrum.eigenvalues(0);
  for (Eigen::Index j = 1; j < spectrum.eigenvalues.size(); ++j) {
    const double d = std::abs(out.energy - spectrum.eigenvalues(j));
    if (d < best) {
      best = d;
      out.nearest_eigenvalue = spectrum.eigenvalues(j);
    }
  }
  out.holds = best <= out.sqrt_variance + 1e-9;
  return out;
}

double PerturbationData::d_squared() const {
  double s = 0.0;
  for (Eigen::Index j = 0; j < lambdas.size(); ++j) {
    s += std::norm(coefficients(j)) * lambdas(j) * lambdas(j);
  }
  return s;
}

double PerturbationData::e() const {
  double s = 0.0;
  for (Eigen::Index j = 0; j < lambdas.size(); ++j) {
    s += std::norm(coefficients(j)) * lambdas(j);
  }
  return s;
}

PerturbationData PerturbationData::from_spectrum(
    const Spectrum& spectrum, int target, const Eigen::VectorXcd& rest_coeffs,
    double epsilon) {
  const Eigen::Index dim = spectrum.eigenvalues.size();
  if (rest_coeffs.size() != dim - 1) {
    throw std::invalid_argument(
        "PerturbationData: need one coefficient per non-target eigenvector");
  }
  const double norm = rest_coeffs.norm();
  if (norm <= 0.0) {
    throw std::invalid_argument("PerturbationData: zero tail vector");
  }
  PerturbationData pd;
  pd.epsilon = epsilon;
  pd.lambda1 = spectrum.eigenvalues(target);
  pd.coefficients = rest_coeffs / norm;
  pd.lambdas.resize(dim - 1);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (j == target) continue;
    pd.lambdas(k++) = spectrum.eigenvalues(j);
  }
  return pd;
}

StateVector PerturbationData::realize(const Spectrum& spectrum,
                                      int target) const {
  const Eigen::Index dim = spectrum.eigenvalues.size();
  Eigen::VectorXcd v = spectrum.eigenvectors.col(target);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (j == target) continue;
    v += epsilon * coefficients(k++) * spectrum.eigenvectors.col(j);
  }
  v /= std::sqrt(1.0 + epsilon * epsilon);
  return from_eigen(spectrum.n, v);
}

VarianceExpansion variance_expansion(const PerturbationData& pd) {
  const double d2 = pd.d_squared();
  const double e = pd.e();
  const double l1 = pd.lambda1;
  VarianceExpansion ex;
  ex.quadratic = l1 * l1 + d2 - 2.0 * e * l1;
  ex.quartic = -(d2 + e * e + 2.0 * l1 * l1 - 4.0 * e * l1);
  return ex;
}

double epsilon_squared_from_delta(const PerturbationData& pd, double delta) {
  const double d2 = pd.d_squared();
  const double e = pd.e();
  const double l1 = pd.lambda1;
  const double a = l1 * l1 + d2 - 2.0 * e * l1;
  const double b = d2 + e * e + 2.0 * l1 * l1 - 4.0 * e * l1;
  return delta / a + 3.0 * b / (a * a * a) * delta * delta;
}

double fq_expansion(const PerturbationData& pd, double t) {
  double cos_sum = 0.0;
  for (Eigen::Index j = 0; j < pd.lambdas.size(); ++j) {
    cos_sum += std::norm(pd.coefficients(j)) *
               std::cos((pd.lambdas(j) - pd.lambda1) * t);
  }
  return 2.0 * pd.epsilon * pd.epsilon * (1.0 - cos_sum);
}

Eigen::MatrixXcd propagator(const Spectrum& spectrum, double t) {
  Eigen::VectorXcd phases(spectrum.eigenvalues.size());
  for (Eigen::Index j = 0; j < phases.size(); ++j) {
    phases(j) = std::exp(-kI * spectrum.eigenvalues(j) * t);
  }
  return spectrum.eigenvectors * phases.asDiagonal() *
         spectrum.eigenvectors.adjoint();
}

StateVector evolve_with_spectrum(const Spectrum& spectrum,
                                 const StateVector& psi, double t) {
  Eigen::VectorXcd coeffs = spectrum.eigenvectors.adjoint() * to_eigen(psi);
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    coeffs(j) *= std::exp(-kI * spectrum.eigenvalues(j) * t);
  }
  return from_eigen(psi.num_qubits(), spectrum.eigenvectors * coeffs);
}

}  // namespace eigencert
