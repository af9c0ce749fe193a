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

#include "eigencert/pauli.hpp"
#include "eigencert/simulator.hpp"

namespace eigencert {

/// Full eigendecomposition of a Hermitian operator: ground truth for
/// overlaps and the perturbation formulas.
struct Spectrum {
  int n = 0;                       // qubit count
  Eigen::VectorXd eigenvalues;     // ascending
  Eigen::MatrixXcd eigenvectors;   // columns, orthonormal

  StateVector eigenstate(int index) const;
};

// Relative threshold under which adjacent eigenvalues count as one
// degenerate subspace for overlap reporting.
inline constexpr double kDegeneracyRelTol = 1e-9;

Spectrum diagonalize(const PauliSum& h);
Spectrum diagonalize_dense(const Eigen::MatrixXcd& m, int n);

// |<psi|phi>|^2
double overlap(const StateVector& psi, const StateVector& phi);

struct ClosestEigenstate {
  int index = 0;      // lowest index within the winning subspace
  double overlap = 0; // summed over the degenerate subspace
};
ClosestEigenstate closest_eigenstate(const StateVector& psi,
                                     const Spectrum& spectrum);

// Squared overlap with the degenerate subspace containing eigenvalue
// `member_index` (sums |<lambda_j|psi>|^2 over the group).
double subspace_overlap(const StateVector& psi, const Spectrum& spectrum,
                        int member_index);

struct EnergyBoundCheck {
  double energy = 0.0;
  double nearest_eigenvalue = 0.0;
  double sqrt_variance = 0.0;
  bool holds = false;
};
// |<H> - lambda_nearest| <= sqrt(F_H) + 1e-9, the variance bound on the
// energy error.
EnergyBoundCheck check_energy_bound(const StateVector& psi, const PauliSum& h,
                                    const Spectrum& spectrum);

/// State decomposition near a target eigenstate:
/// |psi> = (|lambda_1> + eps |phi>) / sqrt(1 + eps^2), with
/// |phi> = sum_{j>1} c_j |lambda_j> normalized.
struct PerturbationData {
  double epsilon = 0.0;
  double lambda1 = 0.0;
  Eigen::VectorXcd coefficients;  // c_j
  Eigen::VectorXd lambdas;        // matching lambda_j, j > 1

  double d_squared() const;  // sum |c_j|^2 lambda_j^2
  double e() const;          // sum |c_j|^2 lambda_j
  // The decomposed state in the given spectrum's eigenbasis; column
  // `target` holds |lambda_1> and `rest` lists the j > 1 columns.
  static PerturbationData from_spectrum(const Spectrum& spectrum, int target,
                                        const Eigen::VectorXcd& rest_coeffs,
                                        double epsilon);
  StateVector realize(const Spectrum& spectrum, int target) const;
};

struct VarianceExpansion {
  double quadratic = 0.0;  // eps^2 coefficient: lambda1^2 + d^2 - 2 e lambda1
  double quartic = 0.0;    // eps^4 coefficient: -(d^2 + e^2 + 2 lambda1^2 - 4 e lambda1)

  double predict(double epsilon) const {
    const double e2 = epsilon * epsilon;
    return quadratic * e2 + quartic * e2 * e2;
  }
};
VarianceExpansion variance_expansion(const PerturbationData& pd);

// Series inversion eps^2(delta) to second order in delta.
double epsilon_squared_from_delta(const PerturbationData& pd, double delta);

// Leading-order deviation of |<psi|e^{-iHt}|psi>| from 1:
// delta_tilde = 2 eps^2 [1 - sum |c_j|^2 cos((lambda_j - lambda1) t)].
double fq_expansion(const PerturbationData& pd, double t);

// e^{-iHt} as a dense matrix.
Eigen::MatrixXcd propagator(const Spectrum& spectrum, double t);
StateVector evolve_with_spectrum(const Spectrum& spectrum,
                                 const StateVector& psi, double t);

}  // namespace eigencert
