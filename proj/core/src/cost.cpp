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

#include "eigencert/cost.hpp"

#include <cmath>
#include <stdexcept>

#include <utility>

#include "eigencert/rng.hpp"

namespace eigencert {

double f_h_exact(const StateVector& psi, const PauliSum& h) {
  return f_h_exact(psi, h, h.squared());
}

double f_h_exact(const StateVector& psi, const PauliSum& h,
                 const PauliSum& h_squared) {
  const double e = expectation(psi, h);
  return expectation(psi, h_squared) - e * e;
}

double f_h_sampled(const Circuit& circuit, std::span<const double> params,
                   const PauliSum& h, const PauliSum& h_squared,
                   const ShotPlan& plan) {
  const ShotPlan plan_h{plan.shots, derive_seed(plan.rng_seed, {1})};
  const ShotPlan plan_h2{plan.shots, derive_seed(plan.rng_seed, {2})};
  const double e = estimate_expectation_sampled(circuit, params, h, plan_h);
  const double e2 = estimate_expectation_sampled(circuit, params, h_squared, plan_h2);
  return e2 - e * e;
}

double f_q_exact(const StateVector& psi, const PauliSum& h, double t) {
  return f_q_exact(psi, diagonalize(h), t);
}

double f_q_exact(const StateVector& psi, const Spectrum& spectrum, double t) {
  const StateVector evolved = evolve_with_spectrum(spectrum, psi, t);
  return 1.0 - std::norm(psi.inner(evolved));
}

double f_q_trotter(const StateVector& psi, const TfimSpec& tfim_spec, double t,
                   int steps) {
  // evolve_trotter approximates e^{+iHt}; |<Q>| is direction-independent.
  const StateVector evolved =
      evolve_trotter(psi, tfim_spec.coupling, tfim_spec.field, t, steps);
  return 1.0 - std::norm(psi.inner(evolved));
}

namespace {

StateVector echo_state(const Circuit& ansatz, std::span<const double> params,
                       const TfimSpec& tfim_spec, double t, int steps) {
  const Circuit bound = ansatz.bind(params);
  StateVector state = run_circuit(bound, {});
  state = evolve_trotter(state, tfim_spec.coupling, tfim_spec.field, t, steps);
  return apply_circuit(bound.inverse(), state, {});
}

}  // namespace

double f_q_sampled(const Circuit& ansatz, std::span<const double> params,
                   const TfimSpec& tfim_spec, double t, int steps,
                   const ShotPlan& plan) {
  const StateVector state = echo_state(ansatz, params, tfim_spec, t, steps);
  const auto draws = sample_bitstrings(state, plan);
  int zeros = 0;
  for (std::uint64_t d : draws) zeros += d == 0;
  return 1.0 - static_cast<double>(zeros) / static_cast<double>(plan.shots);
}

double f_q_trotter_circuit(const Circuit& ansatz, std::span<const double> params,
                           const TfimSpec& tfim_spec, double t, int steps) {
  const StateVector state = echo_state(ansatz, params, tfim_spec, t, steps);
  return 1.0 - std::norm(state.amplitude(0));
}

CostFunction::CostFunction(CostKind kind, PauliSum h, Circuit ansatz, double t)
    : kind_(kind),
      h_(std::move(h)),
      h_squared_(h_.squared()),
      ansatz_(std::move(ansatz)),
      t_(t),
      spectrum_(diagonalize(h_)),
      h_dense_(h_.to_dense()) {
  if (kind_ == CostKind::Unitary) {
    if (t_ == 0.0) {
      throw std::invalid_argument(
          "CostFunction: t must be nonzero for the unitary cost");
    }
    propagator_ = propagator(spectrum_, t_);
  } else {
    h2_dense_ = h_dense_ * h_dense_;
  }
}

double CostFunction::value(std::span<const double> params) const {
  return value_at_state(run_circuit(ansatz_, params));
}

namespace {

Complex quadratic_form(const Eigen::MatrixXcd& m, const std::vector<Complex>& amp) {
  Complex out{0.0, 0.0};
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Complex row{0.0, 0.0};
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row += m(i, j) * amp[static_cast<std::size_t>(j)];
    }
    out += std::conj(amp[static_cast<std::size_t>(i)]) * row;
  }
  return out;
}

}  // namespace

double CostFunction::value_at_state(const StateVector& psi) const {
  const auto& amp = psi.amplitudes();
  if (kind_ == CostKind::Variance) {
    const double e = quadratic_form(h_dense_, amp).real();
    return quadratic_form(h2_dense_, amp).real() - e * e;
  }
  return 1.0 - std::norm(quadratic_form(propagator_, amp));
}

std::vector<double> CostFunction::gradient(std::span<const double> params,
                                           double step) const {
  std::vector<double> x(params.begin(), params.end());
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + step;
    const double fp = value(x);
    x[i] = saved - step;
    const double fm = value(x);
    x[i] = saved;
    g[i] = (fp - fm) / (2.0 * step);
  }
  return g;
}

}  // namespace eigencert
