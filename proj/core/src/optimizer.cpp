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

#include "eigencert/optimizer.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace eigencert {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kCurvatureTol = 1e-10;
constexpr int kMaxBracket = 25;
constexpr int kMaxZoom = 30;

VectorXd to_vec(std::span<const double> x) {
  return Eigen::Map<const VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

struct Probe {
  double alpha = 0.0;
  double f = 0.0;
  double dphi = std::numeric_limits<double>::quiet_NaN();
  VectorXd grad;  // empty until the gradient was evaluated
};

class LineProblem {
 public:
  LineProblem(const Objective& f, const GradientFn& g, const VectorXd& x,
              const VectorXd& p)
      : f_(f), g_(g), x_(x), p_(p) {}

  double value(double alpha) {
    scratch_ = x_ + alpha * p_;
    return f_(std::span<const double>(scratch_.data(),
                                      static_cast<std::size_t>(scratch_.size())));
  }

  // Fills dphi and grad of the probe.
  void slope(Probe& probe) {
    scratch_ = x_ + probe.alpha * p_;
    auto g = g_(std::span<const double>(scratch_.data(),
                                        static_cast<std::size_t>(scratch_.size())));
    probe.grad = to_vec(g);
    probe.dphi = probe.grad.dot(p_);
  }

 private:
  const Objective& f_;
  const GradientFn& g_;
  const VectorXd& x_;
  const VectorXd& p_;
  VectorXd scratch_;
};

// Minimizer of the cubic (or quadratic fallback) interpolant on [a, b],
// with a bisection safeguard.
double interpolate(const Probe& lo, const Probe& hi) {
  const double a = lo.alpha, b = hi.alpha;
  double candidate = std::numeric_limits<double>::quiet_NaN();
  if (std::isfinite(lo.dphi) && std::isfinite(hi.dphi)) {
    const double d1 =
        lo.dphi + hi.dphi - 3.0 * (lo.f - hi.f) / (a - b);
    const double disc = d1 * d1 - lo.dphi * hi.dphi;
    if (disc >= 0.0) {
      const double d2 = std::copysign(std::sqrt(disc), b - a);
      candidate = b - (b - a) * (hi.dphi + d2 - d1) /
                          (hi.dphi - lo.dphi + 2.0 * d2);
    }
  } else if (std::isfinite(lo.dphi)) {
    const double denom = 2.0 * (hi.f - lo.f - lo.dphi * (b - a));
    if (denom != 0.0) candidate = a - lo.dphi * (b - a) * (b - a) / denom;
  }
  const double left = std::min(a, b);
  const double right = std::max(a, b);
  const double margin = 0.1 * (right - left);
  if (!std::isfinite(candidate) || candidate < left + margin ||
      candidate > right - margin) {
    candidate = 0.5 * (a + b);
  }
  return candidate;
}

struct SearchResult {
  bool ok = false;
  Probe accepted;
};

SearchResult zoom(LineProblem& line, Probe lo, Probe hi, double f0,
                  double dphi0, double c1, double c2) {
  for (int i = 0; i < kMaxZoom; ++i) {
    if (std::abs(hi.alpha - lo.alpha) <
        1e-16 * std::max(1.0, std::abs(lo.alpha))) {
      break;
    }
    Probe probe;
    probe.alpha = interpolate(lo, hi);
    probe.f = line.value(probe.alpha);
    if (!std::isfinite(probe.f) || probe.f > f0 + c1 * probe.alpha * dphi0 ||
        probe.f >= lo.f) {
      hi = probe;
      continue;
    }
    line.slope(probe);
    if (std::abs(probe.dphi) <= -c2 * dphi0) {
      return {true, std::move(probe)};
    }
    if (probe.dphi * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
    lo = std::move(probe);
  }
  // Fall back to the best sufficient-decrease point found.
  if (std::isfinite(lo.f) && lo.alpha > 0.0 &&
      lo.f <= f0 + c1 * lo.alpha * dphi0) {
    if (lo.grad.size() == 0) line.slope(lo);
    return {true, std::move(lo)};
  }
  return {};
}

SearchResult strong_wolfe_search(LineProblem& line, double f0, double dphi0,
                                 double c1, double c2) {
  Probe prev{0.0, f0, dphi0, {}};
  double alpha = 1.0;
  for (int i = 0; i < kMaxBracket; ++i) {
    Probe probe;
    probe.alpha = alpha;
    probe.f = line.value(alpha);
    if (!std::isfinite(probe.f)) {
      alpha = 0.5 * (prev.alpha + alpha);
      continue;
    }
    if (probe.f > f0 + c1 * alpha * dphi0 || (i > 0 && probe.f >= prev.f)) {
      return zoom(line, prev, probe, f0, dphi0, c1, c2);
    }
    line.slope(probe);
    if (std::abs(probe.dphi) <= -c2 * dphi0) {
      return {true, std::move(probe)};
    }
    if (probe.dphi >= 0.0) {
      return zoom(line, probe, prev, f0, dphi0, c1, c2);
    }
    prev = std::move(probe);
    alpha = std::min(2.0 * alpha, 1e8);
  }
  return {};
}

}  // namespace

std::string to_string(Termination t) {
  switch (t) {
    case Termination::GradientTolerance: return "gradient_tolerance";
    case Termination::MaxIterations: return "max_iterations";
    case Termination::LineSearchFailure: return "line_search_failure";
    default: return "numerical";
  }
}

RunRecord minimize(const Objective& objective, const GradientFn& gradient,
                   std::vector<double> x0, const BfgsConfig& config) {
  const auto p_dim = static_cast<Eigen::Index>(x0.size());
  RunRecord record;
  record.initial_params = x0;

  VectorXd x = to_vec(x0);
  auto as_span = [](const VectorXd& v) {
    return std::span<const double>(v.data(), static_cast<std::size_t>(v.size()));
  };

  double f = objective(as_span(x));
  record.cost_trace.push_back(f);
  if (!std::isfinite(f)) {
    record.reason = Termination::Numerical;
    record.final_params = x0;
    record.final_cost = f;
    return record;
  }
  VectorXd g = to_vec(gradient(as_span(x)));

  MatrixXd h_inv = MatrixXd::Identity(p_dim, p_dim);
  record.reason = Termination::MaxIterations;

  for (int iter = 0; iter < config.max_iters; ++iter) {
    if (g.lpNorm<Eigen::Infinity>() < config.grad_tol) {
      record.reason = Termination::GradientTolerance;
      break;
    }
    VectorXd direction = -(h_inv * g);
    double dphi0 = direction.dot(g);
    if (!(dphi0 < 0.0)) {
      // Stale curvature; restart from steepest descent.
      h_inv.setIdentity();
      direction = -g;
      dphi0 = direction.dot(g);
      if (!(dphi0 < 0.0)) {
        record.reason = Termination::GradientTolerance;
        break;
      }
    }
    LineProblem line(objective, gradient, x, direction);
    SearchResult search =
        strong_wolfe_search(line, f, dphi0, config.wolfe_c1, config.wolfe_c2);
    if (!search.ok) {
      record.reason = Termination::LineSearchFailure;
      break;
    }
    if (!std::isfinite(search.accepted.f) ||
        !search.accepted.grad.allFinite()) {
      record.reason = Termination::Numerical;
      break;
    }
    const VectorXd step = search.accepted.alpha * direction;
    const VectorXd y = search.accepted.grad - g;
    x += step;
    f = search.accepted.f;
    g = search.accepted.grad;
    record.cost_trace.push_back(f);
    record.iterations = iter + 1;

    const double sy = step.dot(y);
    if (sy > kCurvatureTol) {
      const double rho = 1.0 / sy;
      const MatrixXd left =
          MatrixXd::Identity(p_dim, p_dim) - rho * step * y.transpose();
      h_inv = left * h_inv * left.transpose() + rho * step * step.transpose();
    }
    if (iter + 1 == config.max_iters) {
      record.reason = Termination::MaxIterations;
    }
  }
  if (record.iterations < config.max_iters &&
      record.reason == Termination::MaxIterations &&
      g.lpNorm<Eigen::Infinity>() < config.grad_tol) {
    record.reason = Termination::GradientTolerance;
  }

  record.final_params.assign(x.data(), x.data() + x.size());
  record.final_cost = f;
  return record;
}

}  // namespace eigencert
