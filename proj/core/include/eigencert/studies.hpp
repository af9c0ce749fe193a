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
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "eigencert/ansatz.hpp"
#include "eigencert/cost.hpp"
#include "eigencert/models.hpp"
#include "eigencert/optimizer.hpp"

namespace eigencert {

/// Shared configuration for the experiment studies and the CLI.
struct ExperimentConfig {
  std::string model = "tfim";  // tfim | schwinger | fermions | random
  int qubits = 4;
  int layers = 3;
  double coupling = 1.0;       // TFIM J
  double field = 1.0;          // TFIM h
  double mass = -0.7;          // Schwinger m_c
  double hopping = 1.0;        // fermions t
  double u1 = 2.0;
  double u2 = 1.0;
  double random_scale = 1.0;
  std::string cost = "both";   // variance | unitary | both
  double evolution_time = 1.0;
  int restarts = 0;            // 0 = study default (desk or paper scale)
  double gamma = 0.999;        // convergence-rate overlap threshold
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "out";
  bool paper_scale = false;    // restore the published instance counts
  int shots = 1000;
  int trotter_steps = 10;
  int max_iters = 1000;
  unsigned threads = 0;        // 0 = hardware concurrency

  PauliSum build_model(std::uint64_t instance_seed = 0) const;
  AnsatzSpec ansatz_spec() const { return {qubits, layers}; }
  BfgsConfig bfgs_config() const;
  std::vector<CostKind> cost_kinds() const;
  nlohmann::json to_json() const;
};

const char* cost_name(CostKind kind);

// Per-run normalized progress (F_conv - F_init) / (F_opt - F_init).
// Returns NaN when F_init == F_opt (run excluded from means).
double gain(double f_init, double f_conv, double f_opt);

struct GainReport {
  std::vector<double> gains;     // per run; NaN marks undefined
  double mean_gain = 0.0;        // over finite entries
  double convergence_rate = 0.0; // fraction with overlap >= gamma
  int converged = 0;
  int excluded = 0;              // undefined-gain runs
  int total = 0;
};

GainReport summarize_gains(const std::vector<double>& gains,
                           const std::vector<double>& final_overlaps,
                           double gamma);

// `count` seeded optimizations from uniform [0, 2pi)^p starts; run i uses
// the stream derived from (seed, i), so comparative arms sharing `seed`
// see identical initial draws. Overlap fields are filled against the cost
// function's spectrum (degenerate subspaces summed).
std::vector<RunRecord> random_restarts(const CostFunction& cost, int count,
                                       std::uint64_t seed,
                                       const BfgsConfig& config,
                                       unsigned threads = 0);

struct ArmResult {
  CostKind kind;
  std::vector<RunRecord> runs;
  std::vector<double> overlap_gains;
  std::vector<double> cost_gains;
  GainReport report;  // overlap gains + convergence rate
};

struct ModelStudyResult {
  std::vector<ArmResult> arms;
};

// Repeated optimization of one model Hamiltonian from
// random starts, overlap-gain distribution and convergence rate per cost.
ModelStudyResult run_model_study(const ExperimentConfig& cfg);

struct SweepRow {
  double x = 0.0;  // field h or evolution time t
  std::string cost;
  int converged = 0;
  int restarts = 0;
  double overlap_mean = 0.0, overlap_se = 0.0;
  double iters_mean = 0.0, iters_se = 0.0;
};

// TFIM field sweep, both costs.
std::vector<SweepRow> run_field_sweep(const ExperimentConfig& cfg,
                                      const std::vector<double>& field_values);

// Evolution-time sweep for the unitary cost on the critical TFIM.
// Throws std::invalid_argument if any t is 0.
std::vector<SweepRow> run_time_sweep(const ExperimentConfig& cfg,
                                     const std::vector<double>& time_values);

struct MultiplierArm {
  double scale = 1.0;
  CostKind kind;
  GainReport report;
};

// Random-Hamiltonian study across spectral multipliers, with the
// same instance and initial-parameter seeds reused across scales and costs.
std::vector<MultiplierArm> run_multiplier_study(
    const ExperimentConfig& cfg, const std::vector<double>& scales = {0.1, 1.0,
                                                                      10.0});

struct TrotterRow {
  std::string series;  // "delta_q" or "delta_h_normalized"
  int trotter_steps = 0;  // 0 for the r-independent delta_h row
  double mean = 0.0;
  double se = 0.0;
};

// |exact - sampled/Trotterized| cost error vs r for the five-qubit
// critical TFIM; delta_H is normalized per measurement circuit.
std::vector<TrotterRow> run_trotter_error_study(const ExperimentConfig& cfg,
                                                const std::vector<int>& r_values);

// Single optimization (CLI `solve`); record written to the output dir.
RunRecord run_solve(const ExperimentConfig& cfg);

}  // namespace eigencert
