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

// Command-line driver for the eigencert studies.
//
// Subcommands: solve, study-models, sweep-field, sweep-time,
// study-multiplier, study-trotter, gate-count, diag.
// Exit codes: 0 success, 2 bad arguments, 3 numerical failure.

#include <cstdio>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eigencert/costmodel.hpp"
#include "eigencert/report.hpp"
#include "eigencert/studies.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitNumerical = 3;

void add_common_options(CLI::App* cmd, eigencert::ExperimentConfig* cfg) {
  cmd->add_option("--seed", cfg->seed, "Master RNG seed");
  cmd->add_option("--out", cfg->out_dir, "Output directory");
  cmd->add_flag("--paper-scale", cfg->paper_scale,
                "Use the published instance counts instead of desk scale");
  cmd->add_option("--cost", cfg->cost, "Cost function")
      ->check(CLI::IsMember({"variance", "unitary", "both"}));
  cmd->add_option("--time", cfg->evolution_time, "Evolution time t");
  cmd->add_option("--shots", cfg->shots, "Shots per measurement circuit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--trotter", cfg->trotter_steps, "Trotter steps r")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--layers", cfg->layers, "Ansatz layers")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--qubits", cfg->qubits, "Qubit count")
      ->check(CLI::Range(2, 12));
  cmd->add_option("--model", cfg->model, "Model Hamiltonian")
      ->check(CLI::IsMember({"tfim", "schwinger", "fermions", "random"}));
  cmd->add_option("--restarts", cfg->restarts,
                  "Restart count (0 = study default)");
  cmd->add_option("--field", cfg->field, "TFIM transverse field h");
  cmd->add_option("--coupling", cfg->coupling, "TFIM coupling J");
  cmd->add_option("--mass", cfg->mass, "Schwinger staggered mass");
  cmd->add_option("--hopping", cfg->hopping, "Fermion hopping amplitude");
  cmd->add_option("--u1", cfg->u1, "Nearest-neighbor interaction");
  cmd->add_option("--u2", cfg->u2, "Next-nearest-neighbor interaction");
  cmd->add_option("--scale", cfg->random_scale,
                  "Random-Hamiltonian coefficient scale");
  cmd->add_option("--gamma", cfg->gamma, "Convergence overlap threshold")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--max-iters", cfg->max_iters, "BFGS iteration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", cfg->threads,
                  "Worker threads (0 = hardware concurrency)");
}

std::vector<double> default_field_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 15; ++i) grid.push_back(0.1 * i);
  return grid;
}

std::vector<double> default_time_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(0.1 * i * std::numbers::pi);
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational eigenstate preparation and certification toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value config file; flags override");

  eigencert::ExperimentConfig cfg;
  std::vector<double> fields = default_field_grid();
  std::vector<double> times = default_time_grid();
  std::vector<double> scales = {0.1, 1.0, 10.0};
  std::vector<int> r_values = {1, 2, 4, 8};

  CLI::App* solve = app.add_subcommand("solve", "Single seeded optimization");
  add_common_options(solve, &cfg);

  CLI::App* models = app.add_subcommand(
      "study-models", "Gain and convergence-rate study for one model");
  add_common_options(models, &cfg);

  CLI::App* sweep_field =
      app.add_subcommand("sweep-field", "TFIM transverse-field sweep");
  add_common_options(sweep_field, &cfg);
  sweep_field->add_option("--fields", fields, "Field grid");

  CLI::App* sweep_time = app.add_subcommand(
      "sweep-time", "Evolution-time sweep for the unitary cost");
  add_common_options(sweep_time, &cfg);
  sweep_time->add_option("--times", times, "Evolution-time grid");

  CLI::App* multiplier = app.add_subcommand(
      "study-multiplier", "Random Hamiltonian across spectral multipliers");
  add_common_options(multiplier, &cfg);
  multiplier->add_option("--scales", scales, "Spectral multipliers");

  CLI::App* trotter = app.add_subcommand(
      "study-trotter", "Sampled/Trotterized cost error versus step count");
  add_common_options(trotter, &cfg);
  trotter->add_option("--r-values", r_values, "Trotter step counts");

  CLI::App* gate_count =
      app.add_subcommand("gate-count", "Gate-count table for the TFIM costs");
  add_common_options(gate_count, &cfg);

  CLI::App* diag = app.add_subcommand("diag", "Dump the model spectrum");
  add_common_options(diag, &cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (solve->parsed()) {
      if (cfg.cost == "both") cfg.cost = "variance";
      const eigencert::RunRecord record = eigencert::run_solve(cfg);
      std::printf("final_cost %.17g\nfinal_overlap %.17g\niterations %d\n",
                  record.final_cost, record.final_overlap, record.iterations);
    } else if (models->parsed()) {
      const auto result = eigencert::run_model_study(cfg);
      for (const auto& arm : result.arms) {
        std::printf("%s convergence_rate %.6f mean_gain %.6f\n",
                    eigencert::cost_name(arm.kind),
                    arm.report.convergence_rate, arm.report.mean_gain);
      }
    } else if (sweep_field->parsed()) {
      const auto rows = eigencert::run_field_sweep(cfg, fields);
      std::printf("field sweep: %zu rows -> %s\n", rows.size(),
                  cfg.out_dir.string().c_str());
    } else if (sweep_time->parsed()) {
      const auto rows = eigencert::run_time_sweep(cfg, times);
      std::printf("time sweep: %zu rows -> %s\n", rows.size(),
                  cfg.out_dir.string().c_str());
    } else if (multiplier->parsed()) {
      const auto arms = eigencert::run_multiplier_study(cfg, scales);
      for (const auto& arm : arms) {
        std::printf("scale %g %s convergence_rate %.6f\n", arm.scale,
                    eigencert::cost_name(arm.kind),
                    arm.report.convergence_rate);
      }
    } else if (trotter->parsed()) {
      const auto rows = eigencert::run_trotter_error_study(cfg, r_values);
      for (const auto& row : rows) {
        std::printf("%s r=%d mean %.6g se %.6g\n", row.series.c_str(),
                    row.trotter_steps, row.mean, row.se);
      }
    } else if (gate_count->parsed()) {
      const eigencert::ResourceCount rc = eigencert::count_resources(
          cfg.qubits, cfg.layers, cfg.trotter_steps);
      std::filesystem::create_directories(cfg.out_dir);
      eigencert::CsvWriter csv(cfg.out_dir / "gate_count.csv",
                               {"n", "l", "r", "N_U", "N_V", "N_Q", "N_H1",
                                "N_H2", "N_H", "circuits_H"});
      csv.row({eigencert::csv_int(rc.n), eigencert::csv_int(rc.layers),
               eigencert::csv_int(rc.trotter_steps), eigencert::csv_int(rc.n_u),
               eigencert::csv_int(rc.n_v), eigencert::csv_int(rc.n_q),
               eigencert::csv_int(rc.n_h1), eigencert::csv_int(rc.n_h2),
               eigencert::csv_int(rc.n_h), eigencert::csv_int(rc.circuits_h)});
      csv.flush();
      std::printf("N_U=%lld N_V=%lld N_Q=%lld N_H1=%lld N_H2=%lld N_H=%lld "
                  "circuits_H=%lld\n",
                  static_cast<long long>(rc.n_u),
                  static_cast<long long>(rc.n_v),
                  static_cast<long long>(rc.n_q),
                  static_cast<long long>(rc.n_h1),
                  static_cast<long long>(rc.n_h2),
                  static_cast<long long>(rc.n_h),
                  static_cast<long long>(rc.circuits_h));
    } else if (diag->parsed()) {
      const eigencert::PauliSum h = cfg.build_model();
      const eigencert::Spectrum spectrum = eigencert::diagonalize(h);
      std::filesystem::create_directories(cfg.out_dir);
      eigencert::CsvWriter csv(cfg.out_dir / "spectrum.csv",
                               {"index", "eigenvalue"});
      for (Eigen::Index j = 0; j < spectrum.eigenvalues.size(); ++j) {
        csv.row({eigencert::csv_int(static_cast<long long>(j)),
                 eigencert::csv_double(spectrum.eigenvalues(j))});
        std::printf("%lld %.17g\n", static_cast<long long>(j),
                    spectrum.eigenvalues(j));
      }
      csv.flush();
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}
