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

#include "eigencert/studies.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "eigencert/parallel.hpp"
#include "eigencert/report.hpp"
#include "eigencert/rng.hpp"
#include "eigencert/spectral.hpp"
#include "eigencert/stats.hpp"
#include "eigencert/svg.hpp"

namespace eigencert {

namespace {

// Seed-path tags: one namespace per independent stream family so that
// adding a study never perturbs another study's draws.
constexpr std::uint64_t kTagRestart = 1;
constexpr std::uint64_t kTagHamiltonian = 2;
constexpr std::uint64_t kTagTrotterParams = 3;
constexpr std::uint64_t kTagTrotterShots = 4;
constexpr std::uint64_t kTagFhShots = 5;

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void check_config(const ExperimentConfig& cfg) {
  if (cfg.gamma < 0.0 || cfg.gamma > 1.0) {
    throw std::invalid_argument("overlap threshold gamma must lie in [0, 1]");
  }
  if (cfg.restarts < 0) {
    throw std::invalid_argument("restarts must be non-negative");
  }
}

// Study defaults: published instance counts behind paper_scale, reduced
// counts otherwise; an explicit restarts value always wins.
int study_restarts(const ExperimentConfig& cfg) {
  if (cfg.restarts > 0) return cfg.restarts;
  return cfg.paper_scale ? 300 : 60;
}

int sweep_restarts(const ExperimentConfig& cfg) {
  if (cfg.restarts > 0) return cfg.restarts;
  return cfg.paper_scale ? 50 : 20;
}

int trotter_instances(const ExperimentConfig& cfg) {
  if (cfg.restarts > 0) return cfg.restarts;
  return cfg.paper_scale ? 300 : 30;
}

std::filesystem::path ensure_out_dir(const ExperimentConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  return cfg.out_dir;
}

nlohmann::json base_manifest(const ExperimentConfig& cfg,
                             const std::string& study) {
  nlohmann::json m;
  m["study"] = study;
  m["config"] = cfg.to_json();
  m["decisions"] = {
      {"overlap_gain_optimum", "gain applied to the overlap with F_opt = 1"},
      {"delta_h_normalization",
       "delta_H divided by the number of measurement circuits for H and H^2"},
      {"paired_seeds",
       "comparative arms reuse identical initial-parameter streams"},
  };
  return m;
}

std::vector<std::string> run_csv_header() {
  return {"cost",          "restart",        "seed",
          "initial_cost",  "final_cost",     "initial_overlap",
          "final_overlap", "overlap_gain",   "cost_gain",
          "iterations",    "termination"};
}

void append_run_rows(CsvWriter& csv, const ArmResult& arm) {
  for (std::size_t i = 0; i < arm.runs.size(); ++i) {
    const RunRecord& r = arm.runs[i];
    csv.row({cost_name(arm.kind), csv_int(static_cast<long long>(i)),
             csv_int(static_cast<long long>(r.seed)),
             csv_double(r.cost_trace.front()), csv_double(r.final_cost),
             csv_double(r.initial_overlap), csv_double(r.final_overlap),
             csv_double(arm.overlap_gains[i]), csv_double(arm.cost_gains[i]),
             csv_int(r.iterations), to_string(r.reason)});
  }
}

SweepRow make_sweep_row(double x, CostKind kind, double gamma,
                        const std::vector<RunRecord>& runs) {
  SweepRow row;
  row.x = x;
  row.cost = cost_name(kind);
  row.restarts = static_cast<int>(runs.size());
  std::vector<double> overlaps, iters;
  overlaps.reserve(runs.size());
  iters.reserve(runs.size());
  for (const RunRecord& r : runs) {
    overlaps.push_back(r.final_overlap);
    iters.push_back(static_cast<double>(r.iterations));
    row.converged += r.final_overlap >= gamma;
  }
  row.overlap_mean = mean(overlaps);
  row.overlap_se = standard_error(overlaps);
  row.iters_mean = mean(iters);
  row.iters_se = standard_error(iters);
  return row;
}

void write_sweep_outputs(const ExperimentConfig& cfg, const std::string& study,
                         const std::string& x_name,
                         const std::vector<SweepRow>& rows,
                         double wall_seconds) {
  const auto dir = ensure_out_dir(cfg);
  CsvWriter csv(dir / (study + ".csv"),
                {x_name, "cost", "converged", "restarts", "overlap_mean",
                 "overlap_se", "iters_mean", "iters_se"});
  for (const SweepRow& row : rows) {
    csv.row({csv_double(row.x), row.cost, csv_int(row.converged),
             csv_int(row.restarts), csv_double(row.overlap_mean),
             csv_double(row.overlap_se), csv_double(row.iters_mean),
             csv_double(row.iters_se)});
  }
  csv.flush();

  SvgPlot plot(study, x_name, "converged instances");
  for (const char* name : {"variance", "unitary"}) {
    std::vector<double> xs, ys;
    for (const SweepRow& row : rows) {
      if (row.cost != name) continue;
      xs.push_back(row.x);
      ys.push_back(static_cast<double>(row.converged));
    }
    if (!xs.empty()) plot.add_series(name, std::move(xs), std::move(ys));
  }
  plot.write(dir / (study + ".svg"));

  write_manifest(dir / (study + "_manifest.json"), base_manifest(cfg, study),
                 wall_seconds);
}

ArmResult run_arm(const CostFunction& cost, CostKind kind, int count,
                  std::uint64_t seed, const ExperimentConfig& cfg) {
  ArmResult arm;
  arm.kind = kind;
  arm.runs = random_restarts(cost, count, seed, cfg.bfgs_config(), cfg.threads);
  arm.overlap_gains.reserve(arm.runs.size());
  arm.cost_gains.reserve(arm.runs.size());
  std::vector<double> final_overlaps;
  final_overlaps.reserve(arm.runs.size());
  for (const RunRecord& r : arm.runs) {
    arm.overlap_gains.push_back(gain(r.initial_overlap, r.final_overlap, 1.0));
    // The optimum of both costs over normalized states is 0.
    arm.cost_gains.push_back(gain(r.cost_trace.front(), r.final_cost, 0.0));
    final_overlaps.push_back(r.final_overlap);
  }
  arm.report = summarize_gains(arm.overlap_gains, final_overlaps, cfg.gamma);
  return arm;
}

}  // namespace

PauliSum ExperimentConfig::build_model(std::uint64_t instance_seed) const {
  if (model == "tfim") {
    return tfim({qubits, coupling, field});
  }
  if (model == "schwinger") {
    return schwinger({qubits, mass});
  }
  if (model == "fermions") {
    return fermions_jw({qubits, hopping, u1, u2});
  }
  if (model == "random") {
    const std::uint64_t s =
        instance_seed ? instance_seed : derive_seed(seed, {kTagHamiltonian});
    return random_hermitian({qubits, random_scale, s});
  }
  throw std::invalid_argument("unknown model: " + model);
}

BfgsConfig ExperimentConfig::bfgs_config() const {
  BfgsConfig config;
  config.max_iters = max_iters;
  return config;
}

std::vector<CostKind> ExperimentConfig::cost_kinds() const {
  if (cost == "variance") return {CostKind::Variance};
  if (cost == "unitary") return {CostKind::Unitary};
  if (cost == "both") return {CostKind::Variance, CostKind::Unitary};
  throw std::invalid_argument("unknown cost kind: " + cost);
}

nlohmann::json ExperimentConfig::to_json() const {
  return nlohmann::json{{"model", model},
                        {"qubits", qubits},
                        {"layers", layers},
                        {"coupling", coupling},
                        {"field", field},
                        {"mass", mass},
                        {"hopping", hopping},
                        {"u1", u1},
                        {"u2", u2},
                        {"random_scale", random_scale},
                        {"cost", cost},
                        {"evolution_time", evolution_time},
                        {"restarts", restarts},
                        {"gamma", gamma},
                        {"seed", seed},
                        {"out_dir", out_dir.string()},
                        {"paper_scale", paper_scale},
                        {"shots", shots},
                        {"trotter_steps", trotter_steps},
                        {"max_iters", max_iters},
                        {"threads", threads}};
}

const char* cost_name(CostKind kind) {
  return kind == CostKind::Variance ? "variance" : "unitary";
}

double gain(double f_init, double f_conv, double f_opt) {
  if (f_init == f_opt) return std::numeric_limits<double>::quiet_NaN();
  return (f_conv - f_init) / (f_opt - f_init);
}

GainReport summarize_gains(const std::vector<double>& gains,
                           const std::vector<double>& final_overlaps,
                           double gamma) {
  if (gains.size() != final_overlaps.size()) {
    throw std::invalid_argument("summarize_gains: size mismatch");
  }
  GainReport report;
  report.gains = gains;
  report.total = static_cast<int>(gains.size());
  double sum = 0.0;
  int finite = 0;
  for (double g : gains) {
    if (std::isfinite(g)) {
      sum += g;
      ++finite;
    } else {
      ++report.excluded;
    }
  }
  report.mean_gain = finite ? sum / finite : 0.0;
  for (double o : final_overlaps) report.converged += o >= gamma;
  report.convergence_rate =
      report.total ? static_cast<double>(report.converged) / report.total : 0.0;
  return report;
}

std::vector<RunRecord> random_restarts(const CostFunction& cost, int count,
                                       std::uint64_t seed,
                                       const BfgsConfig& config,
                                       unsigned threads) {
  if (count < 0) throw std::invalid_argument("random_restarts: count < 0");
  const std::size_t num_slots =
      static_cast<std::size_t>(cost.ansatz().num_slots);
  std::vector<RunRecord> records(static_cast<std::size_t>(count));
  parallel_for(
      count,
      [&](int i) {
        const std::uint64_t run_seed =
            derive_seed(seed, {kTagRestart, static_cast<std::uint64_t>(i)});
        Xoshiro256StarStar rng(run_seed);
        std::vector<double> x0(num_slots);
        for (double& p : x0) p = rng.angle();
        RunRecord record = minimize(
            [&cost](std::span<const double> p) { return cost.value(p); },
            [&cost](std::span<const double> p) { return cost.gradient(p); },
            std::move(x0), config);
        record.seed = run_seed;
        const StateVector final_state =
            run_circuit(cost.ansatz(), record.final_params);
        const ClosestEigenstate closest =
            closest_eigenstate(final_state, cost.spectrum());
        record.closest_eigenstate_index = closest.index;
        record.final_overlap = closest.overlap;
        const StateVector initial_state =
            run_circuit(cost.ansatz(), record.initial_params);
        record.initial_overlap =
            subspace_overlap(initial_state, cost.spectrum(), closest.index);
        records[static_cast<std::size_t>(i)] = std::move(record);
      },
      threads);
  return records;
}

ModelStudyResult run_model_study(const ExperimentConfig& cfg) {
  check_config(cfg);
  WallTimer timer;
  const int count = study_restarts(cfg);
  const PauliSum h = cfg.build_model();
  const Circuit ansatz = build_ansatz(cfg.ansatz_spec());

  ModelStudyResult result;
  for (CostKind kind : cfg.cost_kinds()) {
    const CostFunction cost(kind, h, ansatz, cfg.evolution_time);
    // cfg.seed (not a per-arm derivative) keeps the initial draws paired
    // across the two cost arms.
    result.arms.push_back(run_arm(cost, kind, count, cfg.seed, cfg));
  }

  const auto dir = ensure_out_dir(cfg);
  CsvWriter runs_csv(dir / "model_study_runs.csv", run_csv_header());
  for (const ArmResult& arm : result.arms) append_run_rows(runs_csv, arm);
  runs_csv.flush();

  CsvWriter summary_csv(dir / "model_study_summary.csv",
                        {"cost", "restarts", "converged", "excluded",
                         "convergence_rate", "mean_overlap_gain"});
  SvgPlot plot("overlap gain distribution", "overlap gain", "runs");
  for (const ArmResult& arm : result.arms) {
    summary_csv.row({cost_name(arm.kind), csv_int(arm.report.total),
                     csv_int(arm.report.converged), csv_int(arm.report.excluded),
                     csv_double(arm.report.convergence_rate),
                     csv_double(arm.report.mean_gain)});
    std::vector<double> finite;
    for (double g : arm.overlap_gains) {
      if (std::isfinite(g)) finite.push_back(g);
    }
    plot.add_histogram(cost_name(arm.kind), finite, 20, 0.0, 1.0);
  }
  summary_csv.flush();
  plot.write(dir / "model_study_gains.svg");

  nlohmann::json manifest = base_manifest(cfg, "model_study");
  manifest["restarts_per_cost"] = count;
  for (const ArmResult& arm : result.arms) {
    manifest["reports"][cost_name(arm.kind)] = {
        {"mean_gain", arm.report.mean_gain},
        {"convergence_rate", arm.report.convergence_rate},
        {"converged", arm.report.converged},
        {"excluded", arm.report.excluded},
        {"total", arm.report.total}};
  }
  write_manifest(dir / "model_study_manifest.json", std::move(manifest),
                 timer.seconds());
  return result;
}

std::vector<SweepRow> run_field_sweep(const ExperimentConfig& cfg,
                                      const std::vector<double>& field_values) {
  check_config(cfg);
  WallTimer timer;
  const int count = sweep_restarts(cfg);
  const Circuit ansatz = build_ansatz(cfg.ansatz_spec());
  std::vector<SweepRow> rows;
  for (std::size_t p = 0; p < field_values.size(); ++p) {
    const double h_value = field_values[p];
    const PauliSum h = tfim({cfg.qubits, cfg.coupling, h_value});
    const std::uint64_t point_seed =
        derive_seed(cfg.seed, {static_cast<std::uint64_t>(p)});
    for (CostKind kind : cfg.cost_kinds()) {
      const CostFunction cost(kind, h, ansatz, cfg.evolution_time);
      const auto runs =
          random_restarts(cost, count, point_seed, cfg.bfgs_config(),
                          cfg.threads);
      rows.push_back(make_sweep_row(h_value, kind, cfg.gamma, runs));
    }
  }
  write_sweep_outputs(cfg, "field_sweep", "h", rows, timer.seconds());
  return rows;
}

std::vector<SweepRow> run_time_sweep(const ExperimentConfig& cfg,
                                     const std::vector<double>& time_values) {
  check_config(cfg);
  for (double t : time_values) {
    if (t == 0.0) {
      throw std::invalid_argument(
          "run_time_sweep: t = 0 makes the unitary cost identically zero");
    }
  }
  WallTimer timer;
  const int count = sweep_restarts(cfg);
  const PauliSum h = cfg.build_model();
  const Circuit ansatz = build_ansatz(cfg.ansatz_spec());
  std::vector<SweepRow> rows;
  for (std::size_t p = 0; p < time_values.size(); ++p) {
    const CostFunction cost(CostKind::Unitary, h, ansatz, time_values[p]);
    const std::uint64_t point_seed =
        derive_seed(cfg.seed, {static_cast<std::uint64_t>(p)});
    const auto runs = random_restarts(cost, count, point_seed,
                                      cfg.bfgs_config(), cfg.threads);
    rows.push_back(
        make_sweep_row(time_values[p], CostKind::Unitary, cfg.gamma, runs));
  }
  write_sweep_outputs(cfg, "time_sweep", "t", rows, timer.seconds());
  return rows;
}

std::vector<MultiplierArm> run_multiplier_study(
    const ExperimentConfig& cfg, const std::vector<double>& scales) {
  check_config(cfg);
  WallTimer timer;
  const int count = study_restarts(cfg);
  // One random instance shared by every scale; scaling multiplies the
  // coefficients, not the draw.
  const PauliSum base = random_hermitian(
      {cfg.qubits, cfg.random_scale, derive_seed(cfg.seed, {kTagHamiltonian})});
  const Circuit ansatz = build_ansatz(cfg.ansatz_spec());

  std::vector<MultiplierArm> arms;
  for (double scale : scales) {
    PauliSum h = base;
    h *= Complex{scale, 0.0};
    for (CostKind kind : cfg.cost_kinds()) {
      const CostFunction cost(kind, h, ansatz, cfg.evolution_time);
      // Same master seed for every (scale, cost) pair: the paired design
      // reuses identical initial-parameter draws across all arms.
      const ArmResult arm_result = run_arm(cost, kind, count, cfg.seed, cfg);
      arms.push_back({scale, kind, arm_result.report});
    }
  }

  const auto dir = ensure_out_dir(cfg);
  CsvWriter csv(dir / "multiplier_study.csv",
                {"scale", "cost", "restarts", "converged", "excluded",
                 "convergence_rate", "mean_overlap_gain"});
  for (const MultiplierArm& arm : arms) {
    csv.row({csv_double(arm.scale), cost_name(arm.kind),
             csv_int(arm.report.total), csv_int(arm.report.converged),
             csv_int(arm.report.excluded),
             csv_double(arm.report.convergence_rate),
             csv_double(arm.report.mean_gain)});
  }
  csv.flush();

  SvgPlot plot("convergence rate vs spectral multiplier", "scale",
               "convergence rate");
  for (const char* name : {"variance", "unitary"}) {
    std::vector<double> xs, ys;
    for (const MultiplierArm& arm : arms) {
      if (std::string(cost_name(arm.kind)) != name) continue;
      xs.push_back(arm.scale);
      ys.push_back(arm.report.convergence_rate);
    }
    if (!xs.empty()) plot.add_series(name, std::move(xs), std::move(ys));
  }
  plot.write(dir / "multiplier_study.svg");

  write_manifest(dir / "multiplier_study_manifest.json",
                 base_manifest(cfg, "multiplier_study"), timer.seconds());
  return arms;
}

std::vector<TrotterRow> run_trotter_error_study(
    const ExperimentConfig& cfg, const std::vector<int>& r_values) {
  check_config(cfg);
  WallTimer timer;
  const int instances = trotter_instances(cfg);
  const TfimSpec tfim_spec{cfg.qubits, cfg.coupling, cfg.field};
  const PauliSum h = tfim(tfim_spec);
  const PauliSum h2 = h.squared();
  const Spectrum spectrum = diagonalize(h);
  const Circuit ansatz = build_ansatz(cfg.ansatz_spec());
  const double t = cfg.evolution_time;
  const double circuits =
      static_cast<double>(h.num_terms() + h2.num_terms());

  std::vector<std::vector<double>> delta_q(
      r_values.size(), std::vector<double>(static_cast<std::size_t>(instances)));
  std::vector<double> delta_h(static_cast<std::size_t>(instances));

  parallel_for(
      instances,
      [&](int i) {
        const std::uint64_t u = static_cast<std::uint64_t>(i);
        Xoshiro256StarStar rng(
            derive_seed(cfg.seed, {kTagTrotterParams, u}));
        const std::vector<double> params =
            random_parameters(cfg.ansatz_spec(), rng);
        const StateVector psi = run_circuit(ansatz, params);

        const double fq_exact = f_q_exact(psi, spectrum, t);
        for (std::size_t k = 0; k < r_values.size(); ++k) {
          const ShotPlan plan{
              cfg.shots,
              derive_seed(cfg.seed,
                          {kTagTrotterShots, u,
                           static_cast<std::uint64_t>(r_values[k])})};
          const double fq_approx =
              f_q_sampled(ansatz, params, tfim_spec, t, r_values[k], plan);
          delta_q[k][static_cast<std::size_t>(i)] =
              std::abs(fq_exact - fq_approx);
        }

        const double fh_exact = f_h_exact(psi, h, h2);
        const ShotPlan fh_plan{cfg.shots,
                               derive_seed(cfg.seed, {kTagFhShots, u})};
        const double fh_approx = f_h_sampled(ansatz, params, h, h2, fh_plan);
        delta_h[static_cast<std::size_t>(i)] =
            std::abs(fh_exact - fh_approx) / circuits;
      },
      cfg.threads);

  std::vector<TrotterRow> rows;
  for (std::size_t k = 0; k < r_values.size(); ++k) {
    rows.push_back({"delta_q", r_values[k], mean(delta_q[k]),
                    standard_error(delta_q[k])});
  }
  rows.push_back(
      {"delta_h_normalized", 0, mean(delta_h), standard_error(delta_h)});

  const auto dir = ensure_out_dir(cfg);
  CsvWriter csv(dir / "trotter_error.csv",
                {"series", "trotter_steps", "mean", "se"});
  for (const TrotterRow& row : rows) {
    csv.row({row.series, csv_int(row.trotter_steps), csv_double(row.mean),
             csv_double(row.se)});
  }
  csv.flush();

  SvgPlot plot("cost error vs Trotter steps", "r", "mean absolute error");
  plot.set_log_y(true);
  {
    std::vector<double> xs, ys, es;
    for (const TrotterRow& row : rows) {
      if (row.series != "delta_q") continue;
      xs.push_back(static_cast<double>(row.trotter_steps));
      ys.push_back(row.mean);
      es.push_back(row.se);
    }
    plot.add_series("delta_q", xs, ys, es);
    const TrotterRow& dh = rows.back();
    if (!xs.empty()) {
      plot.add_series("delta_h (per circuit)", {xs.front(), xs.back()},
                      {dh.mean, dh.mean});
    }
  }
  plot.write(dir / "trotter_error.svg");

  nlohmann::json manifest = base_manifest(cfg, "trotter_error");
  manifest["instances"] = instances;
  manifest["measurement_circuits"] = circuits;
  write_manifest(dir / "trotter_error_manifest.json", std::move(manifest),
                 timer.seconds());
  return rows;
}

RunRecord run_solve(const ExperimentConfig& cfg) {
  check_config(cfg);
  WallTimer timer;
  const PauliSum h = cfg.build_model();
  const Circuit ansatz = build_ansatz(cfg.ansatz_spec());
  const std::vector<CostKind> kinds = cfg.cost_kinds();
  if (kinds.size() != 1) {
    throw std::invalid_argument("solve needs a single cost kind");
  }
  const CostFunction cost(kinds[0], h, ansatz, cfg.evolution_time);
  RunRecord record =
      random_restarts(cost, 1, cfg.seed, cfg.bfgs_config(), 1).front();

  const auto dir = ensure_out_dir(cfg);
  CsvWriter trace_csv(dir / "solve_trace.csv", {"iteration", "cost"});
  for (std::size_t i = 0; i < record.cost_trace.size(); ++i) {
    trace_csv.row(
        {csv_int(static_cast<long long>(i)), csv_double(record.cost_trace[i])});
  }
  trace_csv.flush();

  nlohmann::json manifest = base_manifest(cfg, "solve");
  manifest["result"] = {
      {"seed", record.seed},
      {"final_cost", record.final_cost},
      {"final_overlap", record.final_overlap},
      {"initial_overlap", record.initial_overlap},
      {"closest_eigenstate_index", record.closest_eigenstate_index},
      {"iterations", record.iterations},
      {"termination", to_string(record.reason)},
      {"final_params", record.final_params}};
  write_manifest(dir / "solve_manifest.json", std::move(manifest),
                 timer.seconds());
  return record;
}

}  // namespace eigencert
