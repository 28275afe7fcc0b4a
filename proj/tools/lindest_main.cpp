// Copyright 2026 The lindest Authors
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

#include <CLI11.hpp>
#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "lindest/core.hpp"
#include "lindest/fisher.hpp"
#include "lindest/mc.hpp"
#include "lindest/optimize.hpp"
#include "lindest/reproduce.hpp"
#include "lindest/scenario_io.hpp"
#include "lindest/scenarios.hpp"

namespace {

using nlohmann::json;
using namespace lindest;

struct GlobalOptions {
  std::string scenario_path;
  std::string out_dir;
  std::uint64_t seed = 1234;
  std::string format = "json";
  int threads = 1;
  bool assert_saturation = false;
};

void emit(const GlobalOptions& g, const std::string& command, const json& payload) {
  std::string text;
  if (g.format == "csv") {
    std::ostringstream out;
    out << "key,value\n";
    for (const auto& [key, value] : payload["values"].items())
      if (value.is_number() || value.is_boolean() || value.is_string())
        out << key << "," << value.dump() << "\n";
    text = out.str();
  } else {
    text = payload.dump(2) + "\n";
  }
  if (g.out_dir.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(g.out_dir);
  const std::string ext = g.format == "csv" ? ".csv" : ".json";
  const auto path = std::filesystem::path(g.out_dir) / (command + ext);
  std::ofstream file(path);
  file << text;
  std::cout << path.string() << "\n";
}

ResultRecord base_record(const GlobalOptions& g, const Scenario& sc, const std::string& cmd) {
  ResultRecord rec;
  rec.command = cmd;
  rec.scenario_hash = scenario_hash(sc.raw);
  rec.seed = g.seed;
  return rec;
}

json certificate_json(const Certificate& cert) {
  return json{{"condition_one", cert.condition_one},
              {"condition_two", cert.condition_two},
              {"gap_one", cert.gap_one},
              {"gap_two", cert.gap_two}};
}

Scenario require_scenario(const GlobalOptions& g) {
  if (g.scenario_path.empty()) throw ScenarioError("missing --scenario PATH");
  return load_scenario(g.scenario_path);
}

int run_eval(const GlobalOptions& g) {
  Scenario sc = require_scenario(g);
  ResultRecord rec = base_record(g, sc, "eval");
  json warnings = json::array();

  JumpModel normalized = hs_orthonormalize(sc.model);
  for (int idx : normalized.zero_signals) {
    std::ostringstream w;
    w << "signal " << idx << " lies in span{I, noises}; it contributes zero QFI";
    warnings.push_back(w.str());
    std::cerr << "warning: " << w.str() << "\n";
  }

  double qfi = 0.0;
  json per_signal = json::array();
  int rank = 0;
  if (sc.state_kind == Scenario::StateKind::pure) {
    qfi = qfi_theorem1(sc.pure, sc.model);
    OrthoBasis basis = image_basis(sc.pure, sc.model);
    rank = basis.rank;
    for (Eigen::Index j = 0; j < sc.model.num_signals(); ++j) {
      JumpModel single = sc.model;
      single.signals = {sc.model.signals[j]};
      per_signal.push_back(qfi_theorem1(sc.pure, single));
    }
  } else if (sc.state_kind == Scenario::StateKind::mixed) {
    qfi = qfi_theorem1(sc.mixed, sc.model);
    OrthoBasis basis = image_basis(purify(sc.mixed), sc.model);
    rank = basis.rank;
    for (Eigen::Index j = 0; j < sc.model.num_signals(); ++j) {
      JumpModel single = sc.model;
      single.signals = {sc.model.signals[j]};
      per_signal.push_back(qfi_theorem1(sc.mixed, single));
    }
  } else {
    throw ScenarioError("eval needs an explicit state (use the optimize subcommand instead)");
  }

  rec.values = {{"qfi", qfi},
                {"qfi_per_T", qfi / sc.model.total_time},
                {"per_signal", per_signal},
                {"projector_rank", rank},
                {"warnings", warnings}};
  emit(g, "eval", to_json(rec));
  return 0;
}

int run_optimize(const GlobalOptions& g, const std::string& mode) {
  Scenario sc = require_scenario(g);
  ResultRecord rec = base_record(g, sc, "optimize");
  JumpModel model = hs_orthonormalize(sc.model);
  OptimizationResult res = optimal_state_search(
      model, mode == "unextended" ? SearchMode::unextended : SearchMode::extended, g.seed);
  const double bound = gauge_bound(model, res.c);
  rec.values = {{"value", res.value},
                {"value_per_T", res.value / model.total_time},
                {"mode", res.mode},
                {"converged", res.converged},
                {"iterations", res.iterations},
                {"duality_gap", std::abs(bound - res.value)}};
  rec.state = state_to_json(res.state);
  rec.certificate = certificate_json(res.certificate);
  emit(g, "optimize", to_json(rec));
  return 0;
}

int run_bound(const GlobalOptions& g) {
  Scenario sc = require_scenario(g);
  ResultRecord rec = base_record(g, sc, "bound");
  JumpModel model = hs_orthonormalize(sc.model);
  OptimizationResult res = minimize_gauge(model, g.seed);
  json c_out = json::array();
  for (Eigen::Index k = 0; k < res.c.c.rows(); ++k) {
    json row = json::array();
    for (Eigen::Index a = 0; a < res.c.c.cols(); ++a)
      row.push_back(json::array({res.c.c(k, a).real(), res.c.c(k, a).imag()}));
    c_out.push_back(row);
  }
  rec.values = {{"value", res.value},
                {"value_per_T", res.value / model.total_time},
                {"converged", res.converged},
                {"iterations", res.iterations},
                {"gauge_coefficients", c_out}};
  rec.state = state_to_json(res.state);
  rec.certificate = certificate_json(res.certificate);
  emit(g, "bound", to_json(rec));
  return 0;
}

int run_classical(const GlobalOptions& g) {
  Scenario sc = require_scenario(g);
  if (!sc.classical) throw ScenarioError("classical subcommand needs a classical block");
  ResultRecord rec = base_record(g, sc, "classical");
  ClassicalSolution sol = classical_optimal(*sc.classical, sc.model.total_time);
  json p = json::array();
  for (Eigen::Index i = 0; i < sol.p.size(); ++i) p.push_back(sol.p(i));
  rec.values = {{"qfi", sol.qfi},
                {"qfi_per_T", sol.qfi / sc.model.total_time},
                {"p", p},
                {"support", sol.support},
                {"support_length", sol.support.size()},
                {"regular", classical_regularity(*sc.classical)}};
  emit(g, "classical", to_json(rec));
  return 0;
}

int run_scan(const GlobalOptions& g, int d, int noises, int trials) {
  SupportScan scan = support_length_scan(d, noises, trials, g.seed);
  ResultRecord rec;
  rec.command = "scan";
  rec.scenario_hash = "";
  rec.seed = g.seed;
  json hist = json::object();
  for (const auto& [len, count] : scan.histogram) hist[std::to_string(len)] = count;
  rec.values = {{"d", d},
                {"noises", noises},
                {"trials", trials},
                {"histogram", hist},
                {"fraction_support_n_plus_2", scan.fraction_expected}};
  emit(g, "scan", to_json(rec));
  return 0;
}

int run_simulate(const GlobalOptions& g, long long shots, int reps, const std::string& crb_mode,
                 bool suboptimal_basis) {
  Scenario sc = require_scenario(g);
  if (sc.state_kind != Scenario::StateKind::pure)
    throw ScenarioError("simulate needs a pure state");
  if (sc.model.signal_rate <= 0.0)
    throw ScenarioError("simulate needs signal_rate > 0");

  TrajectoryConfig cfg;
  cfg.model = sc.model;
  cfg.state = sc.pure;
  cfg.shots = shots;
  cfg.replications = reps;
  cfg.seed = g.seed;
  cfg.threads = g.threads;

  MeasureKernel kernel = optimal_kernel(sc.pure, sc.model);
  if (suboptimal_basis) {
    // rotate the measurement kets by a fixed off-optimal unitary
    const Eigen::Index dim = sc.pure.total_dim();
    CMatrix h = CMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j)
        h(i, j) = Complex(0.3 * std::cos(1.0 + i + 2.0 * j), 0.2 * std::sin(2.0 + 3.0 * i + j));
    h = 0.5 * (h + h.adjoint()).eval();
    CMatrix rot = (kImag * h).exp();
    std::vector<CVector> kets;
    for (const auto& k : kernel.kets) kets.push_back(rot * k);
    kernel = kernel_with_kets(sc.pure, sc.model, std::move(kets));
  }

  EstimationReport report = crb_saturation(
      cfg, crb_mode == "finite" ? CrbMode::finite_cfi : CrbMode::theorem1_limit, &kernel);

  ResultRecord rec = base_record(g, sc, "simulate");
  rec.values = {{"shots", shots},
                {"replications", reps},
                {"crb_mode", crb_mode},
                {"suboptimal_basis", suboptimal_basis},
                {"rmse", report.rmse},
                {"crb", report.crb},
                {"ratio", report.ratio},
                {"ratio_stderr", report.ratio_stderr},
                {"estimates", report.estimates}};
  emit(g, "simulate", to_json(rec));
  if (g.assert_saturation && (report.ratio < 0.8 || report.ratio > 1.25)) {
    std::cerr << "saturation assertion failed: rmse/crb = " << report.ratio << "\n";
    return 1;
  }
  return 0;
}

int run_reproduce(const GlobalOptions& g, const std::string& figure) {
  const std::string out = g.out_dir.empty() ? "out" : g.out_dir;
  for (const auto& f : reproduce_figure(figure, out, g.seed, g.threads))
    std::cout << f << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal-control Lindblad decay-rate estimation toolkit"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--scenario", g.scenario_path, "scenario JSON file");
  app.add_option("--out", g.out_dir, "output directory (default: stdout)");
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--format", g.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "worker threads");
  app.add_flag("--assert-saturation", g.assert_saturation,
               "simulate: fail when rmse/crb leaves [0.8, 1.25]");

  auto* eval = app.add_subcommand("eval", "QFI of a given state and model");

  std::string mode = "extended";
  auto* optimize = app.add_subcommand("optimize", "optimal input state search");
  optimize->add_option("--mode", mode, "extended|unextended")
      ->check(CLI::IsMember({"extended", "unextended"}));

  auto* bound = app.add_subcommand("bound", "gauge minimization upper bound");

  auto* classical = app.add_subcommand("classical", "commuting Hermitian case");

  int scan_d = 10, scan_noises = 3, scan_trials = 100;
  auto* scan = app.add_subcommand("scan", "support-length scan of random classical instances");
  scan->add_option("--d", scan_d, "dimension");
  scan->add_option("--noises", scan_noises, "number of noises");
  scan->add_option("--trials", scan_trials, "number of instances");

  long long shots = 1000000;
  int reps = 100;
  std::string crb_mode = "theorem1";
  bool suboptimal = false;
  auto* simulate = app.add_subcommand("simulate", "measure-and-reset Monte Carlo");
  simulate->add_option("--shots", shots, "shots per replication");
  simulate->add_option("--replications", reps, "replications");
  simulate->add_option("--crb-mode", crb_mode, "theorem1|finite")
      ->check(CLI::IsMember({"theorem1", "finite"}));
  simulate->add_flag("--suboptimal-basis", suboptimal, "measure in a rotated basis");

  std::string figure = "fig2";
  auto* reproduce = app.add_subcommand("reproduce", "figure data as CSV");
  reproduce->add_option("--figure", figure, "fig2|fig3a|fig3b|fig3c|fig4|fig5")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return run_eval(g);
    if (optimize->parsed()) return run_optimize(g, mode);
    if (bound->parsed()) return run_bound(g);
    if (classical->parsed()) return run_classical(g);
    if (scan->parsed()) return run_scan(g, scan_d, scan_noises, scan_trials);
    if (simulate->parsed()) return run_simulate(g, shots, reps, crb_mode, suboptimal);
    if (reproduce->parsed()) return run_reproduce(g, figure);
  } catch (const ScenarioError& err) {
    std::cerr << "scenario error: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "numerical failure: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
