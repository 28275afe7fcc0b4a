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

#include "lindest/reproduce.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <stdexcept>
#include <thread>

#include "lindest/linalg.hpp"
#include "lindest/optimize.hpp"
#include "lindest/scenarios.hpp"

namespace lindest {

namespace {

using nlohmann::json;

void parallel_grid(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::max(threads, 1);
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int tid = 0; tid < threads; ++tid)
    pool.emplace_back([&, tid] {
      for (int i = tid; i < n; i += threads) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::string csv_path(const std::string& out_dir, const std::string& stem) {
  return (std::filesystem::path(out_dir) / (stem + ".csv")).string();
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << std::setprecision(17);
  for (std::size_t c = 0; c < columns.size(); ++c)
    out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << row[c] << (c + 1 < row.size() ? "," : "\n");
  }
}

void write_sidecar(const std::string& csv, const std::vector<std::string>& columns,
                   const std::string& note) {
  json j;
  j["file"] = std::filesystem::path(csv).filename().string();
  j["columns"] = columns;
  j["note"] = note;
  std::ofstream out(csv + ".schema.json");
  out << j.dump(2) << "\n";
}

std::vector<std::string> fig2(const std::string& out_dir, std::uint64_t seed) {
  const int d = 10, max_noises = 4;
  std::mt19937_64 rng(seed);
  ClassicalInstance full = random_classical_instance(d, max_noises, rng);

  std::vector<std::vector<double>> rows(d);
  std::vector<RVector> dists;
  for (int n = 0; n <= max_noises; ++n) {
    ClassicalInstance inst;
    inst.dim = d;
    inst.l = full.l.topRows(n + 1);
    dists.push_back(classical_optimal(inst, 1.0).p);
  }
  for (int alpha = 0; alpha < d; ++alpha) {
    auto& row = rows[alpha];
    row.push_back(alpha);
    for (int j = 0; j <= max_noises; ++j) row.push_back(full.l(j, alpha));
    for (int n = 0; n <= max_noises; ++n) row.push_back(dists[n](alpha));
  }
  std::vector<std::string> cols = {"alpha",  "signal", "noise1", "noise2",
                                   "noise3", "noise4", "p_noiseless"};
  for (int n = 1; n <= max_noises; ++n) cols.push_back("p_n" + std::to_string(n));
  const std::string path = csv_path(out_dir, "fig2");
  write_csv(path, cols, rows);
  write_sidecar(path, cols,
                "optimal distribution of the commuting case at d = 10 for 0..4 noises; "
                "support length is N + 2");
  return {path};
}

std::vector<std::string> fig3a(const std::string& out_dir, std::uint64_t seed, int threads) {
  const int npts = 21;
  std::vector<std::vector<double>> rows(npts);
  parallel_grid(npts, threads, [&](int i) {
    const double theta1 = 0.5 * M_PI * i / (npts - 1);
    QubitCase c;
    c.theta1 = theta1;
    c.kind = QubitCase::Kind::in_plane;
    const double un0 = qubit_case_optimum(c, QubitMode::unextended, 1.0, seed).value;
    const double ext0 = qubit_case_optimum(c, QubitMode::extended, 1.0, seed).value;
    c.kind = QubitCase::Kind::out_of_plane;
    c.theta2 = 0.25 * M_PI;
    const double un4 = qubit_case_optimum(c, QubitMode::unextended, 1.0, seed).value;
    const double ext4 = qubit_case_optimum(c, QubitMode::extended, 1.0, seed).value;
    rows[i] = {theta1, un0, ext0, un4, ext4, qubit_noiseless_optimum(c, 1.0)};
  });
  const std::vector<std::string> cols = {"theta1",
                                         "qfi_unextended_theta2_0",
                                         "qfi_extended_theta2_0",
                                         "qfi_unextended_theta2_pi4",
                                         "qfi_extended_theta2_pi4",
                                         "qfi_noiseless"};
  const std::string path = csv_path(out_dir, "fig3a");
  write_csv(path, cols, rows);
  write_sidecar(path, cols,
                "QFI/T versus theta1 for the non-Hermitian qubit pair; theta2 = 0 is the "
                "in-plane case, theta2 = pi/4 the out-of-plane case");
  return {path};
}

std::vector<std::string> fig3b(const std::string& out_dir, std::uint64_t seed, int threads) {
  const int npts = 13;
  std::vector<std::vector<double>> rows(npts);
  parallel_grid(npts, threads, [&](int i) {
    const double theta1 = 0.5 * M_PI * i / (npts - 1);
    QubitCase c;
    c.kind = QubitCase::Kind::out_of_plane;
    c.theta1 = theta1;
    c.theta2 = 0.25 * M_PI;
    const double product = qubit_case_optimum(c, QubitMode::unextended, 1.0, seed).value;
    const double entangled = parallel_two_qubit_optimum(c, 1.0, seed);
    rows[i] = {theta1, product, entangled};
  });
  const std::vector<std::string> cols = {"theta1", "qfi_product_per_qubit",
                                         "qfi_entangled_per_qubit"};
  const std::string path = csv_path(out_dir, "fig3b");
  write_csv(path, cols, rows);
  write_sidecar(path, cols,
                "per-qubit QFI/T of the unextended two-probe parallel strategy at "
                "theta2 = pi/4; product state versus best entangled state");
  return {path};
}

std::vector<std::string> fig3c(const std::string& out_dir, std::uint64_t seed, int threads) {
  const int npts = 21;
  std::vector<std::vector<double>> rows(npts);
  parallel_grid(npts, threads, [&](int i) {
    const double theta1 = 0.5 * M_PI * i / (npts - 1);
    QubitCase c;
    c.kind = QubitCase::Kind::out_of_plane;
    c.theta1 = theta1;
    c.theta2 = 0.25 * M_PI;
    QubitOptimum opt = qubit_case_optimum(c, QubitMode::extended, 1.0, seed);
    HermitianEigs es = hermitian_eigs(opt.state.rho);
    double entropy = 0.0;
    for (Eigen::Index k = 0; k < es.values.size(); ++k) {
      const double p = es.values(k);
      if (p > 1e-12) entropy -= p * std::log(p);
    }
    rows[i] = {theta1, entropy / std::log(2.0)};
  });
  const std::vector<std::string> cols = {"theta1", "entanglement_entropy_normalized"};
  const std::string path = csv_path(out_dir, "fig3c");
  write_csv(path, cols, rows);
  write_sidecar(path, cols,
                "entanglement entropy of the optimal extended state, normalized to a "
                "maximally entangled state; theta2 = pi/4");
  return {path};
}

std::vector<std::string> fig4(const std::string& out_dir, std::uint64_t seed, int threads) {
  const int npts = 21;
  std::vector<std::vector<double>> rows(npts);
  parallel_grid(npts, threads, [&](int i) {
    const double theta1 = 0.02 + (0.5 * M_PI - 0.04) * i / (npts - 1);
    QubitCase c;
    c.kind = QubitCase::Kind::out_of_plane;
    c.theta1 = theta1;
    c.theta2 = 0.25 * M_PI;
    QubitOptimum opt = qubit_case_optimum(c, QubitMode::extended, 1.0, seed);
    const CMatrix& rho = opt.state.rho;
    const double bx = (rho * pauli_x()).trace().real();
    const double by = (rho * pauli_y()).trace().real();
    const double bz = (rho * pauli_z()).trace().real();
    const double purity = (rho * rho).trace().real();
    rows[i] = {theta1, bx, by, bz, purity};
  });
  const std::vector<std::string> cols = {"theta1", "bloch_x", "bloch_y", "bloch_z", "purity"};
  const std::string path = csv_path(out_dir, "fig4");
  write_csv(path, cols, rows);
  write_sidecar(path, cols,
                "Bloch-ball coordinates of the optimal reduced state for the out-of-plane "
                "case at theta2 = pi/4; interior points are extended states");
  return {path};
}

std::vector<std::string> fig5(const std::string& out_dir) {
  std::vector<std::vector<double>> rows;
  for (double nbar = 0.25; nbar <= 5.0 + 1e-9; nbar += 0.25) {
    const double smsv = 4.0 * (nbar + 0.5 + std::sqrt(nbar * (nbar + 1.0)));
    const double fock = 4.0 * (nbar + 0.5);
    const double controlled = 2.0 * (nbar + 1.0);
    rows.push_back({nbar, smsv, fock, controlled, 1.0});
  }
  const std::vector<std::string> cols = {"nbar", "qfi_smsv", "qfi_fock", "qfi_controlled",
                                         "gkp_bound_omitted"};
  const std::string path = csv_path(out_dir, "fig5");
  write_csv(path, cols, rows);
  write_sidecar(
      path, cols,
      "waveform-estimation QFI/T versus mean occupation: noiseless SMSV and Fock curves "
      "and the controlled single-quadrature loss curve 2(nbar+1); the no-control GKP "
      "bound from prior work is omitted (flag column)");
  return {path};
}

}  // namespace

std::vector<std::string> reproduce_figure(const std::string& figure_id,
                                          const std::string& out_dir, std::uint64_t seed,
                                          int threads) {
  std::filesystem::create_directories(out_dir);
  if (figure_id == "fig2") return fig2(out_dir, seed);
  if (figure_id == "fig3a") return fig3a(out_dir, seed, threads);
  if (figure_id == "fig3b") return fig3b(out_dir, seed, threads);
  if (figure_id == "fig3c") return fig3c(out_dir, seed, threads);
  if (figure_id == "fig4") return fig4(out_dir, seed, threads);
  if (figure_id == "fig5") return fig5(out_dir);
  throw std::invalid_argument("unknown figure id " + figure_id);
}

}  // namespace lindest
