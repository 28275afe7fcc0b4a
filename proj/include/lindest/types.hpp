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

#ifndef LINDEST_TYPES_HPP
#define LINDEST_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace lindest {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr Complex kImag{0.0, 1.0};

/// A pure ket, possibly entangled with a noiseless ancilla. The flat
/// amplitude layout is kron(system, ancilla): index = s * ancilla_dim + a.
struct PureState {
  CVector amplitudes;
  Eigen::Index system_dim = 0;

  Eigen::Index total_dim() const { return amplitudes.size(); }
  Eigen::Index ancilla_dim() const {
    return system_dim > 0 ? amplitudes.size() / system_dim : 0;
  }
  bool extended() const { return ancilla_dim() > 1; }

  // throws std::invalid_argument on a broken invariant
  void validate(double tol = 1e-12) const;
};

/// Density matrix on the system alone (reduced state; no ancilla factor).
struct MixedState {
  CMatrix rho;

  Eigen::Index dim() const { return rho.rows(); }
  void validate(double tol = 1e-12) const;
};

/// The estimation problem instance: jump operators, rates, and times.
/// Signals share the weak decay rate `signal_rate`; each noise has its own
/// rate (default 1, which is all that matters in the vanishing-signal limit).
struct JumpModel {
  Eigen::Index dim = 0;
  std::vector<CMatrix> signals;     // K >= 1
  std::vector<CMatrix> noises;      // N >= 0
  double signal_rate = 0.0;         // gamma_1
  std::vector<double> noise_rates;  // gamma_k, defaults to 1
  double total_time = 1.0;          // T
  double step_time = 1e-3;          // t

  bool normalized = false;          // set by hs_orthonormalize
  std::vector<int> zero_signals;    // signals found inside span{I, noises}

  Eigen::Index num_signals() const { return static_cast<Eigen::Index>(signals.size()); }
  Eigen::Index num_noises() const { return static_cast<Eigen::Index>(noises.size()); }
  double noise_rate(Eigen::Index k) const {
    return k < static_cast<Eigen::Index>(noise_rates.size()) ? noise_rates[k] : 1.0;
  }

  void validate() const;
};

/// Gram-Schmidt basis of the initial state and its operator images.
/// kets[0] is the state; then the surviving noise-image kets; then the
/// surviving signal-image kets. coeffs row j holds the expansion of
/// op_j |psi> over all kets (noises first, then signals, in model order).
struct OrthoBasis {
  std::vector<CVector> kets;
  CMatrix coeffs;               // (N + K) x kets.size()
  int rank = 0;                 // noisy-subspace dimension, 1 + N'
  int n_noise_kets = 0;         // N'
  int n_signal_kets = 0;

  int num_ops() const { return static_cast<int>(coeffs.rows()); }
  // squared noise-free weight of signal j: || (I - Pi) L_j |psi> ||^2
  double signal_weight(int j, int num_noises) const {
    double w = 0.0;
    for (int k = rank; k < static_cast<int>(kets.size()); ++k)
      w += std::norm(coeffs(num_noises + j, k));
    return w;
  }
};

/// Gauge vectors c_k in C^{N+1}; component 0 multiplies the identity and
/// components 1..N the noise operators.
struct GaugeCoefficients {
  CMatrix c;  // K x (N+1)

  Eigen::Index num_signals() const { return c.rows(); }
};

struct KrausSet {
  std::vector<CMatrix> ops;
  std::vector<CMatrix> derivs;  // w.r.t. sqrt(gamma_1)
};

/// Projective measurement with outcome probabilities and their derivatives
/// with respect to sqrt(gamma_1).
struct MeasurementModel {
  std::vector<CMatrix> projectors;  // basis kets then the remainder block
  RVector probs;
  RVector dprobs;
};

struct Certificate {
  bool condition_one = false;  // support of rho inside the top eigenspace
  bool condition_two = false;  // tr(rho A_j) = tr(rho L_k^dag A_j) = 0
  double gap_one = 0.0;        // overlap deficit
  double gap_two = 0.0;        // largest condition-II residual
};

struct OptimizationResult {
  double value = 0.0;          // QFI, 4T folded in
  MixedState state;            // reduced density matrix of the optimizer
  GaugeCoefficients c;
  Certificate certificate;
  int iterations = 0;
  bool converged = false;
  std::string mode;            // "extended" | "unextended" | "gauge"
};

/// Commuting Hermitian case: zero-sum orthonormal real vectors.
/// Row 0 is the signal l_1; rows 1..N are the noises l_2..l_{N+1}.
struct ClassicalInstance {
  Eigen::Index dim = 0;
  RMatrix l;  // (N+1) x d

  Eigen::Index num_noises() const { return l.rows() - 1; }
  void validate(double tol = 1e-10) const;
};

struct ClassicalSolution {
  RVector p;                 // optimal distribution on all d indices
  double qfi = 0.0;
  std::vector<int> support;  // index set I (0-based)
};

struct TrajectoryConfig {
  JumpModel model;       // finite gamma_1 > 0
  PureState state;
  long long shots = 0;   // M
  int replications = 1;  // R
  std::uint64_t seed = 0;
  int threads = 1;
};

struct EstimationReport {
  std::vector<double> estimates;  // sqrt(gamma_1) units
  double rmse = 0.0;
  double crb = 0.0;
  double ratio = 0.0;
  double ratio_stderr = 0.0;
};

}  // namespace lindest

#endif  // LINDEST_TYPES_HPP
