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

#ifndef LINDEST_SCENARIOS_HPP
#define LINDEST_SCENARIOS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lindest/types.hpp"

namespace lindest {

// ---------------------------------------------------------------------------
// single-qubit case analysis

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix sigma_plus();
CMatrix sigma_minus();

struct QubitCase {
  enum class Kind {
    herm_herm,          // L1 = sigma_z/sqrt2, L2 = (cos(t)sx + sin(t)sy)/sqrt2
    nonherm_herm,       // L1 = a s+ + b s-,   L2 = sigma_z/sqrt2
    herm_nonherm,       // L1 = sigma_z/sqrt2, L2 = a s+ + b s-
    in_plane,           // theta1, phi1
    out_of_plane        // theta1, theta2, phi1, phi2
  };
  Kind kind = Kind::herm_herm;
  double theta = 0.0;   // noise angle for herm_herm
  Complex a = 0.0, b = 0.0;
  double theta1 = 0.0, theta2 = 0.0, phi1 = 0.0, phi2 = 0.0;
};

JumpModel qubit_model(const QubitCase& c, double total_time = 1.0);

/// QFI of the (p, r, phi) reduced state, evaluated through the one-noise
/// closed form. r^2 = p (1 - p) selects the pure unextended state.
double qubit_state_qfi(const QubitCase& c, double p, double r, double phi,
                       double total_time = 1.0);

/// Pure unextended state at the given (p, phi) Bloch parameters.
double qubit_unextended_qfi(const QubitCase& c, double p, double phi,
                            double total_time = 1.0);

/// The explicit rational expression for the in-plane case (phi1 folded away).
double qubit_in_plane_qfi(double theta1, double p, double r, double phi,
                          double total_time = 1.0);

struct QubitOptimum {
  double value = 0.0;
  MixedState state;
  std::string regime;  // "unextended-optimal" | "entangled-optimal"
  bool from_closed_form = false;
};

enum class QubitMode { unextended, extended };

/// Case optimum; closed forms where they exist, numerical search otherwise.
QubitOptimum qubit_case_optimum(const QubitCase& c, QubitMode mode,
                                double total_time = 1.0, std::uint64_t seed = 17);

double qubit_noiseless_optimum(const QubitCase& c, double total_time = 1.0);

/// Two noisy probes coupled to the same local signal/noise pair: K = 2
/// local signals and N = 2 local noises on d = 4. QFI per qubit = value / 2.
JumpModel parallel_two_qubit_model(const QubitCase& c, double total_time = 1.0);

/// Best per-qubit QFI of the unextended parallel strategy (numeric search
/// over 4-dimensional pure states).
double parallel_two_qubit_optimum(const QubitCase& c, double total_time = 1.0,
                                  std::uint64_t seed = 17);

struct HierarchyReport {
  double unextended = 0.0;
  double parallel_per_qubit = 0.0;
  double optimal = 0.0;
  double noiseless = 0.0;
  bool chain_holds = false;  // unextended <= parallel <= optimal <= noiseless
};

HierarchyReport hierarchy_report(const QubitCase& c, double total_time = 1.0,
                                 std::uint64_t seed = 17);

/// theta1 where the extended value starts to exceed the unextended one
/// (out-of-plane case), located by bisection on the gap.
double find_outofplane_transition(double theta2, double gap_tol = 1e-5,
                                  std::uint64_t seed = 17);

// ---------------------------------------------------------------------------
// collective spin (symmetric subspace, dimension n + 1)

/// J_- in the (n+1)-dimensional symmetric representation, J = sum sigma / 2.
CMatrix collective_lowering(int n);
CMatrix collective_raising(int n);
CMatrix collective_jz(int n);
CMatrix collective_jx(int n);
CMatrix collective_jy(int n);

enum class CollectiveScenario { decay, dephasing };

struct CollectiveResult {
  double value = 0.0;
  std::string state_description;
  JumpModel model;
  PureState state;
};

/// Correlated decay (signal = collective lowering in the spin-sum
/// normalization, noises raising and J_z) or correlated dephasing
/// (signal J_z, noises J_+/-, J_x, J_y; GHZ input).
CollectiveResult collective_spin_qfi(int n, CollectiveScenario scenario,
                                     double total_time = 1.0);

// ---------------------------------------------------------------------------
// Pauli Lindblad estimation

/// Tensor-product Pauli operator from a string over {I, X, Y, Z}.
CMatrix pauli_string(const std::string& s);

/// n-qubit model with distinct Pauli signal and noise strings.
JumpModel pauli_model(int n, const std::vector<std::string>& signal_strings,
                      const std::vector<std::string>& noise_strings,
                      double total_time = 1.0);

/// Simultaneous eigenbasis of a commuting Hermitian family.
CMatrix simultaneous_eigenbasis(const std::vector<CMatrix>& ops, double tol = 1e-8);

/// QFI of the uniform superposition in the simultaneous eigenbasis; equals
/// 4KT for any commuting set of distinct Pauli jump operators.
double commuting_pauli_uniform_qfi(const JumpModel& model);

// ---------------------------------------------------------------------------
// bosonic stochastic waveform estimation (truncated Fock space)

struct BosonicAlgebra {
  Eigen::Index dim_fock = 0;
  CMatrix a, adag, x, p, n;
};

BosonicAlgebra make_bosonic(Eigen::Index dim_fock);

enum class BosonicStateKind { fock, smsv, tmsv_reduced, binomial, superposition };

struct BosonicStateSpec {
  BosonicStateKind kind = BosonicStateKind::fock;
  double nbar = 0.0;            // target mean occupation (smsv, tmsv, binomial)
  int fock_n = 0;               // fock
  int nstar = 3;                // binomial: upper Fock level
  std::vector<std::pair<int, Complex>> terms;  // superposition
};

using BosonicState = std::variant<PureState, MixedState>;

BosonicState bosonic_states(const BosonicStateSpec& spec, Eigen::Index dim_fock);

enum class BosonicNoise { loss, gain };

/// Closed-form waveform-estimation QFI from <a>, <a^2>, nbar; doubled when
/// the displacement is isotropic. Throws when the Fock tail above
/// dim_fock - 4 carries more than 1e-8 mass.
double bosonic_swe_qfi(const BosonicState& state, BosonicNoise noise, bool isotropic,
                       Eigen::Index dim_fock, double total_time = 1.0);

/// Quadrature-signal model (signal x, noise a or a^dag) for cross-checks.
JumpModel bosonic_swe_model(BosonicNoise noise, bool isotropic, Eigen::Index dim_fock,
                            double total_time = 1.0);

/// Necessary and sufficient optimality condition <a> = <a^2> = 0.
bool swe_optimality_check(const BosonicState& state, Eigen::Index dim_fock);

}  // namespace lindest

#endif  // LINDEST_SCENARIOS_HPP
