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

#ifndef LINDEST_FISHER_HPP
#define LINDEST_FISHER_HPP

#include "lindest/types.hpp"

namespace lindest {

/// QFI of a state family from its spectral decomposition:
/// sum_{jk} 2 |<phi_j| drho |phi_k>|^2 / (p_j + p_k), skipping p_j + p_k < 1e-12.
/// drho must be Hermitian and traceless (within 1e-10).
double qfi_sld(const MixedState& rho, const CMatrix& drho);

/// Classical Fisher information sum (dp)^2 / p. Outcomes with p < 1e-14 are
/// skipped when dp is also below 1e-10; a larger dp on a dead outcome throws.
double cfi(const RVector& probs, const RVector& dprobs);

/// Derivatives are taken w.r.t. sqrt(gamma_1) everywhere; this flag converts
/// a derivative vector to the gamma_1 parametrization by the chain rule.
enum class RateParam { sqrt_gamma, gamma };
RVector convert_dprobs(const RVector& dprobs_sqrt, RateParam target, double gamma1);

/// Optimal vanishing-signal QFI of a given state (Theorem-1 value):
/// 4T sum_k <L_k^dag (I - Pi) L_k> with Pi the noisy-subspace projection.
/// The mixed-state overload evaluates every expectation as tr(rho_S .) and
/// never materializes the extended space.
double qfi_theorem1(const PureState& psi, const JumpModel& model);
double qfi_theorem1(const MixedState& rho, const JumpModel& model);

/// Closed forms for zero, one, and two noise operators.
double qfi_noiseless(const PureState& psi, const JumpModel& model);
double qfi_noiseless(const MixedState& rho, const JumpModel& model);
double qfi_one_noise(const PureState& psi, const JumpModel& model);
double qfi_one_noise(const MixedState& rho, const JumpModel& model);
double qfi_two_noise(const PureState& psi, const JumpModel& model);
double qfi_two_noise(const MixedState& rho, const JumpModel& model);

/// Bell-state value (4T/d) sum_j tr(L_j^dag L_j); the model is normalized
/// first if it has not been already.
double bell_state_qfi(const JumpModel& model);

/// Upper bound 4T || sum_k A_k^dag A_k || with A_k = L_k - c_k^T (I, noises).
double gauge_bound(const JumpModel& model, const GaugeCoefficients& c);

enum class SignalMode {
  vanishing,  // leading-order probabilities, exact in gamma_1 t
  finite      // exact channel, derivatives by central differences
};

/// Measure-and-reset outcome model in the image basis of |psi>, completed by
/// the remainder projector. Derivatives are w.r.t. sqrt(gamma_1).
MeasurementModel measure_reset_probabilities(const PureState& psi, const JumpModel& model,
                                             SignalMode mode = SignalMode::vanishing);

/// Per-shot CFI of the measure-and-reset model in the strict vanishing-signal
/// limit: outcomes dominated by noise carry no information there, and each
/// noise-free signal bin contributes 4 t w. Multiplied by T/t this saturates
/// the Theorem-1 QFI.
double measure_reset_cfi_limit(const PureState& psi, const JumpModel& model);

/// QFI of the delayed strategy for qubit decay, 4 gamma_1 t T / (e^{gamma_1 t} - 1).
double delayed_strategy_qfi_qubit_decay(double gamma1, double t, double total_time);

}  // namespace lindest

#endif  // LINDEST_FISHER_HPP
