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

#ifndef LINDEST_CHANNEL_HPP
#define LINDEST_CHANNEL_HPP

#include "lindest/types.hpp"

namespace lindest {

/// Dissipator L rho L^dag - 1/2 {L^dag L, rho}.
CMatrix dissipator(const CMatrix& jump, const CMatrix& rho);

/// First-order short-time step rho' = rho + t sum_j gamma_j D_j(rho).
/// Accepts extended states (dim a multiple of model.dim); warns on stderr
/// when t exceeds a tenth of the short-time bound.
MixedState lindblad_step(const MixedState& rho, const JumpModel& model);

/// Kraus operators of the short-time channel and their derivatives with
/// respect to sqrt(gamma_1).
KrausSet kraus_short_time(const JumpModel& model);

CMatrix apply_kraus(const KrausSet& kraus, const CMatrix& rho);

/// Exact channel exp(duration * Liouvillian) applied to rho via the
/// vectorized master equation and a scaling-and-squaring matrix exponential.
MixedState exact_evolve(const MixedState& rho, const JumpModel& model, double duration);

/// Largest time for which the first-order expansion is meaningful:
/// 4 ||sum gamma D(rho)|| / ||sum gamma gamma' D(D'(rho))||; infinity for a
/// stationary state or vanishing denominator.
double short_time_bound(const MixedState& rho, const JumpModel& model);

}  // namespace lindest

#endif  // LINDEST_CHANNEL_HPP
