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

#ifndef LINDEST_CORE_HPP
#define LINDEST_CORE_HPP

#include "lindest/linalg.hpp"
#include "lindest/types.hpp"

namespace lindest {

/// Apply a system-sized operator to a possibly extended ket, i.e. (op x I).
/// Operators are stored system-sized throughout; the ancilla factor is
/// implicit.
CVector apply_to_system(const CMatrix& op, const PureState& psi);

/// rho_S after tracing out the ancilla factor.
MixedState partial_trace_ancilla(const PureState& psi);

PureState make_pure(CVector amplitudes, Eigen::Index system_dim);
PureState basis_state(Eigen::Index dim, Eigen::Index index);
PureState bell_state(Eigen::Index dim);

/// Purify a density matrix using its eigenbasis; ancilla dimension equals
/// the numerical rank.
PureState purify(const MixedState& rho, double tol = 1e-14);

/// Remove identity components from every jump operator, orthonormalize the
/// noises pairwise under tr(A^dag B), and project each signal orthogonal to
/// span{I, noises}. Noises that fall inside the span of earlier ones are
/// dropped; a signal that vanishes after projection is zeroed and recorded
/// in zero_signals. The Theorem-1 QFI of any state is unchanged.
JumpModel hs_orthonormalize(const JumpModel& model, double tol = 1e-10);

/// Gram-Schmidt basis of |psi>, the noise images, then the signal images.
/// Vectors with residual norm below rank_tol (relative to the image) are
/// dropped; rank records the surviving noisy-subspace dimension.
OrthoBasis image_basis(const PureState& psi, const JumpModel& model,
                       double rank_tol = 1e-9);

/// Projection onto the noisy subspace span{|psi>, L_k |psi>} built from the
/// Gram matrix of the images with a pseudoinverse (SVD cutoff 1e-10).
/// A MixedState input is purified first; the projector then lives on the
/// system-times-rank extended space.
CMatrix noisy_projector(const PureState& psi, const JumpModel& model);
CMatrix noisy_projector(const MixedState& rho, const JumpModel& model);

}  // namespace lindest

#endif  // LINDEST_CORE_HPP
