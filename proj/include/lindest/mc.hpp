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

#ifndef LINDEST_MC_HPP
#define LINDEST_MC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "lindest/types.hpp"

namespace lindest {

/// Counter-based uniform in [0, 1): a pure function of (seed, replication,
/// shot), so sampling is reproducible under any thread partitioning.
double counter_uniform(std::uint64_t seed, std::uint64_t replication, std::uint64_t shot);

/// Measurement kernel: fixed projective kets plus a remainder bin, with the
/// outcome distribution as a function of sqrt(gamma_1) through the exact
/// channel.
struct MeasureKernel {
  std::vector<CVector> kets;
  PureState psi;
  JumpModel model;

  int bins() const { return static_cast<int>(kets.size()) + 1; }
  RVector probs_at(double sqrt_gamma) const;
};

/// Kernel measuring in the image basis of psi (the Theorem-1 measurement).
MeasureKernel optimal_kernel(const PureState& psi, const JumpModel& model);

/// Kernel measuring in an arbitrary orthonormal ket set (misspecified basis).
MeasureKernel kernel_with_kets(const PureState& psi, const JumpModel& model,
                               std::vector<CVector> kets);

/// Multinomial outcome counts for one replication.
std::vector<long long> sample_outcomes(const TrajectoryConfig& cfg, const MeasureKernel& kernel,
                                       int replication);

struct MleResult {
  double estimate = 0.0;
  bool at_boundary = false;  // likelihood maximized at the lower edge
};

/// Maximum-likelihood estimate of sqrt(gamma_1) over [0, upper) by
/// golden-section search plus a Newton polish.
MleResult mle_sqrt_gamma(const std::vector<long long>& counts,
                         const std::function<RVector(double)>& probs_at, double upper);
MleResult mle_sqrt_gamma(const std::vector<long long>& counts, const TrajectoryConfig& cfg,
                         const MeasureKernel& kernel);

enum class CrbMode {
  theorem1_limit,  // CRB from the vanishing-signal Theorem-1 QFI
  finite_cfi       // CRB from the finite-signal CFI of the outcome model
};

/// Runs R replications of M shots, estimates sqrt(gamma_1) in each, and
/// reports rmse against the Cramer-Rao bound.
EstimationReport crb_saturation(const TrajectoryConfig& cfg, CrbMode mode,
                                const MeasureKernel* kernel_override = nullptr);

}  // namespace lindest

#endif  // LINDEST_MC_HPP
