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

#ifndef LINDEST_OPTIMIZE_HPP
#define LINDEST_OPTIMIZE_HPP

#include <cstdint>
#include <map>
#include <random>

#include "lindest/types.hpp"

namespace lindest {

/// Closed-form minimizer of <(L_j - c_j^T L)^dag (L_j - c_j^T L)>:
/// c_j = <L* L^T>^{-1} <L* L_j> with a pseudoinverse on rank deficiency.
GaugeCoefficients optimal_c_given_state(const PureState& psi, const JumpModel& model);
GaugeCoefficients optimal_c_given_state(const MixedState& rho, const JumpModel& model);

struct GaugeSolverOptions {
  int max_iterations = 5000;
  int num_starts = 8;
  double window_tol = 1e-9;    // relative improvement over 100 iterations
  int polish_iterations = 800; // tie-break refinement of the reported c
};

/// Convex minimization of c -> ||sum_k A_k^dag A_k|| by Polyak-style
/// subgradient descent; the subgradient comes from the uniform mixture over
/// the top eigenspace. Reported value is 4T times the minimum.
OptimizationResult minimize_gauge(const JumpModel& model, std::uint64_t seed,
                                  const GaugeSolverOptions& options = {});

enum class SearchMode { extended, unextended };

struct StateSearchOptions {
  int max_iterations = 4000;
  int num_starts_extended = 4;
  int num_starts_unextended = 32;
  double damping = 0.3;  // rho <- (1 - eta) rho + eta rho_new
};

/// Maximizes the Theorem-1 QFI over input states. Extended mode alternates
/// the top-eigenspace update with the closed-form gauge coefficients (with
/// damping, falling back to Frank-Wolfe ascent when the value cycles);
/// unextended mode is multi-start projected gradient ascent over pure system
/// states.
OptimizationResult optimal_state_search(const JumpModel& model, SearchMode mode,
                                        std::uint64_t seed,
                                        const StateSearchOptions& options = {});

/// Conditions (I) and (II) for a state/gauge pair to be optimal.
Certificate check_optimality(const OptimizationResult& result, const JumpModel& model);

/// Commuting Hermitian case: diagonal gauge minimization, support detection,
/// and the projected-signal closed form for the QFI and distribution.
ClassicalSolution classical_optimal(const ClassicalInstance& inst, double total_time);

/// Every k-subset of coordinates of {1, l_2, ..., l_{N+1}} spans R^k.
bool classical_regularity(const ClassicalInstance& inst);

ClassicalInstance random_classical_instance(int dim, int num_noises, std::mt19937_64& rng);

struct SupportScan {
  std::map<int, int> histogram;  // support length -> count
  double fraction_expected = 0.0;  // fraction with length N + 2
  int trials = 0;
};

SupportScan support_length_scan(int dim, int num_noises, int trials, std::uint64_t seed);

}  // namespace lindest

#endif  // LINDEST_OPTIMIZE_HPP
