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

#ifndef LINDEST_DETAIL_MOMENTS_HPP
#define LINDEST_DETAIL_MOMENTS_HPP

#include <algorithm>
#include <complex>

#include "lindest/core.hpp"
#include "lindest/types.hpp"

namespace lindest::detail {

// First and second moments of system operators against a pure (possibly
// extended) or reduced state. Operators never get lifted to the extended
// space; kets do.
struct Moments {
  const PureState* psi = nullptr;
  const MixedState* rho = nullptr;

  explicit Moments(const PureState& s) : psi(&s) {}
  explicit Moments(const MixedState& s) : rho(&s) {}

  Complex ev(const CMatrix& a) const {
    if (psi) return psi->amplitudes.dot(apply_to_system(a, *psi));
    return (rho->rho * a).trace();
  }
  // <A^dag B>
  Complex ev2(const CMatrix& a, const CMatrix& b) const {
    if (psi) return apply_to_system(a, *psi).dot(apply_to_system(b, *psi));
    return (rho->rho * a.adjoint() * b).trace();
  }
  Complex cov(const CMatrix& a, const CMatrix& b) const {
    return ev2(a, b) - std::conj(ev(a)) * ev(b);
  }
  double var(const CMatrix& a) const { return std::max(cov(a, a).real(), 0.0); }
};

}  // namespace lindest::detail

#endif  // LINDEST_DETAIL_MOMENTS_HPP
