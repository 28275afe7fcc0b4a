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

#include "lindest/fisher.hpp"

#include <cmath>
#include <stdexcept>

#include "lindest/channel.hpp"
#include "lindest/core.hpp"
#include "lindest/detail/moments.hpp"
#include "lindest/linalg.hpp"

namespace lindest {

namespace {

using detail::Moments;

constexpr double kVarTol = 1e-12;

double theorem1_from_moments(const Moments& m, const JumpModel& model) {
  const Eigen::Index n = model.num_noises() + 1;
  const Eigen::Index d = model.dim;
  std::vector<const CMatrix*> lvec(n);
  const CMatrix id = CMatrix::Identity(d, d);
  lvec[0] = &id;
  for (Eigen::Index k = 1; k < n; ++k) lvec[k] = &model.noises[k - 1];

  CMatrix gram(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) gram(a, b) = m.ev2(*lvec[a], *lvec[b]);
  CMatrix gram_pinv = pinv_hermitian(gram, 1e-10);

  double total = 0.0;
  for (const auto& sig : model.signals) {
    CVector w(n);
    for (Eigen::Index a = 0; a < n; ++a) w(a) = m.ev2(*lvec[a], sig);
    double val = m.ev2(sig, sig).real() - (w.dot(gram_pinv * w)).real();
    total += std::max(val, 0.0);
  }
  return 4.0 * model.total_time * total;
}

double noiseless_from_moments(const Moments& m, const JumpModel& model) {
  double total = 0.0;
  for (const auto& sig : model.signals) total += m.var(sig);
  return 4.0 * model.total_time * total;
}

double one_noise_from_moments(const Moments& m, const JumpModel& model) {
  if (model.num_noises() != 1)
    throw std::invalid_argument("qfi_one_noise: model must have exactly one noise");
  const CMatrix& noise = model.noises[0];
  const double var_n = m.var(noise);
  double total = 0.0;
  for (const auto& sig : model.signals) {
    double val = m.var(sig);
    if (var_n >= kVarTol) val -= std::norm(m.cov(sig, noise)) / var_n;
    total += std::max(val, 0.0);
  }
  return 4.0 * model.total_time * total;
}

double two_noise_from_moments(const Moments& m, const JumpModel& model) {
  if (model.num_noises() != 2)
    throw std::invalid_argument("qfi_two_noise: model must have exactly two noises");
  const CMatrix& n1 = model.noises[0];
  const CMatrix& n2 = model.noises[1];
  const double var1 = m.var(n1);
  const double var2 = m.var(n2);

  double total = 0.0;
  for (const auto& sig : model.signals) {
    double val = m.var(sig);
    Complex zeta = 0.0;
    double xi = 0.0;
    if (var1 >= kVarTol) {
      val -= std::norm(m.cov(n1, sig)) / var1;
      zeta = m.cov(n2, n1) * m.cov(n1, sig) / var1;
      xi = std::norm(m.cov(n1, n2)) / var1;
    }
    const double den = var2 - xi;
    if (den >= kVarTol) val -= std::norm(m.cov(n2, sig) - zeta) / den;
    total += std::max(val, 0.0);
  }
  return 4.0 * model.total_time * total;
}

}  // namespace

double qfi_sld(const MixedState& rho, const CMatrix& drho) {
  rho.validate(1e-9);
  if ((drho - drho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("qfi_sld: drho must be Hermitian");
  if (std::abs(drho.trace()) > 1e-10)
    throw std::invalid_argument("qfi_sld: drho must be traceless");

  HermitianEigs es = hermitian_eigs(rho.rho);
  CMatrix d_in_basis = es.vectors.adjoint() * drho * es.vectors;
  const Eigen::Index n = rho.dim();
  double total = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double psum = std::max(es.values(j), 0.0) + std::max(es.values(k), 0.0);
      if (psum < 1e-12) continue;
      total += 2.0 * std::norm(d_in_basis(j, k)) / psum;
    }
  }
  return total;
}

double cfi(const RVector& probs, const RVector& dprobs) {
  if (probs.size() != dprobs.size())
    throw std::invalid_argument("cfi: size mismatch");
  if (probs.minCoeff() < -1e-12 || std::abs(probs.sum() - 1.0) > 1e-9)
    throw std::invalid_argument("cfi: not a probability vector");
  double total = 0.0;
  for (Eigen::Index j = 0; j < probs.size(); ++j) {
    const double p = probs(j);
    if (p < 1e-14) {
      if (std::abs(dprobs(j)) >= 1e-10)
        throw std::domain_error("cfi: nonzero derivative on a zero-probability outcome");
      continue;
    }
    total += dprobs(j) * dprobs(j) / p;
  }
  return total;
}

RVector convert_dprobs(const RVector& dprobs_sqrt, RateParam target, double gamma1) {
  if (target == RateParam::sqrt_gamma) return dprobs_sqrt;
  if (gamma1 <= 0.0)
    throw std::invalid_argument("convert_dprobs: gamma parametrization needs gamma_1 > 0");
  // d/dgamma = (d/dsqrt(gamma)) / (2 sqrt(gamma))
  return dprobs_sqrt / (2.0 * std::sqrt(gamma1));
}

double qfi_theorem1(const PureState& psi, const JumpModel& model) {
  psi.validate();
  CMatrix proj = noisy_projector(psi, model);
  double total = 0.0;
  for (const auto& sig : model.signals) {
    CVector u = apply_to_system(sig, psi);
    total += std::max(u.squaredNorm() - u.dot(proj * u).real(), 0.0);
  }
  return 4.0 * model.total_time * total;
}

double qfi_theorem1(const MixedState& rho, const JumpModel& model) {
  rho.validate(1e-9);
  Moments m(rho);
  return theorem1_from_moments(m, model);
}

double qfi_noiseless(const PureState& psi, const JumpModel& model) {
  Moments m(psi);
  return noiseless_from_moments(m, model);
}
double qfi_noiseless(const MixedState& rho, const JumpModel& model) {
  Moments m(rho);
  return noiseless_from_moments(m, model);
}
double qfi_one_noise(const PureState& psi, const JumpModel& model) {
  Moments m(psi);
  return one_noise_from_moments(m, model);
}
double qfi_one_noise(const MixedState& rho, const JumpModel& model) {
  Moments m(rho);
  return one_noise_from_moments(m, model);
}
double qfi_two_noise(const PureState& psi, const JumpModel& model) {
  Moments m(psi);
  return two_noise_from_moments(m, model);
}
double qfi_two_noise(const MixedState& rho, const JumpModel& model) {
  Moments m(rho);
  return two_noise_from_moments(m, model);
}

double bell_state_qfi(const JumpModel& model) {
  const JumpModel m = model.normalized ? model : hs_orthonormalize(model);
  double total = 0.0;
  for (const auto& sig : m.signals) total += hs_inner(sig, sig).real();
  return 4.0 * m.total_time * total / static_cast<double>(m.dim);
}

double gauge_bound(const JumpModel& model, const GaugeCoefficients& c) {
  const Eigen::Index d = model.dim;
  if (c.c.rows() != model.num_signals() || c.c.cols() != model.num_noises() + 1)
    throw std::invalid_argument("gauge_bound: coefficient shape mismatch");
  CMatrix sum = CMatrix::Zero(d, d);
  const CMatrix id = CMatrix::Identity(d, d);
  for (Eigen::Index k = 0; k < model.num_signals(); ++k) {
    CMatrix a = model.signals[k] - c.c(k, 0) * id;
    for (Eigen::Index j = 0; j < model.num_noises(); ++j) a -= c.c(k, j + 1) * model.noises[j];
    sum += a.adjoint() * a;
  }
  return 4.0 * model.total_time * std::max(max_eigenvalue(sum), 0.0);
}

MeasurementModel measure_reset_probabilities(const PureState& psi, const JumpModel& model,
                                             SignalMode mode) {
  psi.validate();
  OrthoBasis basis = image_basis(psi, model);
  const int nk = static_cast<int>(basis.kets.size());
  const Eigen::Index dim = psi.total_dim();
  const Eigen::Index nn = model.num_noises();
  const double t = model.step_time;
  const double g1 = model.signal_rate;

  MeasurementModel mm;
  CMatrix rest = CMatrix::Identity(dim, dim);
  for (const auto& k : basis.kets) {
    mm.projectors.push_back(k * k.adjoint());
    rest -= mm.projectors.back();
  }
  mm.projectors.push_back(rest);
  mm.probs = RVector::Zero(nk + 1);
  mm.dprobs = RVector::Zero(nk + 1);

  if (mode == SignalMode::vanishing) {
    for (int i = 1; i < nk; ++i) {
      double noise_mass = 0.0, signal_mass = 0.0;
      for (Eigen::Index l = 0; l < nn; ++l)
        noise_mass += model.noise_rate(l) * std::norm(basis.coeffs(l, i));
      for (Eigen::Index l = 0; l < model.num_signals(); ++l)
        signal_mass += std::norm(basis.coeffs(nn + l, i));
      mm.probs(i) = t * (noise_mass + g1 * signal_mass);
      mm.dprobs(i) = 2.0 * std::sqrt(g1) * t * signal_mass;
    }
    mm.probs(0) = 1.0 - mm.probs.tail(nk).sum();
    mm.dprobs(0) = -mm.dprobs.tail(nk).sum();
    return mm;
  }

  // finite signal: exact channel, fixed basis, central finite differences
  MixedState rho0;
  rho0.rho = psi.amplitudes * psi.amplitudes.adjoint();
  auto probs_at = [&](double sqrt_g) {
    JumpModel m = model;
    m.signal_rate = sqrt_g * sqrt_g;
    MixedState evolved = exact_evolve(rho0, m, t);
    RVector p = RVector::Zero(nk + 1);
    for (int i = 0; i < nk; ++i)
      p(i) = std::max(basis.kets[i].dot(evolved.rho * basis.kets[i]).real(), 0.0);
    p(nk) = std::max(1.0 - p.head(nk).sum(), 0.0);
    return p;
  };
  const double sq = std::sqrt(g1);
  const double h = 1e-5 * std::max(sq, 1e-8);
  mm.probs = probs_at(sq);
  mm.dprobs = (probs_at(sq + h) - probs_at(std::max(sq - h, 0.0))) /
              (h + std::min(sq, h));
  return mm;
}

double measure_reset_cfi_limit(const PureState& psi, const JumpModel& model) {
  psi.validate();
  OrthoBasis basis = image_basis(psi, model);
  const Eigen::Index nn = model.num_noises();
  const double t = model.step_time;
  double total = 0.0;
  for (int i = 1; i < static_cast<int>(basis.kets.size()); ++i) {
    double noise_mass = 0.0, signal_mass = 0.0;
    for (Eigen::Index l = 0; l < nn; ++l)
      noise_mass += model.noise_rate(l) * std::norm(basis.coeffs(l, i));
    for (Eigen::Index l = 0; l < model.num_signals(); ++l)
      signal_mass += std::norm(basis.coeffs(nn + l, i));
    // any nonzero noise is louder than the vanishing signal
    if (noise_mass > 1e-14) continue;
    total += 4.0 * t * signal_mass;
  }
  return total;
}

double delayed_strategy_qfi_qubit_decay(double gamma1, double t, double total_time) {
  const double x = gamma1 * t;
  if (x < 0.0) throw std::invalid_argument("delayed_strategy: negative gamma_1 t");
  if (x < 1e-8) return 4.0 * total_time * (1.0 - 0.5 * x + x * x / 12.0);
  return 4.0 * total_time * x / std::expm1(x);
}

}  // namespace lindest
