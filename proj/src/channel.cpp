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

#include "lindest/channel.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lindest/linalg.hpp"

namespace lindest {

namespace {

// jump operators with rates, lifted to the state dimension if extended
struct Terms {
  std::vector<CMatrix> ops;
  std::vector<double> rates;
};

CMatrix lift(const CMatrix& op, Eigen::Index dim_ext) {
  if (op.rows() == dim_ext) return op;
  const Eigen::Index da = dim_ext / op.rows();
  return kron(op, CMatrix::Identity(da, da));
}

Terms collect_terms(const JumpModel& model, Eigen::Index dim_ext) {
  if (dim_ext % model.dim != 0)
    throw std::invalid_argument("state dimension is not a multiple of the model dimension");
  Terms t;
  for (const auto& s : model.signals) {
    t.ops.push_back(lift(s, dim_ext));
    t.rates.push_back(model.signal_rate);
  }
  for (Eigen::Index k = 0; k < model.num_noises(); ++k) {
    t.ops.push_back(lift(model.noises[k], dim_ext));
    t.rates.push_back(model.noise_rate(k));
  }
  return t;
}

CMatrix generator_at(const Terms& t, const CMatrix& rho) {
  CMatrix g = CMatrix::Zero(rho.rows(), rho.cols());
  for (std::size_t j = 0; j < t.ops.size(); ++j)
    if (t.rates[j] != 0.0) g += t.rates[j] * dissipator(t.ops[j], rho);
  return g;
}

}  // namespace

CMatrix dissipator(const CMatrix& jump, const CMatrix& rho) {
  CMatrix ll = jump.adjoint() * jump;
  return jump * rho * jump.adjoint() - 0.5 * (ll * rho + rho * ll);
}

MixedState lindblad_step(const MixedState& rho, const JumpModel& model) {
  model.validate();
  const Terms t = collect_terms(model, rho.dim());
  bool any_rate = model.signal_rate > 0.0;
  for (Eigen::Index k = 0; k < model.num_noises(); ++k)
    if (model.noise_rate(k) > 0.0) any_rate = true;
  if (any_rate) {
    const double bound = short_time_bound(rho, model);
    if (std::isfinite(bound) && model.step_time > 0.1 * bound)
      std::cerr << "lindblad_step: t = " << model.step_time
                << " exceeds 0.1 x short-time bound " << bound << "\n";
  }
  MixedState out;
  out.rho = rho.rho + model.step_time * generator_at(t, rho.rho);
  return out;
}

KrausSet kraus_short_time(const JumpModel& model) {
  model.validate();
  const double t = model.step_time;
  const double g1 = model.signal_rate;
  const Eigen::Index d = model.dim;
  const CMatrix id = CMatrix::Identity(d, d);

  KrausSet set;
  CMatrix sum_sig = CMatrix::Zero(d, d);
  for (const auto& s : model.signals) sum_sig += s.adjoint() * s;
  CMatrix sum_noise = CMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < model.num_noises(); ++k)
    sum_noise += model.noise_rate(k) * model.noises[k].adjoint() * model.noises[k];

  set.ops.push_back(id - 0.5 * t * (g1 * sum_sig + sum_noise));
  set.derivs.push_back(-t * std::sqrt(g1) * sum_sig);
  for (const auto& s : model.signals) {
    set.ops.push_back(std::sqrt(g1 * t) * s);
    set.derivs.push_back(std::sqrt(t) * s);
  }
  for (Eigen::Index k = 0; k < model.num_noises(); ++k) {
    set.ops.push_back(std::sqrt(model.noise_rate(k) * t) * model.noises[k]);
    set.derivs.push_back(CMatrix::Zero(d, d));
  }
  return set;
}

CMatrix apply_kraus(const KrausSet& kraus, const CMatrix& rho) {
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus.ops) out += k * rho * k.adjoint();
  return out;
}

MixedState exact_evolve(const MixedState& rho, const JumpModel& model, double duration) {
  model.validate();
  const Eigen::Index d = rho.dim();
  if (d * d > 4096) throw std::runtime_error("exact_evolve: dimension overflow (d^2 > 4096)");
  const Terms t = collect_terms(model, d);

  const CMatrix id = CMatrix::Identity(d, d);
  CMatrix liou = CMatrix::Zero(d * d, d * d);
  for (std::size_t j = 0; j < t.ops.size(); ++j) {
    if (t.rates[j] == 0.0) continue;
    const CMatrix& op = t.ops[j];
    CMatrix ll = op.adjoint() * op;
    liou += t.rates[j] * (kron(op.conjugate(), op) - 0.5 * kron(id, ll) -
                          0.5 * kron(ll.transpose(), id));
  }
  CMatrix prop = (duration * liou).exp();
  Eigen::Map<const CVector> v(rho.rho.data(), d * d);
  CVector w = prop * v;
  MixedState out;
  out.rho = Eigen::Map<const CMatrix>(w.data(), d, d);
  out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
  return out;
}

double short_time_bound(const MixedState& rho, const JumpModel& model) {
  model.validate();
  bool any_rate = model.signal_rate > 0.0;
  for (Eigen::Index k = 0; k < model.num_noises(); ++k)
    if (model.noise_rate(k) > 0.0) any_rate = true;
  if (!any_rate) throw std::invalid_argument("short_time_bound: all rates are zero");

  const Terms t = collect_terms(model, rho.dim());
  CMatrix first = generator_at(t, rho.rho);
  const double num = operator_norm(first);
  if (num < 1e-14) return std::numeric_limits<double>::infinity();
  const double den = operator_norm(generator_at(t, first));
  if (den < 1e-14) return std::numeric_limits<double>::infinity();
  return 4.0 * num / den;
}

}  // namespace lindest
