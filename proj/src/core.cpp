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

#include "lindest/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lindest {

void PureState::validate(double tol) const {
  if (system_dim <= 0 || amplitudes.size() == 0)
    throw std::invalid_argument("PureState: empty");
  if (amplitudes.size() % system_dim != 0)
    throw std::invalid_argument("PureState: system_dim must divide the length");
  if (!amplitudes.allFinite())
    throw std::invalid_argument("PureState: non-finite amplitudes");
  if (std::abs(amplitudes.norm() - 1.0) > tol)
    throw std::invalid_argument("PureState: not normalized");
}

void MixedState::validate(double tol) const {
  if (rho.rows() != rho.cols() || rho.rows() == 0)
    throw std::invalid_argument("MixedState: not square");
  if (!rho.allFinite()) throw std::invalid_argument("MixedState: non-finite");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("MixedState: not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    throw std::invalid_argument("MixedState: trace != 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("MixedState: negative eigenvalue");
}

void JumpModel::validate() const {
  if (dim <= 0) throw std::invalid_argument("JumpModel: dim must be positive");
  if (signals.empty()) throw std::invalid_argument("JumpModel: needs K >= 1 signals");
  for (const auto& s : signals)
    if (s.rows() != dim || s.cols() != dim || !s.allFinite())
      throw std::invalid_argument("JumpModel: bad signal operator");
  for (const auto& n : noises)
    if (n.rows() != dim || n.cols() != dim || !n.allFinite())
      throw std::invalid_argument("JumpModel: bad noise operator");
  if (signal_rate < 0.0) throw std::invalid_argument("JumpModel: negative signal rate");
  for (double g : noise_rates)
    if (g <= 0.0) throw std::invalid_argument("JumpModel: noise rates must be positive");
  if (total_time < 0.0 || step_time < 0.0)
    throw std::invalid_argument("JumpModel: negative time");
}

void ClassicalInstance::validate(double tol) const {
  if (dim < 2 || l.rows() < 1 || l.cols() != dim)
    throw std::invalid_argument("ClassicalInstance: bad shape");
  for (Eigen::Index j = 0; j < l.rows(); ++j) {
    if (std::abs(l.row(j).sum()) > tol)
      throw std::invalid_argument("ClassicalInstance: vectors must be zero-sum");
    for (Eigen::Index k = j; k < l.rows(); ++k) {
      double want = (j == k) ? 1.0 : 0.0;
      if (std::abs(l.row(j).dot(l.row(k)) - want) > tol)
        throw std::invalid_argument("ClassicalInstance: vectors must be orthonormal");
    }
  }
}

CVector apply_to_system(const CMatrix& op, const PureState& psi) {
  const Eigen::Index d = psi.system_dim;
  const Eigen::Index da = psi.ancilla_dim();
  if (op.rows() != d)
    throw std::invalid_argument("apply_to_system: operator/state dimension mismatch");
  if (da == 1) return op * psi.amplitudes;
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> m(psi.amplitudes.data(), d, da);
  RowMat res = op * m;
  return Eigen::Map<const CVector>(res.data(), d * da);
}

MixedState partial_trace_ancilla(const PureState& psi) {
  const Eigen::Index d = psi.system_dim;
  const Eigen::Index da = psi.ancilla_dim();
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> m(psi.amplitudes.data(), d, da);
  MixedState out;
  out.rho = m * m.adjoint();
  return out;
}

PureState make_pure(CVector amplitudes, Eigen::Index system_dim) {
  PureState s;
  s.amplitudes = std::move(amplitudes);
  s.system_dim = system_dim;
  s.amplitudes.normalize();
  return s;
}

PureState basis_state(Eigen::Index dim, Eigen::Index index) {
  CVector v = CVector::Zero(dim);
  v(index) = 1.0;
  return make_pure(std::move(v), dim);
}

PureState bell_state(Eigen::Index dim) {
  CVector v = CVector::Zero(dim * dim);
  for (Eigen::Index j = 0; j < dim; ++j) v(j * dim + j) = 1.0;
  return make_pure(std::move(v), dim);
}

PureState purify(const MixedState& rho, double tol) {
  HermitianEigs es = hermitian_eigs(rho.rho);
  const Eigen::Index d = rho.dim();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    if (es.values(i) > tol) ++rank;
  rank = std::max<Eigen::Index>(rank, 1);
  CVector v = CVector::Zero(d * rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    const double p = std::max(es.values(i), 0.0);
    for (Eigen::Index s = 0; s < d; ++s) v(s * rank + i) += std::sqrt(p) * es.vectors(s, i);
  }
  return make_pure(std::move(v), d);
}

namespace {

CMatrix remove_trace(const CMatrix& m) {
  const Eigen::Index d = m.rows();
  return m - (m.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
}

}  // namespace

JumpModel hs_orthonormalize(const JumpModel& model, double tol) {
  model.validate();
  JumpModel out = model;
  out.noises.clear();
  out.noise_rates.clear();
  out.signals.clear();
  out.zero_signals.clear();

  // noises: traceless, then pairwise orthonormal under tr(A^dag B)
  for (const auto& raw : model.noises) {
    CMatrix n = remove_trace(raw);
    const double scale = std::max(1.0, hs_norm(raw));
    for (const auto& prev : out.noises) n -= hs_inner(prev, n) * prev;
    // second pass for numerical orthogonality
    for (const auto& prev : out.noises) n -= hs_inner(prev, n) * prev;
    if (hs_norm(n) < tol * scale) continue;  // inside the span already
    n /= hs_norm(n);
    out.noises.push_back(std::move(n));
    out.noise_rates.push_back(1.0);
  }

  // signals: traceless and orthogonal to every noise, magnitude kept
  int idx = 0;
  for (const auto& raw : model.signals) {
    CMatrix s = remove_trace(raw);
    const double scale = std::max(1.0, hs_norm(raw));
    for (const auto& n : out.noises) s -= hs_inner(n, s) * n;
    for (const auto& n : out.noises) s -= hs_inner(n, s) * n;
    if (hs_norm(s) < tol * scale) {
      out.zero_signals.push_back(idx);
      s.setZero();
    }
    out.signals.push_back(std::move(s));
    ++idx;
  }
  out.normalized = true;
  return out;
}

OrthoBasis image_basis(const PureState& psi, const JumpModel& model, double rank_tol) {
  psi.validate();
  const Eigen::Index n_ops = model.num_noises() + model.num_signals();

  std::vector<CVector> images;
  images.reserve(n_ops);
  for (const auto& n : model.noises) images.push_back(apply_to_system(n, psi));
  for (const auto& s : model.signals) images.push_back(apply_to_system(s, psi));

  OrthoBasis basis;
  basis.kets.push_back(psi.amplitudes);
  auto add_ket = [&](const CVector& image) -> bool {
    const double scale = image.norm();
    if (scale < 1e-14) return false;
    CVector v = image;
    for (const auto& k : basis.kets) v -= k.dot(v) * k;
    for (const auto& k : basis.kets) v -= k.dot(v) * k;
    if (v.norm() < rank_tol * scale) return false;
    v.normalize();
    basis.kets.push_back(std::move(v));
    return true;
  };

  for (Eigen::Index j = 0; j < model.num_noises(); ++j)
    if (add_ket(images[j])) ++basis.n_noise_kets;
  basis.rank = 1 + basis.n_noise_kets;
  for (Eigen::Index j = 0; j < model.num_signals(); ++j)
    if (add_ket(images[model.num_noises() + j])) ++basis.n_signal_kets;

  basis.coeffs.resize(n_ops, static_cast<Eigen::Index>(basis.kets.size()));
  for (Eigen::Index j = 0; j < n_ops; ++j)
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(basis.kets.size()); ++k)
      basis.coeffs(j, k) = basis.kets[k].dot(images[j]);
  return basis;
}

CMatrix noisy_projector(const PureState& psi, const JumpModel& model) {
  psi.validate();
  const Eigen::Index n = model.num_noises() + 1;
  const Eigen::Index dim = psi.total_dim();
  CMatrix u(dim, n);
  u.col(0) = psi.amplitudes;
  for (Eigen::Index k = 1; k < n; ++k)
    u.col(k) = apply_to_system(model.noises[k - 1], psi);
  CMatrix gram = u.adjoint() * u;
  return u * pinv_hermitian(gram, 1e-10) * u.adjoint();
}

CMatrix noisy_projector(const MixedState& rho, const JumpModel& model) {
  return noisy_projector(purify(rho), model);
}

}  // namespace lindest
