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

#include "lindest/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lindest {

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  return (a.adjoint() * b).trace();
}

double hs_norm(const CMatrix& m) { return m.norm(); }

double operator_norm(const CMatrix& m) {
  if (!m.allFinite()) throw std::invalid_argument("operator_norm: non-finite entries");
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double trace_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

namespace {

// round to the 1e-12 grid used for the deterministic tie-break
double grid(double x) { return std::round(x * 1e12) / 1e12; }

void fix_phase(Eigen::Ref<CVector> v) {
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > best + 1e-14) {
      best = std::abs(v(i));
      imax = i;
    }
  }
  if (best > 1e-300) v *= std::conj(v(imax)) / std::abs(v(imax));
}

bool lex_less(const CVector& a, const CVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    double ar = grid(a(i).real()), br = grid(b(i).real());
    if (ar != br) return ar < br;
    double ai = grid(a(i).imag()), bi = grid(b(i).imag());
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace

HermitianEigs hermitian_eigs(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigs: eigensolver failed");
  const Eigen::Index n = m.rows();
  std::vector<CVector> vecs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    vecs[i] = es.eigenvectors().col(i);
    fix_phase(vecs[i]);
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    double ea = grid(es.eigenvalues()(a)), eb = grid(es.eigenvalues()(b));
    if (ea != eb) return ea > eb;
    return lex_less(vecs[a], vecs[b]);
  });
  HermitianEigs out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = es.eigenvalues()(order[i]);
    out.vectors.col(i) = vecs[order[i]];
  }
  return out;
}

double max_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

CMatrix pinv_hermitian(const CMatrix& g, double rcond) {
  HermitianEigs es = hermitian_eigs(g);
  const double cutoff = rcond * std::max(std::abs(es.values.maxCoeff()),
                                         std::abs(es.values.minCoeff()));
  CMatrix out = CMatrix::Zero(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (std::abs(es.values(i)) > std::max(cutoff, 1e-300))
      out += es.vectors.col(i) * es.vectors.col(i).adjoint() / es.values(i);
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace lindest
