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

#include "lindest/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lindest/core.hpp"
#include "lindest/detail/moments.hpp"
#include "lindest/fisher.hpp"
#include "lindest/linalg.hpp"

namespace lindest {

namespace {

using detail::Moments;

// L = (I, noises): shared operator list for the gauge machinery
std::vector<CMatrix> gauge_ops(const JumpModel& model) {
  std::vector<CMatrix> ops;
  ops.push_back(CMatrix::Identity(model.dim, model.dim));
  for (const auto& n : model.noises) ops.push_back(n);
  return ops;
}

GaugeCoefficients closed_form_c(const Moments& m, const JumpModel& model) {
  const Eigen::Index n = model.num_noises() + 1;
  std::vector<CMatrix> ops = gauge_ops(model);
  CMatrix gram(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) gram(a, b) = m.ev2(ops[a], ops[b]);
  CMatrix gram_pinv = pinv_hermitian(gram, 1e-10);

  GaugeCoefficients c;
  c.c.resize(model.num_signals(), n);
  for (Eigen::Index j = 0; j < model.num_signals(); ++j) {
    CVector w(n);
    for (Eigen::Index a = 0; a < n; ++a) w(a) = m.ev2(ops[a], model.signals[j]);
    c.c.row(j) = (gram_pinv * w).transpose();
  }
  return c;
}

std::vector<CMatrix> gauge_residuals(const JumpModel& model, const GaugeCoefficients& c) {
  const CMatrix id = CMatrix::Identity(model.dim, model.dim);
  std::vector<CMatrix> a_ops;
  for (Eigen::Index k = 0; k < model.num_signals(); ++k) {
    CMatrix a = model.signals[k] - c.c(k, 0) * id;
    for (Eigen::Index j = 0; j < model.num_noises(); ++j) a -= c.c(k, j + 1) * model.noises[j];
    a_ops.push_back(std::move(a));
  }
  return a_ops;
}

CMatrix gauge_sum(const std::vector<CMatrix>& a_ops) {
  CMatrix s = CMatrix::Zero(a_ops[0].rows(), a_ops[0].cols());
  for (const auto& a : a_ops) s += a.adjoint() * a;
  return s;
}

// uniform mixture over the numerically degenerate top eigenspace
CMatrix top_eigenspace_mixture(const HermitianEigs& es, double rel_tol = 1e-9) {
  const double lmax = es.values(0);
  const double cut = lmax - std::max(rel_tol * std::abs(lmax), 1e-14);
  CMatrix rho = CMatrix::Zero(es.vectors.rows(), es.vectors.rows());
  int count = 0;
  for (Eigen::Index i = 0; i < es.values.size() && es.values(i) >= cut; ++i) {
    rho += es.vectors.col(i) * es.vectors.col(i).adjoint();
    ++count;
  }
  return rho / static_cast<double>(count);
}

CVector haar_ket(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

// subgradient of lambda_max(sum A^dag A) w.r.t. conj(c), from mixture rho
CMatrix gauge_subgradient(const JumpModel& model, const std::vector<CMatrix>& ops,
                          const std::vector<CMatrix>& a_ops, const CMatrix& rho) {
  CMatrix q(model.num_signals(), model.num_noises() + 1);
  for (Eigen::Index k = 0; k < model.num_signals(); ++k)
    for (Eigen::Index a = 0; a < model.num_noises() + 1; ++a)
      q(k, a) = (rho * ops[a].adjoint() * a_ops[k]).trace();
  return q;
}

struct GaugeRun {
  CMatrix c;
  double value = 0.0;  // lambda_max, without the 4T factor
  int iterations = 0;
  bool converged = false;
};

GaugeRun polyak_descent(const JumpModel& model, const std::vector<CMatrix>& ops,
                        CMatrix c0, const GaugeSolverOptions& opt) {
  GaugeCoefficients gc;
  gc.c = std::move(c0);
  auto eval = [&](const CMatrix& c) {
    gc.c = c;
    return hermitian_eigs(gauge_sum(gauge_residuals(model, gc)));
  };

  CMatrix c = gc.c;
  HermitianEigs es = eval(c);
  GaugeRun run;
  run.c = c;
  run.value = es.values(0);

  double delta = 0.5 * std::max(run.value, 1e-6);
  int stall = 0;
  std::deque<double> window;
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    run.iterations = iter + 1;
    const double f = es.values(0);
    if (f < run.value) {
      run.value = f;
      run.c = c;
    }
    window.push_back(run.value);
    if (static_cast<int>(window.size()) > 100) {
      const double before = window.front();
      window.pop_front();
      if (before - run.value < opt.window_tol * std::max(run.value, 1e-12)) {
        run.converged = true;
        break;
      }
    }
    if (f > run.value - 0.5 * delta) {
      if (++stall >= 40) {
        delta *= 0.5;
        stall = 0;
      }
    } else {
      stall = 0;
    }
    if (delta < 1e-13 * std::max(run.value, 1e-12)) {
      run.converged = true;
      break;
    }

    gc.c = c;
    std::vector<CMatrix> a_ops = gauge_residuals(model, gc);
    CMatrix rho = top_eigenspace_mixture(es);
    CMatrix q = gauge_subgradient(model, ops, a_ops, rho);
    const double qn2 = q.squaredNorm();
    if (qn2 < 1e-30) {
      run.converged = true;
      break;
    }
    const double target = run.value - delta;
    const double mu = std::max(f - target, 0.0) / (2.0 * qn2);
    c += mu * q;
    es = eval(c);
  }
  return run;
}

// Refine c toward the minimum-Frobenius point of the optimal face so that
// support detection sees an interior solution. Only adopted when the
// spectral value does not degrade.
CMatrix tie_break_polish(const JumpModel& model, const std::vector<CMatrix>& ops,
                         const GaugeRun& best, const GaugeSolverOptions& opt) {
  GaugeCoefficients gc;
  CMatrix c = best.c;
  double fro_scale = 0.0;
  for (const auto& s : model.signals) fro_scale += s.squaredNorm();
  const double mu_tb = 1e-4;

  CMatrix c_ok = c;
  for (int iter = 0; iter < opt.polish_iterations; ++iter) {
    gc.c = c;
    std::vector<CMatrix> a_ops = gauge_residuals(model, gc);
    HermitianEigs es = hermitian_eigs(gauge_sum(a_ops));
    if (es.values(0) <= best.value * (1.0 + 1e-9) + 1e-13) c_ok = c;
    CMatrix rho = top_eigenspace_mixture(es, 1e-7);
    CMatrix q = gauge_subgradient(model, ops, a_ops, rho);
    CMatrix q_fro(q.rows(), q.cols());
    for (Eigen::Index k = 0; k < q.rows(); ++k)
      for (Eigen::Index a = 0; a < q.cols(); ++a)
        q_fro(k, a) = (ops[a].adjoint() * a_ops[k]).trace();
    CMatrix dir = q + mu_tb * q_fro;
    const double qn2 = dir.squaredNorm();
    if (qn2 < 1e-30) break;
    const double step = 0.5 * std::max(best.value, 1e-12) /
                        ((1.0 + static_cast<double>(iter)) * std::sqrt(qn2) *
                         std::max(std::sqrt(fro_scale), 1.0));
    c += step * dir;
  }
  return c_ok;
}

// Damped saddle iteration used to extract a certified state once the gauge
// coefficients are known.
MixedState saddle_state(const JumpModel& model, const CMatrix& c_init, int iters,
                        double eta) {
  GaugeCoefficients gc;
  gc.c = c_init;
  HermitianEigs es = hermitian_eigs(gauge_sum(gauge_residuals(model, gc)));
  CMatrix rho = top_eigenspace_mixture(es);
  MixedState best;
  best.rho = rho;
  double best_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < iters; ++i) {
    MixedState ms;
    ms.rho = rho;
    gc = closed_form_c(Moments(ms), model);
    es = hermitian_eigs(gauge_sum(gauge_residuals(model, gc)));
    const double primal = (rho * gauge_sum(gauge_residuals(model, gc))).trace().real();
    const double gap = es.values(0) - primal;
    if (gap < best_gap) {
      best_gap = gap;
      best.rho = rho;
    }
    rho = (1.0 - eta) * rho + eta * top_eigenspace_mixture(es);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
  }
  return best;
}

}  // namespace

GaugeCoefficients optimal_c_given_state(const PureState& psi, const JumpModel& model) {
  return closed_form_c(Moments(psi), model);
}

GaugeCoefficients optimal_c_given_state(const MixedState& rho, const JumpModel& model) {
  return closed_form_c(Moments(rho), model);
}

OptimizationResult minimize_gauge(const JumpModel& model, std::uint64_t seed,
                                  const GaugeSolverOptions& opt) {
  model.validate();
  if (model.dim > 64) throw std::invalid_argument("minimize_gauge: d > 64");
  const Eigen::Index k = model.num_signals();
  const Eigen::Index n = model.num_noises() + 1;
  std::vector<CMatrix> ops = gauge_ops(model);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  GaugeRun best;
  best.value = std::numeric_limits<double>::infinity();
  int total_iters = 0;
  bool any_converged = false;
  const int starts = std::max(opt.num_starts, 8);
  for (int s = 0; s < starts; ++s) {
    CMatrix c0 = CMatrix::Zero(k, n);
    if (s >= 1 && s <= 4) {
      PureState psi = make_pure(haar_ket(model.dim, rng), model.dim);
      c0 = optimal_c_given_state(psi, model).c;
    } else if (s > 4) {
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < n; ++j) c0(i, j) = Complex(gauss(rng), gauss(rng));
    }
    GaugeRun run = polyak_descent(model, ops, std::move(c0), opt);
    total_iters += run.iterations;
    any_converged = any_converged || run.converged;
    if (run.value < best.value) {
      best = run;
      best.converged = run.converged;
    }
  }

  best.c = tie_break_polish(model, ops, best, opt);
  GaugeCoefficients gc;
  gc.c = best.c;
  const double final_val = max_eigenvalue(gauge_sum(gauge_residuals(model, gc)));
  best.value = std::min(best.value, final_val);

  OptimizationResult res;
  res.mode = "gauge";
  res.value = 4.0 * model.total_time * std::max(best.value, 0.0);
  res.c = gc;
  res.iterations = total_iters;
  res.converged = any_converged;
  res.state = saddle_state(model, best.c, 400, 0.3);
  res.certificate = check_optimality(res, model);
  return res;
}

namespace {

struct ExtendedRun {
  MixedState state;
  GaugeCoefficients c;
  double value = 0.0;
  double gap = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

ExtendedRun extended_search_from(const JumpModel& model, CMatrix rho0,
                                 const StateSearchOptions& opt) {
  const double t_total = model.total_time;
  ExtendedRun run;
  CMatrix rho = std::move(rho0);
  std::deque<double> history;
  bool frank_wolfe = false;
  auto value_of = [&](const CMatrix& r) {
    MixedState ms;
    ms.rho = 0.5 * (r + r.adjoint());
    ms.rho /= ms.rho.trace().real();
    return qfi_theorem1(ms, model);
  };

  double value = value_of(rho);
  run.value = -1.0;
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    run.iterations = iter + 1;
    MixedState ms;
    ms.rho = rho;
    GaugeCoefficients c = closed_form_c(Moments(ms), model);
    HermitianEigs es = hermitian_eigs(gauge_sum(gauge_residuals(model, c)));
    const double dual = 4.0 * t_total * es.values(0);
    const double gap = std::abs(dual - value);
    if (value > run.value) {
      run.value = value;
      run.state.rho = rho;
      run.c = c;
      run.gap = gap;
    }
    if (gap <= 1e-10 * std::max(value, 1e-9)) break;

    // cycling: the value left its own recent high-water mark
    history.push_back(value);
    if (static_cast<int>(history.size()) > 50) history.pop_front();
    if (!frank_wolfe && iter > 100 && static_cast<int>(history.size()) == 50) {
      const double hi = *std::max_element(history.begin(), history.end());
      const double lo = *std::min_element(history.begin(), history.end());
      if (hi - lo > 1e-7 * std::max(hi, 1e-12) && value < hi) frank_wolfe = true;
    }

    if (!frank_wolfe) {
      rho = (1.0 - opt.damping) * rho + opt.damping * top_eigenspace_mixture(es);
    } else {
      CVector v = es.vectors.col(0);
      CMatrix vertex = v * v.adjoint();
      // golden-section line search on the concave segment
      double a = 0.0, b = 1.0;
      const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
      double f1 = value_of((1.0 - x1) * rho + x1 * vertex);
      double f2 = value_of((1.0 - x2) * rho + x2 * vertex);
      for (int ls = 0; ls < 40; ++ls) {
        if (f1 < f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + phi * (b - a);
          f2 = value_of((1.0 - x2) * rho + x2 * vertex);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - phi * (b - a);
          f1 = value_of((1.0 - x1) * rho + x1 * vertex);
        }
      }
      const double s = 0.5 * (a + b);
      rho = (1.0 - s) * rho + s * vertex;
    }
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    value = value_of(rho);
  }
  return run;
}

}  // namespace

OptimizationResult optimal_state_search(const JumpModel& model, SearchMode mode,
                                        std::uint64_t seed, const StateSearchOptions& opt) {
  model.validate();
  std::mt19937_64 rng(seed);
  const Eigen::Index d = model.dim;
  OptimizationResult res;

  if (mode == SearchMode::extended) {
    res.mode = "extended";
    ExtendedRun best;
    best.value = -1.0;
    for (int s = 0; s < opt.num_starts_extended; ++s) {
      CMatrix rho0;
      if (s == 0) {
        rho0 = CMatrix::Identity(d, d) / static_cast<double>(d);
      } else {
        CVector v = haar_ket(d, rng);
        rho0 = 0.7 * (v * v.adjoint()) + 0.3 * CMatrix::Identity(d, d) / static_cast<double>(d);
      }
      ExtendedRun run = extended_search_from(model, std::move(rho0), opt);
      if (run.value > best.value) best = run;
      res.iterations += run.iterations;
    }
    res.value = best.value;
    res.state = best.state;
    res.c = best.c.c.size() > 0
                ? best.c
                : optimal_c_given_state(best.state, model);
    res.converged = best.gap <= 1e-5 * std::max(best.value, 1e-12);
    res.certificate = check_optimality(res, model);
    return res;
  }

  // unextended: projected gradient ascent over pure system states
  res.mode = "unextended";
  double best_val = -1.0;
  CVector best_psi;
  for (int s = 0; s < std::max(opt.num_starts_unextended, 32); ++s) {
    CVector psi;
    if (s < d) {
      psi = CVector::Zero(d);
      psi(s) = 1.0;
    } else {
      psi = haar_ket(d, rng);
    }
    PureState st = make_pure(psi, d);
    double f = qfi_theorem1(st, model);
    double alpha = 0.2;
    std::deque<double> window;
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
      ++res.iterations;
      GaugeCoefficients c = optimal_c_given_state(st, model);
      CMatrix s_mat = gauge_sum(gauge_residuals(model, c));
      CVector grad = s_mat * st.amplitudes;
      grad -= st.amplitudes.dot(grad) * st.amplitudes;  // tangent component
      if (grad.norm() < 1e-13) break;
      bool accepted = false;
      while (alpha > 1e-13) {
        PureState trial = make_pure(st.amplitudes + alpha * grad, d);
        const double ft = qfi_theorem1(trial, model);
        if (ft > f + 1e-15) {
          st = trial;
          f = ft;
          alpha = std::min(alpha * 1.5, 50.0);
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted) break;
      window.push_back(f);
      if (static_cast<int>(window.size()) > 30) {
        const double before = window.front();
        window.pop_front();
        if (f - before < 1e-12 * std::max(f, 1e-12)) break;
      }
    }
    if (f > best_val) {
      best_val = f;
      best_psi = st.amplitudes;
    }
  }
  PureState opt_state = make_pure(best_psi, d);
  res.value = best_val;
  res.state.rho = opt_state.amplitudes * opt_state.amplitudes.adjoint();
  res.c = optimal_c_given_state(opt_state, model);
  res.converged = true;  // best measure-and-reset found; no global claim
  res.certificate = check_optimality(res, model);
  return res;
}

Certificate check_optimality(const OptimizationResult& result, const JumpModel& model) {
  Certificate cert;
  if (result.c.c.size() == 0 || result.state.rho.size() == 0) return cert;
  std::vector<CMatrix> a_ops = gauge_residuals(model, result.c);
  HermitianEigs es = hermitian_eigs(gauge_sum(a_ops));
  const double lmax = es.values(0);
  const double cut = lmax - std::max(1e-6 * std::abs(lmax), 1e-12);
  CMatrix p_top = CMatrix::Zero(model.dim, model.dim);
  for (Eigen::Index i = 0; i < es.values.size() && es.values(i) >= cut; ++i)
    p_top += es.vectors.col(i) * es.vectors.col(i).adjoint();

  const CMatrix& rho = result.state.rho;
  cert.gap_one = std::max(1.0 - (rho * p_top).trace().real(), 0.0);
  cert.condition_one = cert.gap_one < 1e-6;

  double resid = 0.0;
  for (const auto& a : a_ops) {
    resid = std::max(resid, std::abs((rho * a).trace()));
    for (const auto& n : model.noises)
      resid = std::max(resid, std::abs((rho * n.adjoint() * a).trace()));
  }
  cert.gap_two = resid;
  cert.condition_two = resid < 1e-6;
  return cert;
}

ClassicalSolution classical_optimal(const ClassicalInstance& inst, double total_time) {
  inst.validate();
  const Eigen::Index d = inst.dim;
  const Eigen::Index nn = inst.num_noises();

  JumpModel model;
  model.dim = d;
  model.total_time = total_time;
  model.signals.push_back(inst.l.row(0).cast<Complex>().asDiagonal().toDenseMatrix());
  for (Eigen::Index j = 1; j <= nn; ++j) {
    model.noises.push_back(inst.l.row(j).cast<Complex>().asDiagonal().toDenseMatrix());
    model.noise_rates.push_back(1.0);
  }
  model.normalized = true;

  OptimizationResult gauge = minimize_gauge(model, 0x1f2e3d4c5b6a7988ull);
  RVector a(d);
  {
    GaugeCoefficients c = gauge.c;
    for (Eigen::Index alpha = 0; alpha < d; ++alpha) {
      Complex v = inst.l(0, alpha) - c.c(0, 0);
      for (Eigen::Index j = 0; j < nn; ++j) v -= c.c(0, j + 1) * inst.l(j + 1, alpha);
      a(alpha) = v.real();
    }
  }

  ClassicalSolution sol;
  const double amax = a.cwiseAbs().maxCoeff();
  if (amax < 1e-12) {
    for (int alpha = 0; alpha < d; ++alpha) sol.support.push_back(alpha);
    sol.p = RVector::Constant(d, 1.0 / static_cast<double>(d));
    sol.qfi = 0.0;
    return sol;
  }
  for (int alpha = 0; alpha < d; ++alpha)
    if (std::abs(a(alpha)) >= (1.0 - 1e-6) * amax) sol.support.push_back(alpha);

  const int m = static_cast<int>(sol.support.size());
  RVector l1(m);
  std::vector<RVector> span;
  span.push_back(RVector::Constant(m, 1.0));
  for (Eigen::Index j = 1; j <= nn; ++j) {
    RVector v(m);
    for (int i = 0; i < m; ++i) v(i) = inst.l(j, sol.support[i]);
    span.push_back(std::move(v));
  }
  for (int i = 0; i < m; ++i) l1(i) = inst.l(0, sol.support[i]);

  // orthonormalize the restricted span and project the signal out of it
  std::vector<RVector> basis;
  for (auto& v : span) {
    RVector w = v;
    for (const auto& b : basis) w -= b.dot(w) * b;
    for (const auto& b : basis) w -= b.dot(w) * b;
    if (w.norm() > 1e-9 * std::max(v.norm(), 1.0)) {
      w.normalize();
      basis.push_back(std::move(w));
    }
  }
  RVector l1_perp = l1;
  for (const auto& b : basis) l1_perp -= b.dot(l1_perp) * b;

  sol.p = RVector::Zero(d);
  const double norm2 = l1_perp.squaredNorm();
  const double norm1 = l1_perp.cwiseAbs().sum();
  if (norm2 < 1e-12 || norm1 < 1e-12) {
    for (int i = 0; i < m; ++i) sol.p(sol.support[i]) = 1.0 / m;
    sol.qfi = 0.0;
    return sol;
  }
  sol.qfi = 4.0 * total_time * norm2 * norm2 / (norm1 * norm1);
  for (int i = 0; i < m; ++i) sol.p(sol.support[i]) = std::abs(l1_perp(i)) / norm1;
  return sol;
}

bool classical_regularity(const ClassicalInstance& inst) {
  inst.validate();
  const int d = static_cast<int>(inst.dim);
  const int nvec = static_cast<int>(inst.num_noises()) + 1;  // {1, l_2, ..}
  if (d > 20) throw std::invalid_argument("classical_regularity: exhaustive check needs d <= 20");

  RMatrix vecs(nvec, d);
  vecs.row(0).setOnes();
  for (int j = 1; j < nvec; ++j) vecs.row(j) = inst.l.row(j);

  std::vector<int> idx;
  // iterate subsets by bitmask, restricted to size k <= nvec
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > nvec) continue;
    RMatrix sub(nvec, k);
    int col = 0;
    for (int alpha = 0; alpha < d; ++alpha)
      if (mask & (1u << alpha)) {
        sub.col(col) = vecs.col(alpha);
        ++col;
      }
    Eigen::JacobiSVD<RMatrix> svd(sub);
    const double smax = svd.singularValues()(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-9 * std::max(smax, 1.0)) ++rank;
    if (rank < k) return false;
  }
  return true;
}

ClassicalInstance random_classical_instance(int dim, int num_noises, std::mt19937_64& rng) {
  if (num_noises + 2 > dim)
    throw std::invalid_argument("random_classical_instance: needs N + 2 <= d");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ClassicalInstance inst;
  inst.dim = dim;
  inst.l.resize(num_noises + 1, dim);
  for (int attempts = 0; attempts < 100; ++attempts) {
    bool ok = true;
    std::vector<RVector> rows;
    for (int j = 0; j <= num_noises && ok; ++j) {
      RVector v(dim);
      for (int alpha = 0; alpha < dim; ++alpha) v(alpha) = gauss(rng);
      v.array() -= v.mean();
      for (const auto& r : rows) v -= r.dot(v) * r;
      for (const auto& r : rows) v -= r.dot(v) * r;
      if (v.norm() < 1e-8) {
        ok = false;
        break;
      }
      v.normalize();
      rows.push_back(std::move(v));
    }
    if (!ok) continue;
    for (int j = 0; j <= num_noises; ++j) inst.l.row(j) = rows[j];
    return inst;
  }
  throw std::runtime_error("random_classical_instance: sampling failed");
}

SupportScan support_length_scan(int dim, int num_noises, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SupportScan scan;
  scan.trials = trials;
  int hits = 0;
  for (int trial = 0; trial < trials; ++trial) {
    ClassicalInstance inst = random_classical_instance(dim, num_noises, rng);
    ClassicalSolution sol = classical_optimal(inst, 1.0);
    const int len = static_cast<int>(sol.support.size());
    scan.histogram[len] += 1;
    if (len == num_noises + 2) ++hits;
  }
  scan.fraction_expected = trials > 0 ? static_cast<double>(hits) / trials : 0.0;
  return scan;
}

}  // namespace lindest
