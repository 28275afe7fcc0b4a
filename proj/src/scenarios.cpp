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

#include "lindest/scenarios.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lindest/core.hpp"
#include "lindest/detail/moments.hpp"
#include "lindest/fisher.hpp"
#include "lindest/linalg.hpp"
#include "lindest/optimize.hpp"

namespace lindest {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
CMatrix sigma_plus() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1;  // |up><down|
  return m;
}
CMatrix sigma_minus() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(1, 0) = 1;
  return m;
}

namespace {

std::pair<CMatrix, CMatrix> qubit_operators(const QubitCase& c) {
  const CMatrix sz = pauli_z() / kSqrt2;
  switch (c.kind) {
    case QubitCase::Kind::herm_herm:
      return {sz, (std::cos(c.theta) * pauli_x() + std::sin(c.theta) * pauli_y()) / kSqrt2};
    case QubitCase::Kind::nonherm_herm:
      return {c.a * sigma_plus() + c.b * sigma_minus(), sz};
    case QubitCase::Kind::herm_nonherm:
      return {sz, c.a * sigma_plus() + c.b * sigma_minus()};
    case QubitCase::Kind::in_plane: {
      const Complex e1 = std::exp(kImag * c.phi1);
      CMatrix l1 = std::cos(c.theta1) * sigma_plus() + std::sin(c.theta1) * e1 * sigma_minus();
      CMatrix l2 = std::sin(c.theta1) * std::conj(e1) * sigma_plus() -
                   std::cos(c.theta1) * sigma_minus();
      return {l1, l2};
    }
    case QubitCase::Kind::out_of_plane: {
      const Complex e1 = std::exp(kImag * c.phi1);
      const Complex e2 = std::exp(kImag * c.phi2);
      CMatrix l1 = std::cos(c.theta1) * sigma_plus() + std::sin(c.theta1) * e1 * sigma_minus();
      CMatrix l2 = std::cos(c.theta2) * (std::sin(c.theta1) * std::conj(e1) * sigma_plus() -
                                         std::cos(c.theta1) * sigma_minus()) +
                   std::sin(c.theta2) * e2 * pauli_z() / kSqrt2;
      return {l1, l2};
    }
  }
  throw std::logic_error("qubit_operators: unknown case");
}

MixedState bloch_state(double p, double r, double phi) {
  if (p < -1e-12 || p > 1.0 + 1e-12 || r * r > p * (1.0 - p) + 1e-9)
    throw std::invalid_argument("bloch_state: r^2 must not exceed p(1-p)");
  MixedState s;
  s.rho.resize(2, 2);
  s.rho << p, r * std::exp(kImag * phi), r * std::exp(-kImag * phi), 1.0 - p;
  return s;
}

// the two eigenstates of a 2x2 operator, deduplicated
std::vector<PureState> qubit_eigenstates(const CMatrix& op) {
  Eigen::ComplexEigenSolver<CMatrix> es(op);
  std::vector<PureState> out;
  for (int i = 0; i < 2; ++i) {
    CVector v = es.eigenvectors().col(i);
    if (v.norm() < 1e-12) continue;
    bool dup = false;
    for (const auto& e : out)
      if (std::abs(std::abs(e.amplitudes.dot(v)) - 1.0) < 1e-9) dup = true;
    if (!dup) out.push_back(make_pure(v, 2));
  }
  return out;
}

}  // namespace

JumpModel qubit_model(const QubitCase& c, double total_time) {
  auto [l1, l2] = qubit_operators(c);
  JumpModel model;
  model.dim = 2;
  model.signals.push_back(std::move(l1));
  model.noises.push_back(std::move(l2));
  model.noise_rates.push_back(1.0);
  model.total_time = total_time;
  return model;
}

double qubit_state_qfi(const QubitCase& c, double p, double r, double phi,
                       double total_time) {
  JumpModel model = qubit_model(c, total_time);
  return qfi_one_noise(bloch_state(p, r, phi), model);
}

double qubit_unextended_qfi(const QubitCase& c, double p, double phi, double total_time) {
  JumpModel model = qubit_model(c, total_time);
  CVector v(2);
  v << std::sqrt(std::clamp(p, 0.0, 1.0)),
      std::sqrt(std::clamp(1.0 - p, 0.0, 1.0)) * std::exp(-kImag * phi);
  return qfi_one_noise(make_pure(std::move(v), 2), model);
}

double qubit_in_plane_qfi(double theta1, double p, double r, double phi,
                          double total_time) {
  const double num = 8.0 * total_time * ((1.0 - p) * p - r * r);
  const double den = 1.0 + (2.0 * p - 1.0) * std::cos(2.0 * theta1) -
                     2.0 * r * r * (1.0 - std::sin(2.0 * theta1) * std::cos(2.0 * phi));
  if (std::abs(den) < 1e-300) return 0.0;
  return num / den;
}

double qubit_noiseless_optimum(const QubitCase& c, double total_time) {
  switch (c.kind) {
    case QubitCase::Kind::herm_herm:
    case QubitCase::Kind::herm_nonherm:
      return 2.0 * total_time;
    case QubitCase::Kind::nonherm_herm:
      return 4.0 * total_time * std::max(std::norm(c.a), std::norm(c.b));
    case QubitCase::Kind::in_plane:
    case QubitCase::Kind::out_of_plane: {
      const double cs = std::cos(c.theta1), sn = std::sin(c.theta1);
      return 4.0 * total_time * std::max(cs * cs, sn * sn);
    }
  }
  throw std::logic_error("qubit_noiseless_optimum: unknown case");
}

QubitOptimum qubit_case_optimum(const QubitCase& c, QubitMode mode, double total_time,
                                std::uint64_t seed) {
  JumpModel model = qubit_model(c, total_time);
  QubitOptimum opt;
  opt.from_closed_form = true;
  switch (c.kind) {
    case QubitCase::Kind::herm_herm: {
      opt.value = 2.0 * total_time;
      CVector v(2);
      v << 1.0 / kSqrt2, std::exp(kImag * c.theta) / kSqrt2;
      opt.state.rho = v * v.adjoint();
      opt.regime = "unextended-optimal";
      return opt;
    }
    case QubitCase::Kind::nonherm_herm: {
      opt.value = 4.0 * total_time * std::max(std::norm(c.a), std::norm(c.b));
      opt.state = partial_trace_ancilla(
          std::abs(c.a) >= std::abs(c.b) ? basis_state(2, 1) : basis_state(2, 0));
      opt.regime = "unextended-optimal";
      return opt;
    }
    case QubitCase::Kind::herm_nonherm: {
      const double ab = std::abs(c.a * c.b);
      if (mode == QubitMode::unextended) {
        opt.value = 4.0 * total_time * (1.0 - 1.0 / (1.0 + 2.0 * ab));
        double best = -1.0;
        for (const auto& e : qubit_eigenstates(model.noises[0])) {
          const double f = qfi_one_noise(e, model);
          if (f > best) {
            best = f;
            opt.state.rho = e.amplitudes * e.amplitudes.adjoint();
          }
        }
        opt.regime = "unextended-optimal";
      } else {
        opt.value = 2.0 * total_time;  // Bell state recovers the noiseless value
        opt.state.rho = 0.5 * CMatrix::Identity(2, 2);
        opt.regime = ab > 0.5 - 1e-12 ? "unextended-optimal" : "entangled-optimal";
      }
      return opt;
    }
    case QubitCase::Kind::in_plane: {
      const double cs = std::cos(c.theta1), sn = std::sin(c.theta1);
      const double m = std::max((cs + sn) * (cs + sn), (cs - sn) * (cs - sn));
      opt.value = 4.0 * total_time / m;
      double best = -1.0;
      for (const auto& e : qubit_eigenstates(model.noises[0])) {
        const double f = qfi_one_noise(e, model);
        if (f > best) {
          best = f;
          opt.state.rho = e.amplitudes * e.amplitudes.adjoint();
        }
      }
      opt.regime = "unextended-optimal";
      return opt;
    }
    case QubitCase::Kind::out_of_plane: {
      opt.from_closed_form = false;
      OptimizationResult res = optimal_state_search(
          model, mode == QubitMode::extended ? SearchMode::extended : SearchMode::unextended,
          seed);
      opt.value = res.value;
      opt.state = res.state;
      const double purity = (res.state.rho * res.state.rho).trace().real();
      opt.regime = (mode == QubitMode::extended && purity < 1.0 - 1e-6)
                       ? "entangled-optimal"
                       : "unextended-optimal";
      return opt;
    }
  }
  throw std::logic_error("qubit_case_optimum: unknown case");
}

JumpModel parallel_two_qubit_model(const QubitCase& c, double total_time) {
  auto [l1, l2] = qubit_operators(c);
  const CMatrix id = CMatrix::Identity(2, 2);
  JumpModel model;
  model.dim = 4;
  model.signals.push_back(kron(l1, id));
  model.signals.push_back(kron(id, l1));
  model.noises.push_back(kron(l2, id));
  model.noises.push_back(kron(id, l2));
  model.noise_rates = {1.0, 1.0};
  model.total_time = total_time;
  return model;
}

double parallel_two_qubit_optimum(const QubitCase& c, double total_time,
                                  std::uint64_t seed) {
  JumpModel model = parallel_two_qubit_model(c, total_time);
  OptimizationResult res = optimal_state_search(model, SearchMode::unextended, seed);
  return 0.5 * res.value;
}

HierarchyReport hierarchy_report(const QubitCase& c, double total_time,
                                 std::uint64_t seed) {
  HierarchyReport rep;
  rep.unextended = qubit_case_optimum(c, QubitMode::unextended, total_time, seed).value;
  rep.parallel_per_qubit = parallel_two_qubit_optimum(c, total_time, seed);
  rep.optimal = qubit_case_optimum(c, QubitMode::extended, total_time, seed).value;
  rep.noiseless = qubit_noiseless_optimum(c, total_time);
  const double slack = 1e-6 * std::max(rep.noiseless, 1.0);
  rep.chain_holds = rep.unextended <= rep.parallel_per_qubit + slack &&
                    rep.parallel_per_qubit <= rep.optimal + slack &&
                    rep.optimal <= rep.noiseless + slack;
  return rep;
}

double find_outofplane_transition(double theta2, double gap_tol, std::uint64_t seed) {
  auto gap = [&](double theta1) {
    QubitCase c;
    c.kind = QubitCase::Kind::out_of_plane;
    c.theta1 = theta1;
    c.theta2 = theta2;
    const double ext = qubit_case_optimum(c, QubitMode::extended, 1.0, seed).value;
    const double un = qubit_case_optimum(c, QubitMode::unextended, 1.0, seed).value;
    return ext - un;
  };
  double lo = 0.02, hi = 0.25 * M_PI;
  if (gap(lo) > gap_tol || gap(hi) < gap_tol)
    throw std::runtime_error("find_outofplane_transition: no bracketing interval");
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > gap_tol ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// collective spin

CMatrix collective_lowering(int n) {
  CMatrix jm = CMatrix::Zero(n + 1, n + 1);
  for (int k = 1; k <= n; ++k)
    jm(k - 1, k) = std::sqrt(static_cast<double>(k) * (n + 1 - k));
  return jm;
}
CMatrix collective_raising(int n) { return collective_lowering(n).adjoint().eval(); }
CMatrix collective_jz(int n) {
  CMatrix jz = CMatrix::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) jz(k, k) = k - 0.5 * n;
  return jz;
}
CMatrix collective_jx(int n) {
  return 0.5 * (collective_raising(n) + collective_lowering(n));
}
CMatrix collective_jy(int n) {
  return -0.5 * kImag * (collective_raising(n) - collective_lowering(n));
}

CollectiveResult collective_spin_qfi(int n, CollectiveScenario scenario,
                                     double total_time) {
  if (n < 1) throw std::invalid_argument("collective_spin_qfi: n >= 1");
  CollectiveResult out;
  out.model.dim = n + 1;
  out.model.total_time = total_time;
  if (scenario == CollectiveScenario::decay) {
    // spin-sum normalization sum_k (sigma_x - i sigma_y)^(k) = 2 J_-
    out.model.signals.push_back(2.0 * collective_lowering(n));
    out.model.noises.push_back(collective_raising(n));
    out.model.noises.push_back(collective_jz(n));
    out.model.noise_rates = {1.0, 1.0};
    const int k_opt = (n + 1) / 2;  // maximizes k (n + 1 - k) over integers
    out.state = basis_state(n + 1, k_opt);
    std::ostringstream desc;
    desc << "J_z eigenstate m = " << (k_opt - 0.5 * n);
    out.state_description = desc.str();
  } else {
    out.model.signals.push_back(collective_jz(n));
    out.model.noises.push_back(collective_raising(n));
    out.model.noises.push_back(collective_lowering(n));
    out.model.noises.push_back(collective_jx(n));
    out.model.noises.push_back(collective_jy(n));
    out.model.noise_rates = {1.0, 1.0, 1.0, 1.0};
    CVector v = CVector::Zero(n + 1);
    v(0) = 1.0 / kSqrt2;
    v(n) = 1.0 / kSqrt2;
    out.state = make_pure(std::move(v), n + 1);
    out.state_description = "(|J_z = n/2> + |J_z = -n/2>)/sqrt(2)";
  }
  out.value = qfi_theorem1(out.state, out.model);
  return out;
}

// ---------------------------------------------------------------------------
// Pauli Lindblad estimation

CMatrix pauli_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("pauli_string: empty string");
  CMatrix out = CMatrix::Identity(1, 1);
  for (char ch : s) {
    CMatrix factor;
    switch (ch) {
      case 'I': factor = CMatrix::Identity(2, 2); break;
      case 'X': factor = pauli_x(); break;
      case 'Y': factor = pauli_y(); break;
      case 'Z': factor = pauli_z(); break;
      default: throw std::invalid_argument("pauli_string: letters must be I, X, Y, Z");
    }
    out = kron(out, factor);
  }
  return out;
}

JumpModel pauli_model(int n, const std::vector<std::string>& signal_strings,
                      const std::vector<std::string>& noise_strings, double total_time) {
  if (n < 1) throw std::invalid_argument("pauli_model: n >= 1");
  std::set<std::string> seen;
  JumpModel model;
  model.dim = Eigen::Index(1) << n;
  model.total_time = total_time;
  auto check = [&](const std::string& s) {
    if (static_cast<int>(s.size()) != n)
      throw std::invalid_argument("pauli_model: string length mismatch");
    if (!seen.insert(s).second)
      throw std::invalid_argument("pauli_model: duplicate Pauli string " + s);
    if (s == std::string(n, 'I'))
      throw std::invalid_argument("pauli_model: identity string not allowed");
  };
  for (const auto& s : signal_strings) {
    check(s);
    model.signals.push_back(pauli_string(s));
  }
  for (const auto& s : noise_strings) {
    check(s);
    model.noises.push_back(pauli_string(s));
    model.noise_rates.push_back(1.0);
  }
  return model;
}

CMatrix simultaneous_eigenbasis(const std::vector<CMatrix>& ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("simultaneous_eigenbasis: no operators");
  const Eigen::Index d = ops[0].rows();
  for (const auto& a : ops) {
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("simultaneous_eigenbasis: operators must be Hermitian");
    for (const auto& b : ops)
      if ((a * b - b * a).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("simultaneous_eigenbasis: operators must commute");
  }

  CMatrix basis = CMatrix::Identity(d, d);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks{{0, d}};  // [begin, end)
  for (const auto& op : ops) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> next;
    for (auto [b0, b1] : blocks) {
      const Eigen::Index m = b1 - b0;
      if (m == 1) {
        next.emplace_back(b0, b1);
        continue;
      }
      CMatrix sub = basis.middleCols(b0, m).adjoint() * op * basis.middleCols(b0, m);
      HermitianEigs es = hermitian_eigs(0.5 * (sub + sub.adjoint()));
      basis.middleCols(b0, m) = (basis.middleCols(b0, m) * es.vectors).eval();
      Eigen::Index start = 0;
      for (Eigen::Index i = 1; i <= m; ++i) {
        if (i == m || std::abs(es.values(i) - es.values(start)) > tol) {
          next.emplace_back(b0 + start, b0 + i);
          start = i;
        }
      }
    }
    blocks = std::move(next);
  }
  return basis;
}

double commuting_pauli_uniform_qfi(const JumpModel& model) {
  std::vector<CMatrix> ops = model.signals;
  for (const auto& n : model.noises) ops.push_back(n);
  CMatrix basis = simultaneous_eigenbasis(ops);
  CVector uniform = basis.rowwise().sum() / std::sqrt(static_cast<double>(model.dim));
  return qfi_theorem1(make_pure(std::move(uniform), model.dim), model);
}

// ---------------------------------------------------------------------------
// bosonic waveform estimation

BosonicAlgebra make_bosonic(Eigen::Index dim_fock) {
  if (dim_fock < 4) throw std::invalid_argument("make_bosonic: dim_fock >= 4");
  BosonicAlgebra alg;
  alg.dim_fock = dim_fock;
  alg.a = CMatrix::Zero(dim_fock, dim_fock);
  for (Eigen::Index n = 1; n < dim_fock; ++n)
    alg.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  alg.adag = alg.a.adjoint();
  alg.x = (alg.a + alg.adag) / kSqrt2;
  alg.p = kImag * (alg.adag - alg.a) / kSqrt2;
  alg.n = alg.adag * alg.a;
  return alg;
}

BosonicState bosonic_states(const BosonicStateSpec& spec, Eigen::Index dim_fock) {
  switch (spec.kind) {
    case BosonicStateKind::fock: {
      if (spec.fock_n < 0 || spec.fock_n >= dim_fock)
        throw std::invalid_argument("bosonic_states: fock level outside truncation");
      return basis_state(dim_fock, spec.fock_n);
    }
    case BosonicStateKind::smsv: {
      const double r = std::asinh(std::sqrt(std::max(spec.nbar, 0.0)));
      const double th = std::tanh(r);
      CVector v = CVector::Zero(dim_fock);
      double c = 1.0 / std::sqrt(std::cosh(r));
      v(0) = c;
      for (Eigen::Index k = 1; 2 * k < dim_fock; ++k) {
        c *= th * std::sqrt((2.0 * k - 1.0) / (2.0 * k));
        v(2 * k) = c;  // + tanh(r): antisqueezed x quadrature
      }
      return make_pure(std::move(v), dim_fock);
    }
    case BosonicStateKind::tmsv_reduced: {
      // thermal reduced state of a two-mode squeezed vacuum
      const double nbar = std::max(spec.nbar, 0.0);
      RVector pops(dim_fock);
      for (Eigen::Index n = 0; n < dim_fock; ++n)
        pops(n) = std::pow(nbar / (1.0 + nbar), static_cast<double>(n)) / (1.0 + nbar);
      pops /= pops.sum();
      MixedState out;
      out.rho = pops.cast<Complex>().asDiagonal();
      return out;
    }
    case BosonicStateKind::binomial: {
      if (spec.nstar < 1 || spec.nstar >= dim_fock || spec.nbar < 0.0 ||
          spec.nbar > spec.nstar)
        throw std::invalid_argument("bosonic_states: need 0 <= nbar <= nstar < dim_fock");
      CVector v = CVector::Zero(dim_fock);
      v(0) = std::sqrt(1.0 - spec.nbar / spec.nstar);
      v(spec.nstar) = std::sqrt(spec.nbar / spec.nstar);
      return make_pure(std::move(v), dim_fock);
    }
    case BosonicStateKind::superposition: {
      CVector v = CVector::Zero(dim_fock);
      for (const auto& [n, amp] : spec.terms) {
        if (n < 0 || n >= dim_fock)
          throw std::invalid_argument("bosonic_states: term outside truncation");
        v(n) = amp;
      }
      return make_pure(std::move(v), dim_fock);
    }
  }
  throw std::logic_error("bosonic_states: unknown kind");
}

namespace {

struct BosonicMoments {
  Complex ev_a, ev_a2;
  double nbar = 0.0;
};

RVector fock_populations(const BosonicState& state, Eigen::Index dim_fock) {
  RVector pops(dim_fock);
  if (std::holds_alternative<PureState>(state)) {
    const auto& psi = std::get<PureState>(state);
    if (psi.total_dim() != dim_fock)
      throw std::invalid_argument("bosonic state dimension mismatch");
    for (Eigen::Index n = 0; n < dim_fock; ++n) pops(n) = std::norm(psi.amplitudes(n));
  } else {
    const auto& rho = std::get<MixedState>(state);
    if (rho.dim() != dim_fock)
      throw std::invalid_argument("bosonic state dimension mismatch");
    for (Eigen::Index n = 0; n < dim_fock; ++n) pops(n) = rho.rho(n, n).real();
  }
  return pops;
}

BosonicMoments bosonic_moments(const BosonicState& state, const BosonicAlgebra& alg) {
  BosonicMoments m;
  if (std::holds_alternative<PureState>(state)) {
    detail::Moments mom(std::get<PureState>(state));
    m.ev_a = mom.ev(alg.a);
    m.ev_a2 = mom.ev(alg.a * alg.a);
    m.nbar = mom.ev(alg.n).real();
  } else {
    detail::Moments mom(std::get<MixedState>(state));
    m.ev_a = mom.ev(alg.a);
    m.ev_a2 = mom.ev(alg.a * alg.a);
    m.nbar = mom.ev(alg.n).real();
  }
  return m;
}

void truncation_guard(const BosonicState& state, Eigen::Index dim_fock) {
  const RVector pops = fock_populations(state, dim_fock);
  double tail = 0.0;
  for (Eigen::Index n = std::max<Eigen::Index>(dim_fock - 4, 0); n < dim_fock; ++n)
    tail += pops(n);
  if (tail >= 1e-8) {
    std::ostringstream msg;
    msg << "bosonic truncation guard: tail mass " << tail << " above level "
        << dim_fock - 4 << "; retry with dim_fock >= " << 2 * dim_fock;
    throw std::runtime_error(msg.str());
  }
}

}  // namespace

double bosonic_swe_qfi(const BosonicState& state, BosonicNoise noise, bool isotropic,
                       Eigen::Index dim_fock, double total_time) {
  const BosonicAlgebra alg = make_bosonic(dim_fock);
  truncation_guard(state, dim_fock);
  const BosonicMoments m = bosonic_moments(state, alg);

  const double mean2 = std::norm(m.ev_a);
  const Complex cov_a2 = m.ev_a2 - m.ev_a * m.ev_a;
  double val = 0.0;
  if (noise == BosonicNoise::loss) {
    val = m.nbar + 1.0 - mean2;
    const double den = m.nbar - mean2;
    if (den >= 1e-12) val -= std::norm(cov_a2) / den;
  } else {
    val = m.nbar - mean2;
    const double den = m.nbar + 1.0 - mean2;
    if (den >= 1e-12) val -= std::norm(cov_a2) / den;
  }
  val = std::max(val, 0.0);
  return (isotropic ? 2.0 : 1.0) * 2.0 * total_time * val;
}

JumpModel bosonic_swe_model(BosonicNoise noise, bool isotropic, Eigen::Index dim_fock,
                            double total_time) {
  const BosonicAlgebra alg = make_bosonic(dim_fock);
  JumpModel model;
  model.dim = dim_fock;
  model.total_time = total_time;
  model.signals.push_back(alg.x);
  if (isotropic) model.signals.push_back(alg.p);
  model.noises.push_back(noise == BosonicNoise::loss ? alg.a : alg.adag);
  model.noise_rates.push_back(1.0);
  return model;
}

bool swe_optimality_check(const BosonicState& state, Eigen::Index dim_fock) {
  const BosonicAlgebra alg = make_bosonic(dim_fock);
  const BosonicMoments m = bosonic_moments(state, alg);
  return std::abs(m.ev_a) < 1e-8 && std::abs(m.ev_a2) < 1e-8;
}

}  // namespace lindest
