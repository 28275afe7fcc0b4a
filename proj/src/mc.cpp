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

#include "lindest/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "lindest/channel.hpp"
#include "lindest/core.hpp"
#include "lindest/fisher.hpp"

namespace lindest {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t replication, std::uint64_t shot) {
  std::uint64_t h = splitmix64(seed ^ 0x2545f4914f6cdd1dull);
  h = splitmix64(h + 0x9e3779b97f4a7c15ull * (replication + 1));
  h = splitmix64(h + 0xd1b54a32d192ed03ull * (shot + 1));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

RVector MeasureKernel::probs_at(double sqrt_gamma) const {
  JumpModel m = model;
  m.signal_rate = sqrt_gamma * sqrt_gamma;
  MixedState rho0;
  rho0.rho = psi.amplitudes * psi.amplitudes.adjoint();
  MixedState evolved = exact_evolve(rho0, m, m.step_time);
  RVector p = RVector::Zero(bins());
  for (int i = 0; i < bins() - 1; ++i)
    p(i) = std::max(kets[i].dot(evolved.rho * kets[i]).real(), 0.0);
  p(bins() - 1) = std::max(1.0 - p.head(bins() - 1).sum(), 0.0);
  return p;
}

MeasureKernel optimal_kernel(const PureState& psi, const JumpModel& model) {
  MeasureKernel k;
  k.psi = psi;
  k.model = model;
  k.kets = image_basis(psi, model).kets;
  return k;
}

MeasureKernel kernel_with_kets(const PureState& psi, const JumpModel& model,
                               std::vector<CVector> kets) {
  for (std::size_t i = 0; i < kets.size(); ++i)
    for (std::size_t j = i; j < kets.size(); ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(std::abs(kets[i].dot(kets[j])) - want) > 1e-9)
        throw std::invalid_argument("kernel_with_kets: kets must be orthonormal");
    }
  MeasureKernel k;
  k.psi = psi;
  k.model = model;
  k.kets = std::move(kets);
  return k;
}

std::vector<long long> sample_outcomes(const TrajectoryConfig& cfg, const MeasureKernel& kernel,
                                       int replication) {
  if (cfg.shots < 1) throw std::invalid_argument("sample_outcomes: shots >= 1");
  const RVector probs = kernel.probs_at(std::sqrt(cfg.model.signal_rate));
  const int nb = static_cast<int>(probs.size());
  RVector cdf(nb);
  double acc = 0.0;
  for (int i = 0; i < nb; ++i) {
    acc += std::max(probs(i), 0.0);
    cdf(i) = acc;
  }
  cdf /= acc;

  const int threads = std::max(cfg.threads, 1);
  std::vector<std::vector<long long>> partial(threads, std::vector<long long>(nb, 0));
  auto work = [&](int tid) {
    const long long lo = cfg.shots * tid / threads;
    const long long hi = cfg.shots * (tid + 1) / threads;
    auto& mine = partial[tid];
    for (long long shot = lo; shot < hi; ++shot) {
      const double u = counter_uniform(cfg.seed, static_cast<std::uint64_t>(replication),
                                       static_cast<std::uint64_t>(shot));
      int bin = static_cast<int>(
          std::lower_bound(cdf.data(), cdf.data() + nb, u) - cdf.data());
      if (bin >= nb) bin = nb - 1;
      ++mine[bin];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int tid = 0; tid < threads; ++tid) pool.emplace_back(work, tid);
    for (auto& th : pool) th.join();
  }
  std::vector<long long> counts(nb, 0);
  for (const auto& part : partial)
    for (int i = 0; i < nb; ++i) counts[i] += part[i];
  return counts;
}

namespace {

double log_likelihood(const std::vector<long long>& counts, const RVector& probs) {
  double ll = 0.0;
  for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
    if (counts[i] == 0) continue;
    if (probs(i) <= 0.0) return -std::numeric_limits<double>::infinity();
    ll += static_cast<double>(counts[i]) * std::log(probs(i));
  }
  return ll;
}

}  // namespace

MleResult mle_sqrt_gamma(const std::vector<long long>& counts,
                         const std::function<RVector(double)>& probs_at, double upper) {
  if (upper <= 0.0) throw std::invalid_argument("mle_sqrt_gamma: upper must be positive");
  auto ll = [&](double s) { return log_likelihood(counts, probs_at(s)); };

  // golden-section maximization on [0, upper]
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0, b = upper;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = ll(x1), f2 = ll(x2);
  while (b - a > 1e-12 * upper) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = ll(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = ll(x2);
    }
  }
  double s = 0.5 * (a + b);
  double fs = ll(s);

  // Newton polish on the smooth interior
  for (int it = 0; it < 4; ++it) {
    const double h = std::max(1e-7 * upper, 1e-12);
    const double fp = ll(s + h), fm = ll(s - h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * fs + fm) / (h * h);
    if (!(std::isfinite(d1) && std::isfinite(d2)) || d2 >= 0.0) break;
    double step = -d1 / d2;
    step = std::clamp(step, -0.1 * upper, 0.1 * upper);
    const double cand = std::clamp(s + step, 0.0, upper);
    const double fc = ll(cand);
    if (fc >= fs) {
      s = cand;
      fs = fc;
    } else {
      break;
    }
    if (std::abs(step) < 1e-10) break;
  }

  MleResult res;
  res.estimate = s;
  res.at_boundary = s < 1e-9 * upper;
  if (res.at_boundary) res.estimate = 0.0;
  return res;
}

MleResult mle_sqrt_gamma(const std::vector<long long>& counts, const TrajectoryConfig& cfg,
                         const MeasureKernel& kernel) {
  const double truth = std::sqrt(cfg.model.signal_rate);
  const double upper = 10.0 * std::max(truth, 1e-6);
  return mle_sqrt_gamma(
      counts, [&](double s) { return kernel.probs_at(s); }, upper);
}

EstimationReport crb_saturation(const TrajectoryConfig& cfg, CrbMode mode,
                                const MeasureKernel* kernel_override) {
  cfg.model.validate();
  if (cfg.model.signal_rate <= 0.0)
    throw std::invalid_argument("crb_saturation: needs a finite gamma_1 > 0");
  const MeasureKernel kernel =
      kernel_override ? *kernel_override : optimal_kernel(cfg.state, cfg.model);
  const double truth = std::sqrt(cfg.model.signal_rate);

  double info_per_shot = 0.0;
  if (mode == CrbMode::theorem1_limit) {
    info_per_shot =
        qfi_theorem1(cfg.state, cfg.model) * cfg.model.step_time / cfg.model.total_time;
  } else {
    MeasurementModel mm =
        measure_reset_probabilities(cfg.state, cfg.model, SignalMode::finite);
    if (kernel_override) {
      // CFI of the overridden basis, by central differences of its model
      const double h = 1e-5 * std::max(truth, 1e-8);
      RVector p = kernel.probs_at(truth);
      RVector dp = (kernel.probs_at(truth + h) - kernel.probs_at(truth - h)) / (2.0 * h);
      info_per_shot = cfi(p, dp);
    } else {
      info_per_shot = cfi(mm.probs, mm.dprobs);
    }
  }

  EstimationReport rep;
  rep.estimates.assign(cfg.replications, 0.0);
  const int threads = std::max(cfg.threads, 1);
  auto work = [&](int tid) {
    for (int r = tid; r < cfg.replications; r += threads) {
      TrajectoryConfig shot_cfg = cfg;
      shot_cfg.threads = 1;
      const auto counts = sample_outcomes(shot_cfg, kernel, r);
      rep.estimates[r] = mle_sqrt_gamma(counts, cfg, kernel).estimate;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int tid = 0; tid < threads; ++tid) pool.emplace_back(work, tid);
    for (auto& th : pool) th.join();
  }

  double sq = 0.0;
  for (double e : rep.estimates) sq += (e - truth) * (e - truth);
  rep.rmse = std::sqrt(sq / std::max(cfg.replications, 1));
  rep.crb = 1.0 / std::sqrt(static_cast<double>(cfg.shots) * info_per_shot);
  rep.ratio = rep.rmse / rep.crb;
  rep.ratio_stderr = rep.ratio / std::sqrt(2.0 * std::max(cfg.replications, 1));
  return rep;
}

}  // namespace lindest
