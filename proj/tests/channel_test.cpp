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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lindest/channel.hpp"
#include "lindest/core.hpp"
#include "lindest/linalg.hpp"
#include "lindest/scenarios.hpp"
#include "test_util.hpp"

using namespace lindest;
using namespace lindest::testing;

namespace {

JumpModel qubit_decay(double gamma1, double t) {
  JumpModel model;
  model.dim = 2;
  model.signals = {sigma_minus()};
  model.signal_rate = gamma1;
  model.step_time = t;
  return model;
}

}  // namespace

TEST_CASE("lindblad_step without dynamics is the identity") {
  JumpModel model = qubit_decay(0.0, 1e-3);
  std::mt19937_64 rng(3);
  MixedState rho = random_density(2, rng);
  MixedState out = lindblad_step(rho, model);
  CHECK((out.rho - rho.rho).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("first-order decay populates the ground state") {
  JumpModel model = qubit_decay(1.0, 0.01);
  MixedState up;
  up.rho = CMatrix::Zero(2, 2);
  up.rho(0, 0) = 1.0;
  MixedState out = lindblad_step(up, model);
  CHECK(out.rho(1, 1).real() == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(std::abs(out.rho.trace().real() - 1.0) < 1e-14);
}

TEST_CASE("lindblad_step rejects negative rates") {
  JumpModel model = qubit_decay(-0.5, 1e-3);
  MixedState rho;
  rho.rho = 0.5 * CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(lindblad_step(rho, model), std::invalid_argument);
}

TEST_CASE("first-order step tracks the exact channel to second order") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    JumpModel model = random_model(3, 1, 1, rng, false);
    model.signal_rate = 0.3;
    model.noise_rates = {0.7};
    // choose t so the total dissipation strength sums to 1e-3
    const double strength = model.signal_rate * std::pow(operator_norm(model.signals[0]), 2) +
                            model.noise_rates[0] * std::pow(operator_norm(model.noises[0]), 2);
    model.step_time = 1e-3 / strength;
    MixedState rho = random_density(3, rng);
    MixedState approx = lindblad_step(rho, model);
    MixedState exact = exact_evolve(rho, model, model.step_time);
    CHECK(trace_norm(approx.rho - exact.rho) <= 10.0 * 1e-3 * 1e-3);
  }
}

TEST_CASE("vanishing-signal Kraus set of the noiseless model") {
  JumpModel model = qubit_decay(0.0, 0.25);
  model.signals = {pauli_z() / std::sqrt(2.0)};
  KrausSet set = kraus_short_time(model);
  REQUIRE(set.ops.size() == 2);
  CHECK((set.ops[0] - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(set.ops[1].cwiseAbs().maxCoeff() < 1e-15);
  CHECK((set.derivs[1] - std::sqrt(0.25) * model.signals[0]).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Kraus completeness to second order") {
  std::mt19937_64 rng(19);
  JumpModel model = random_model(3, 1, 2, rng, false);
  for (auto& op : model.signals) op /= operator_norm(op);
  for (auto& op : model.noises) op /= operator_norm(op);
  model.signal_rate = 0.5;
  model.noise_rates = {1.0, 2.0};
  model.step_time = 5e-3;
  KrausSet set = kraus_short_time(model);
  CMatrix sum = CMatrix::Zero(3, 3);
  for (const auto& k : set.ops) sum += k.adjoint() * k;
  double rate_t = 0.0;
  for (double g : {0.5, 1.0, 2.0}) rate_t += g * model.step_time;
  CHECK(operator_norm(sum - CMatrix::Identity(3, 3)) <= 10.0 * rate_t * rate_t * 3);
}

TEST_CASE("Kraus channel differs from the first-order step by exactly t^2 G rho G") {
  std::mt19937_64 rng(29);
  JumpModel model = random_model(3, 1, 1, rng, false);
  model.signal_rate = 1.0;
  model.noise_rates = {1.0};
  model.step_time = 1e-3;
  MixedState rho = random_density(3, rng);
  CMatrix via_kraus = apply_kraus(kraus_short_time(model), rho.rho);
  MixedState via_step = lindblad_step(rho, model);
  CMatrix g = 0.5 * (model.signals[0].adjoint() * model.signals[0] +
                     model.noises[0].adjoint() * model.noises[0]);
  CMatrix remainder = model.step_time * model.step_time * g * rho.rho * g;
  CHECK((via_kraus - via_step.rho - remainder).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Kraus channel agrees with the first-order step for weak dissipation") {
  std::mt19937_64 rng(31);
  JumpModel model = random_model(3, 1, 1, rng, false);
  model.signal_rate = 1.0;
  model.noise_rates = {1.0};
  const double strength = std::pow(operator_norm(model.signals[0]), 2) +
                          std::pow(operator_norm(model.noises[0]), 2);
  model.step_time = 2e-6 / strength;
  MixedState rho = random_density(3, rng);
  CMatrix via_kraus = apply_kraus(kraus_short_time(model), rho.rho);
  MixedState via_step = lindblad_step(rho, model);
  CHECK((via_kraus - via_step.rho).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("exact_evolve reproduces the analytic qubit decay") {
  JumpModel model = qubit_decay(0.8, 1e-3);
  MixedState up;
  up.rho = CMatrix::Zero(2, 2);
  up.rho(0, 0) = 1.0;
  for (double tau : {0.1, 1.0, 3.0}) {
    MixedState out = exact_evolve(up, model, tau);
    CHECK(out.rho(0, 0).real() == doctest::Approx(std::exp(-0.8 * tau)).epsilon(1e-10));
  }
}

TEST_CASE("exact_evolve at zero duration is the identity map") {
  std::mt19937_64 rng(37);
  JumpModel model = random_model(3, 1, 1, rng, false);
  model.signal_rate = 0.4;
  MixedState rho = random_density(3, rng);
  MixedState out = exact_evolve(rho, model, 0.0);
  CHECK((out.rho - rho.rho).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("exact_evolve is a semigroup and stays CPTP") {
  std::mt19937_64 rng(43);
  JumpModel model = random_model(3, 1, 1, rng, false);
  model.signal_rate = 0.6;
  MixedState rho = random_density(3, rng);
  MixedState two_steps = exact_evolve(exact_evolve(rho, model, 0.3), model, 0.5);
  MixedState one_step = exact_evolve(rho, model, 0.8);
  CHECK((two_steps.rho - one_step.rho).cwiseAbs().maxCoeff() < 1e-9);

  CHECK(std::abs(one_step.rho.trace().real() - 1.0) < 1e-10);
  CHECK((one_step.rho - one_step.rho.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(one_step.rho, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("exact_evolve rejects oversized problems") {
  JumpModel model;
  model.dim = 70;
  model.signals = {CMatrix::Zero(70, 70)};
  model.signal_rate = 1.0;
  MixedState rho;
  rho.rho = CMatrix::Identity(70, 70) / 70.0;
  CHECK_THROWS_AS(exact_evolve(rho, model, 0.1), std::runtime_error);
}

TEST_CASE("short-time bound for bosonic loss from a Fock state") {
  const Eigen::Index dim = 12;
  BosonicAlgebra alg = make_bosonic(dim);
  for (int n : {1, 2, 4}) {
    JumpModel model;
    model.dim = dim;
    model.signals = {alg.a};
    model.signal_rate = 0.5;
    MixedState fock;
    fock.rho = CMatrix::Zero(dim, dim);
    fock.rho(n, n) = 1.0;
    const double expect = 4.0 / (0.5 * (2.0 * n - 1.0));
    CHECK(short_time_bound(fock, model) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("short-time bound for qubit decay from spin-up") {
  JumpModel model = qubit_decay(2.0, 1e-3);
  MixedState up;
  up.rho = CMatrix::Zero(2, 2);
  up.rho(0, 0) = 1.0;
  CHECK(short_time_bound(up, model) == doctest::Approx(4.0 / 2.0).epsilon(1e-10));
}

TEST_CASE("stationary states give an infinite bound") {
  JumpModel model = qubit_decay(1.0, 1e-3);
  MixedState down;
  down.rho = CMatrix::Zero(2, 2);
  down.rho(1, 1) = 1.0;  // fixed point of sigma_minus decay
  CHECK(std::isinf(short_time_bound(down, model)));
}

TEST_CASE("all-zero generator is rejected") {
  JumpModel model = qubit_decay(0.0, 1e-3);
  MixedState rho;
  rho.rho = 0.5 * CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(short_time_bound(rho, model), std::invalid_argument);
}
