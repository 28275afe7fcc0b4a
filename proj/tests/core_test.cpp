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

#include "lindest/core.hpp"
#include "lindest/fisher.hpp"
#include "lindest/linalg.hpp"
#include "lindest/scenarios.hpp"
#include "test_util.hpp"

using namespace lindest;
using namespace lindest::testing;

TEST_CASE("operator_norm on fixed matrices") {
  CHECK(operator_norm(CMatrix::Identity(5, 5)) == doctest::Approx(1.0).epsilon(1e-12));
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = Complex(0.0, -4.0);
  CHECK(operator_norm(d) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("operator_norm matches the eigensolver route on M^dag M") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix m = random_matrix(6, rng);
    const double expect = std::sqrt(max_eigenvalue(m.adjoint() * m));
    CHECK(operator_norm(m) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("operator_norm is unitarily invariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    CMatrix m = random_matrix(5, rng);
    CMatrix u = random_unitary(5, rng);
    CMatrix v = random_unitary(5, rng);
    CHECK(std::abs(operator_norm(u * m * v) - operator_norm(m)) < 1e-10);
  }
}

TEST_CASE("hs_orthonormalize flags a signal parallel to a noise") {
  JumpModel model;
  model.dim = 2;
  model.signals = {pauli_z()};
  model.noises = {pauli_z()};
  model.noise_rates = {1.0};
  JumpModel out = hs_orthonormalize(model);
  REQUIRE(out.zero_signals.size() == 1);
  CHECK(out.zero_signals[0] == 0);
  CHECK(hs_norm(out.signals[0]) < 1e-12);
}

TEST_CASE("x quadrature against bosonic loss leaves the creation component") {
  const Eigen::Index dim = 20;
  BosonicAlgebra alg = make_bosonic(dim);
  JumpModel model;
  model.dim = dim;
  model.signals = {alg.x};
  model.noises = {alg.a};
  model.noise_rates = {1.0};
  JumpModel out = hs_orthonormalize(model);
  const CMatrix expect = alg.adag / std::sqrt(2.0);
  // equal up to a global phase
  const Complex phase = hs_inner(expect, out.signals[0]) / hs_inner(expect, expect);
  CHECK(std::abs(std::abs(phase) - 1.0) < 1e-10);
  CHECK((out.signals[0] - phase * expect).norm() < 1e-10);
}

TEST_CASE("hs_orthonormalize output is orthogonal and idempotent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    JumpModel model = random_model(4, 1, 1, rng, false);
    JumpModel once = hs_orthonormalize(model);
    CHECK(std::abs(hs_inner(once.signals[0], once.noises[0])) < 1e-12);
    CHECK(std::abs(once.signals[0].trace()) < 1e-12);
    CHECK(std::abs(hs_norm(once.noises[0]) - 1.0) < 1e-12);

    JumpModel twice = hs_orthonormalize(once);
    CHECK((twice.signals[0] - once.signals[0]).norm() < 1e-12);
    CHECK((twice.noises[0] - once.noises[0]).norm() < 1e-12);
  }
}

TEST_CASE("Theorem-1 QFI is unchanged by the normalization pass") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d = 2 + trial % 3;
    JumpModel raw = random_model(d, 1 + trial % 2, trial % 3, rng, false);
    JumpModel norm = hs_orthonormalize(raw);
    PureState psi = make_pure(random_ket(d, rng), d);
    CHECK(qfi_theorem1(psi, raw) == doctest::Approx(qfi_theorem1(psi, norm)).epsilon(1e-8));
  }
}

TEST_CASE("image_basis of the noiseless qubit model") {
  JumpModel model;
  model.dim = 2;
  model.signals = {pauli_z() / std::sqrt(2.0)};
  PureState plus = make_pure(CVector::Ones(2), 2);
  OrthoBasis basis = image_basis(plus, model);
  REQUIRE(basis.kets.size() == 2);
  CHECK(basis.rank == 1);
  CVector minus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(basis.kets[1].dot(minus)) - 1.0) < 1e-12);
}

TEST_CASE("noise eigenstate drops the noise image") {
  JumpModel model;
  model.dim = 2;
  model.signals = {pauli_x() / std::sqrt(2.0)};
  model.noises = {pauli_z() / std::sqrt(2.0)};
  model.noise_rates = {1.0};
  OrthoBasis basis = image_basis(basis_state(2, 0), model);
  CHECK(basis.rank == 1);
  CHECK(basis.n_noise_kets == 0);
}

TEST_CASE("image_basis coefficients reconstruct the images") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    JumpModel model = random_model(5, 1, 2, rng);
    PureState psi = make_pure(random_ket(5, rng), 5);
    OrthoBasis basis = image_basis(psi, model);
    std::vector<CMatrix> ops = model.noises;
    ops.push_back(model.signals[0]);
    for (int j = 0; j < 3; ++j) {
      CVector image = apply_to_system(ops[j], psi);
      CVector rebuilt = CVector::Zero(5);
      for (int k = 0; k < static_cast<int>(basis.kets.size()); ++k)
        rebuilt += basis.coeffs(j, k) * basis.kets[k];
      CHECK((rebuilt - image).norm() < 1e-10);
    }
  }
}

TEST_CASE("noisy projector reduces to |psi><psi| without noise") {
  JumpModel model;
  model.dim = 3;
  model.signals = {CMatrix::Zero(3, 3)};
  std::mt19937_64 rng(5);
  PureState psi = make_pure(random_ket(3, rng), 3);
  CMatrix proj = noisy_projector(psi, model);
  CHECK((proj - psi.amplitudes * psi.amplitudes.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("qubit decay noise spans the whole space from spin-up") {
  JumpModel model;
  model.dim = 2;
  model.signals = {pauli_z() / std::sqrt(2.0)};
  model.noises = {sigma_minus()};
  model.noise_rates = {1.0};
  CMatrix proj = noisy_projector(basis_state(2, 0), model);
  CHECK((proj - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("noisy projector agrees with the Gram-Schmidt oracle") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    JumpModel model = random_model(4, 1, 2, rng);
    PureState psi = make_pure(random_ket(4, rng), 4);
    CMatrix proj = noisy_projector(psi, model);

    OrthoBasis basis = image_basis(psi, model);
    CMatrix oracle = CMatrix::Zero(4, 4);
    for (int k = 0; k < basis.rank; ++k)
      oracle += basis.kets[k] * basis.kets[k].adjoint();
    CHECK((proj - oracle).cwiseAbs().maxCoeff() < 1e-9);

    CHECK((proj * proj - proj).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((proj - proj.adjoint()).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(std::abs(proj.trace().real() - basis.rank) < 1e-8);
    for (const auto& noise : model.noises) {
      CVector image = apply_to_system(noise, psi);
      CHECK((proj * image - image).norm() < 1e-9);
    }
  }
}

TEST_CASE("purify round-trips the reduced state") {
  std::mt19937_64 rng(61);
  MixedState rho = random_density(4, rng);
  PureState psi = purify(rho);
  MixedState back = partial_trace_ancilla(psi);
  CHECK((back.rho - rho.rho).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("state validation catches broken invariants") {
  CVector v = CVector::Ones(3);
  PureState bad{v, 3};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  MixedState rho;
  rho.rho = CMatrix::Identity(2, 2);  // trace 2
  CHECK_THROWS_AS(rho.validate(), std::invalid_argument);

  JumpModel model;
  model.dim = 2;
  model.signals = {pauli_z()};
  model.signal_rate = -1.0;
  CHECK_THROWS_AS(model.validate(), std::invalid_argument);
}
