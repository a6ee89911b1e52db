// Copyright 2026 The qdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qd/errors.hpp"
#include "qd/phase_estimation.hpp"
#include "qd/random.hpp"

using namespace qd;

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("zero frequency reads zero") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(sqft_estimate({5, 0.0}, seed).estimate == 0.0);
}

TEST_CASE("0.625 with three bits is read exactly") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const MeasurementRecord r = sqft_estimate({3, 0.625}, seed);
    CHECK(r.estimate == 0.625);
    // 0.101 in binary, least significant first.
    CHECK(r.bits == std::vector<int>{1, 0, 1});
  }
}

TEST_CASE("every terminating frequency is read exactly, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int j = 0; j < (1 << n); ++j) {
      const double omega = std::ldexp(double(j), -n);
      for (std::uint64_t seed : {1ull, 7ull, 12345ull}) CHECK(sqft_estimate({n, omega}, seed).estimate == omega);
    }
  }
}

TEST_CASE("terminating frequencies are read exactly, sampled up to n = 10") {
  Rng rng(3);
  for (int n = 7; n <= 10; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const double omega = std::ldexp(double(rng.below(1u << n)), -n);
      CHECK(sqft_estimate({n, omega}, rng.below(1u << 30)).estimate == omega);
    }
  }
}

TEST_CASE("outcome_prob closed form against the explicit sum") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const double omega = rng.uniform();
    const double tilde = std::ldexp(double(rng.below(1u << n)), -n);
    Complex sum = 0.0;
    const int big = 1 << n;
    for (int y = 0; y < big; ++y) sum += std::polar(1.0, -2 * kPi * y * (omega - tilde));
    CHECK(std::abs(outcome_prob(omega, tilde, n) - std::norm(sum) / (double(big) * big)) < 1e-12);
  }
  CHECK(outcome_prob(0.375, 0.375, 3) == 1.0);
  CHECK_THROWS_AS(outcome_prob(0.3, 0.3, 3), InvalidInput);
}

TEST_CASE("outcome_prob is a distribution") {
  Rng rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + trial % 8;
    const double omega = rng.uniform();
    double total = 0.0;
    for (int j = 0; j < (1 << n); ++j) total += outcome_prob(omega, std::ldexp(double(j), -n), n);
    CHECK(std::abs(total - 1.0) < 1e-10);
  }
}

TEST_CASE("worst-case rounding probability approaches 4/pi^2") {
  const int n = 10;
  const double delta = std::ldexp(1.0, -n - 1);
  const double p = outcome_prob(0.5 + delta, 0.5, n);
  CHECK(std::abs(p - 4.0 / (kPi * kPi)) < 0.01);
}

TEST_CASE("adaptive sequence probabilities equal the closed form") {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const PhaseConfig cfg{n, rng.uniform()};
    for (int j = 0; j < (1 << n); ++j) {
      std::vector<int> bits;
      for (int b = 0; b < n; ++b) bits.push_back((j >> b) & 1);
      CHECK(std::abs(sqft_sequence_probability(cfg, bits) - outcome_prob(cfg.omega, std::ldexp(double(j), -n), n)) <
            1e-12);
    }
  }
}

TEST_CASE("Monte Carlo estimates follow the exact distribution") {
  const PhaseConfig cfg{4, 1.0 / 3.0};
  const int trials = 10000;
  std::vector<int> counts(16, 0);
  for (int i = 0; i < trials; ++i) {
    const MeasurementRecord r = sqft_estimate(cfg, mix_seed(2024, i));
    ++counts[static_cast<std::size_t>(std::llround(r.estimate * 16))];
  }
  for (int j = 0; j < 16; ++j) {
    const double p = outcome_prob(cfg.omega, j / 16.0, 4);
    const double sigma = std::sqrt(trials * p * (1 - p));
    CHECK(std::abs(counts[j] - trials * p) <= 3 * sigma);
  }
}

TEST_CASE("phase states") {
  PureState plus = phase_state(2, 0), minus = phase_state(2, 1);
  CHECK(std::abs(plus(0) - 1 / std::numbers::sqrt2) < 1e-15);
  CHECK(std::abs(plus(1) - 1 / std::numbers::sqrt2) < 1e-15);
  CHECK(std::abs(minus(1) + 1 / std::numbers::sqrt2) < 1e-15);
  for (int j = 0; j < 8; ++j) {
    for (int l = 0; l < 8; ++l) CHECK(std::abs(phase_state(8, j).dot(phase_state(8, l)) - (j == l ? 1.0 : 0.0)) < 1e-12);
  }
  const oracle::Matrix f = oracle::dft(16);
  for (int j = 0; j < 16; ++j) CHECK((phase_state(16, j) - f.col(j)).norm() < 1e-12);
  CHECK_THROWS_AS(phase_state(4, 4), InvalidInput);
}

TEST_CASE("multi-qubit preparation") {
  const PureState zero = multi_qubit_prepare({3, 0.0});
  CHECK((zero - PureState::Constant(8, Complex(1 / std::sqrt(8.0), 0))).norm() < 1e-14);

  const PhaseConfig cfg{3, 0.625};
  const PureState psi = multi_qubit_prepare(cfg);
  for (int y = 0; y < 8; ++y) CHECK(std::abs(psi(y) - std::polar(1 / std::sqrt(8.0), 2 * kPi * 0.625 * y)) < 1e-12);
  // Inverse DFT, then measure.
  const oracle::Vector out = oracle::dft(8).adjoint() * psi;
  CHECK(std::abs(std::norm(out(5)) - 1.0) < 1e-12);

  const PhaseConfig third{4, 1.0 / 3.0};
  const auto dist = phase_basis_distribution(multi_qubit_prepare(third));
  for (int j = 0; j < 16; ++j) CHECK(std::abs(dist[j] - outcome_prob(third.omega, j / 16.0, 4)) < 1e-12);
  CHECK_THROWS_AS(multi_qubit_prepare({13, 0.5}), ResourceLimit);
}

TEST_CASE("total exposure time and precision obey T * d_omega in [pi, 2 pi]") {
  for (int n = 1; n <= 20; ++n) {
    double total = 0.0;
    for (int k = 1; k <= n; ++k) total += kPi * std::ldexp(1.0, k);
    CHECK(total < kPi * std::ldexp(1.0, n + 1));
    const double product = total * std::ldexp(1.0, -n);
    CHECK(product >= kPi - 1e-12);
    CHECK(product <= 2 * kPi);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(sqft_estimate({0, 0.5}, 1), InvalidInput);
  CHECK_THROWS_AS(sqft_estimate({3, 1.0}, 1), InvalidInput);
}
