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

#include "qd/discrimination.hpp"
#include "qd/errors.hpp"
#include "qd/metrology.hpp"
#include "qd/random.hpp"

using namespace qd;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

Strategy make(StrategyKind kind, int n, double t, double t_total, double omega, NoiseKind noise, double gamma) {
  return {kind, n, t, t_total, omega, NoiseModel{noise, gamma, n}};
}

}  // namespace

TEST_CASE("shot probabilities: closed forms") {
  const double omega = 0.7, t = 1.9, g = 0.2;
  CHECK(std::abs(shot_probability(make(StrategyKind::product, 1, t, t, omega, NoiseKind::none, 0)) -
                 0.5 * (1 + std::cos(omega * t))) < 1e-14);
  CHECK(std::abs(shot_probability(make(StrategyKind::product, 2, t, t, omega, NoiseKind::qubit_depolarizing, g)) -
                 0.5 * (1 + std::exp(-g * t) * std::cos(omega * t))) < 1e-14);
  CHECK(std::abs(shot_probability(make(StrategyKind::cat, 2, t, t, omega, NoiseKind::independent_depolarizing, g)) -
                 0.5 * (1 + std::exp(-2 * g * t) * std::cos(2 * omega * t))) < 1e-14);
  CHECK(std::abs(shot_probability(make(StrategyKind::cat, 2, t, t, omega, NoiseKind::symmetric, g)) -
                 0.5 * (1 + std::exp(-g * t) * std::cos(2 * omega * t))) < 1e-14);
  CHECK_THROWS_AS(shot_probability(make(StrategyKind::cat, 2, t, t, omega, NoiseKind::qubit_depolarizing, g)),
                  Unsupported);
  CHECK_THROWS_AS(shot_probability(make(StrategyKind::cat, 2, 2 * t, t, omega, NoiseKind::none, 0)), InvalidInput);
}

TEST_CASE("closed forms equal channel simulation for n <= 3") {
  Rng rng(3);
  for (NoiseKind noise : {NoiseKind::none, NoiseKind::independent_depolarizing, NoiseKind::symmetric}) {
    for (StrategyKind kind : {StrategyKind::product, StrategyKind::cat}) {
      for (int n = 1; n <= 3; ++n) {
        const double t = rng.uniform(0.1, 5.0);
        const Strategy s = make(kind, n, t, 10.0, rng.uniform(0.1, 2.0), noise, rng.uniform(0.0, 1.0));
        const double closed = 0.5 * (1 + std::exp(-(kind == StrategyKind::cat && noise == NoiseKind::independent_depolarizing
                                                        ? n * s.noise.gamma
                                                        : (noise == NoiseKind::none ? 0.0 : s.noise.gamma)) *
                                                  t) *
                                         std::cos((kind == StrategyKind::cat ? n : 1) * s.omega * t));
        CHECK(std::abs(simulate_shot_probability(s) - closed) < 1e-10);
      }
    }
  }
}

TEST_CASE("phase derivative matches finite differences") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const StrategyKind kind = trial % 2 ? StrategyKind::cat : StrategyKind::product;
    Strategy s = make(kind, n, rng.uniform(0.1, 3.0), 10.0, rng.uniform(0.1, 2.0), NoiseKind::independent_depolarizing,
                      rng.uniform(0.0, 0.5));
    const double k = kind == StrategyKind::cat ? n : 1;
    // Shift omega so the phase moves by +-h.
    const double h = 1e-5;
    Strategy up = s, down = s;
    up.omega += h / (k * s.t);
    down.omega -= h / (k * s.t);
    const double fd = (shot_probability(up) - shot_probability(down)) / (2 * h);
    CHECK(std::abs(fd - phase_derivative(s)) < 1e-6);
  }
}

TEST_CASE("noiseless precision: shot noise vs Heisenberg scaling") {
  for (int n : {1, 2, 5, 10}) {
    const double t = 0.8;
    // T = t: n product shots or one cat shot.
    Strategy prod = make(StrategyKind::product, n, t, t, 0.9, NoiseKind::none, 0);
    CHECK(std::abs(precision(prod).delta_omega - 1 / (t * std::sqrt(double(n)))) < 1e-12);
    CHECK(std::abs(precision(prod).shots - n) < 1e-12);
    Strategy cat = make(StrategyKind::cat, n, t, t, 0.9, NoiseKind::none, 0);
    CHECK(std::abs(precision(cat).delta_omega - 1 / (t * n)) < 1e-12);
  }
  Strategy stuck = make(StrategyKind::product, 1, 1.0, 1.0, 0.0, NoiseKind::qubit_depolarizing, 0.1);
  CHECK_THROWS_AS(precision(stuck), PreconditionViolation);
}

TEST_CASE("optimized precision under independent depolarizing") {
  const double g = 0.1, T = 100.0;
  for (int n : {1, 2, 3, 4, 8, 16}) {
    const double reference = std::sqrt(2 * kE * g / (n * T));
    const PrecisionOptimum p = optimize_precision(make(StrategyKind::product, n, 1.0, T, 1.0,
                                                       NoiseKind::independent_depolarizing, g));
    const PrecisionOptimum c =
        optimize_precision(make(StrategyKind::cat, n, 1.0, T, 1.0, NoiseKind::independent_depolarizing, g));
    CHECK(std::abs(p.t_star - 0.5 / g) < 1e-6 * p.t_star);
    CHECK(std::abs(c.t_star - 0.5 / (n * g)) < 1e-6 * c.t_star);
    CHECK(std::abs(p.delta_omega - reference) < 1e-6 * reference);
    CHECK(std::abs(c.delta_omega - reference) < 1e-6 * reference);
    CHECK_FALSE(p.boundary);
  }
}

TEST_CASE("symmetric decoherence keeps the cat advantage") {
  const double g = 0.1, T = 100.0;
  for (int n : {2, 4}) {
    const PrecisionOptimum p = optimize_precision(make(StrategyKind::product, n, 1.0, T, 1.0, NoiseKind::symmetric, g));
    const PrecisionOptimum c = optimize_precision(make(StrategyKind::cat, n, 1.0, T, 1.0, NoiseKind::symmetric, g));
    CHECK(std::abs(c.delta_omega * std::sqrt(double(n)) - p.delta_omega) < 1e-6 * p.delta_omega);
  }
}

TEST_CASE("no decoherence: optimum on the budget boundary") {
  const PrecisionOptimum p = optimize_precision(make(StrategyKind::product, 3, 1.0, 50.0, 1.0, NoiseKind::none, 0));
  CHECK(p.boundary);
  CHECK(p.t_star == 50.0);
  CHECK(std::abs(p.delta_omega - 1 / (50.0 * std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("figure1 error probability matches Helstrom on simulated states") {
  // Both qubits see (omega/2) sigma_3; symmetric decoherence in four dimensions.
  Rng rng(7);
  PureState plus(2);
  plus << 1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2;
  const PureState product = tensor(plus, plus);
  const PureState cat = bell_phi_plus();
  for (int trial = 0; trial < 30; ++trial) {
    const double omega = rng.uniform(0.2, 2.0), gamma = rng.uniform(0.0, 1.0), t = rng.uniform(0.0, 10.0);
    HypothesisEnsemble ens;
    const NoiseModel noise{NoiseKind::symmetric, gamma, 2};
    ens.hypotheses = {{FieldHamiltonian::make(0.0, BlochVector::UnitZ()).on_qubits(2), noise, 0.5},
                      {FieldHamiltonian::make(omega, BlochVector::UnitZ()).on_qubits(2), noise, 0.5}};
    CHECK(std::abs(discriminate_superops(ens, cat, t).p_error - figure1_error(ProbeKind::entangled, omega, gamma, t)) <
          1e-10);
    CHECK(std::abs(discriminate_superops(ens, product, t).p_error -
                   figure1_error(ProbeKind::product, omega, gamma, t)) < 1e-10);
  }
}

TEST_CASE("entangled probe has the smaller error on the first quarter period") {
  for (int i = 0; i <= 10000; ++i) {
    const double x = 0.5 * kPi * i / 10000.0;
    CHECK(std::abs(std::cos(x)) <= 0.5 * (1 + std::cos(x)) + 1e-15);
    CHECK(figure1_error(ProbeKind::entangled, 1.0, 0.3, x) <= figure1_error(ProbeKind::product, 1.0, 0.3, x) + 1e-15);
  }
}

TEST_CASE("entangled information gain is higher at every decoherence rate") {
  for (double r : log_spaced(0.01, 100.0, 41)) {
    const Figure1Row row = figure1_point(r);
    CHECK(row.delta_bits >= 1e-6);
  }
}

TEST_CASE("figure1 limits") {
  CHECK(figure1_point(1e-6).delta_bits < 1e-4);
  CHECK(figure1_point(1e3).delta_bits < 1e-6);
  CHECK(figure1_point(1e-4).info_ent > 0.99);
}

TEST_CASE("figure1_curve keeps input order and is thread independent") {
  const auto ratios = log_spaced(0.05, 2.0, 24);
  const Figure1Curve a = figure1_curve(ratios, 512, 1);
  const Figure1Curve b = figure1_curve(ratios, 512, 4);
  REQUIRE(a.rows.size() == ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    CHECK(a.rows[i].ratio == ratios[i]);
    CHECK(a.rows[i].delta_bits == b.rows[i].delta_bits);
  }
  CHECK(a.peak_ratio == b.peak_ratio);
  CHECK(a.peak_delta >= a.rows[0].delta_bits);
}

TEST_CASE("log_spaced endpoints") {
  const auto v = log_spaced(0.01, 10.0, 200);
  CHECK(v.front() == 0.01);
  CHECK(v.back() == 10.0);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
}
