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

#include "qd/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qd/discrimination.hpp"
#include "qd/errors.hpp"
#include "qd/optimize.hpp"
#include "qd/parallel.hpp"

namespace qd {
namespace {

constexpr int kMaxSimulatedQubits = 6;

double gamma_of(const Strategy& s) { return s.noise.kind == NoiseKind::none ? 0.0 : s.noise.gamma; }

// Contraction rate of the measured coherence.
double effective_rate(const Strategy& s) {
  const double g = gamma_of(s);
  if (s.kind == StrategyKind::cat && s.noise.kind == NoiseKind::independent_depolarizing) return s.n * g;
  return g;
}

double phase_multiplier(const Strategy& s) { return s.kind == StrategyKind::cat ? s.n : 1.0; }

double repetitions(const Strategy& s) {
  return (s.kind == StrategyKind::product ? s.n : 1) * s.t_total / s.t;
}

SquareMatrix x_parity(int n) {
  SquareMatrix out = pauli(1);
  for (int k = 1; k < n; ++k) out = tensor(out, pauli(1));
  return out;
}

}  // namespace

const char* to_string(StrategyKind kind) { return kind == StrategyKind::product ? "product" : "cat"; }

void Strategy::validate() const {
  if (n < 1) throw InvalidInput("Strategy: n must be at least 1");
  if (!(t > 0.0)) throw InvalidInput("Strategy: t must be positive");
  if (!(t <= t_total)) throw InvalidInput("Strategy: t exceeds the time budget");
  if (!std::isfinite(omega)) throw InvalidInput("Strategy: omega must be finite");
  if (!(noise.gamma >= 0.0) || !std::isfinite(noise.gamma)) throw InvalidInput("Strategy: gamma must be non-negative");
  if (kind == StrategyKind::cat && n >= 2 && noise.kind == NoiseKind::qubit_depolarizing) {
    throw Unsupported("Strategy: single-qubit depolarizing cannot act on a cat state; use independent_depolarizing");
  }
}

double shot_probability(const Strategy& s) {
  s.validate();
  const double p = 0.5 * (1.0 + std::exp(-effective_rate(s) * s.t) * std::cos(phase_multiplier(s) * s.omega * s.t));
  if (s.n <= 3) {
    const double sim = simulate_shot_probability(s);
    if (std::abs(sim - p) > 1e-10) {
      throw PreconditionViolation("shot_probability: closed form disagrees with channel simulation");
    }
  }
  return std::clamp(p, 0.0, 1.0);
}

double simulate_shot_probability(const Strategy& s) {
  s.validate();
  const auto field = FieldHamiltonian::make(s.omega, BlochVector::UnitZ());
  if (s.kind == StrategyKind::product && (s.n == 1 || s.noise.kind == NoiseKind::qubit_depolarizing)) {
    // Product probes are independent; one qubit carries the statistics.
    NoiseModel noise = s.noise;
    noise.n_qubits = 1;
    const SquareMatrix rho = evolve(density_from_bloch(BlochVector::UnitX()), {field, noise, s.t});
    return std::clamp(0.5 * (1.0 + (pauli(1) * rho).trace().real()), 0.0, 1.0);
  }
  if (s.n > kMaxSimulatedQubits) throw ResourceLimit("simulate_shot_probability: at most 6 qubits");

  const int dim = 1 << s.n;
  PureState psi0;
  SquareMatrix observable;
  if (s.kind == StrategyKind::cat) {
    psi0 = PureState::Zero(dim);
    psi0(0) = psi0(dim - 1) = 1.0 / std::numbers::sqrt2;
    observable = x_parity(s.n);
  } else {
    psi0 = PureState::Constant(dim, Complex(std::pow(2.0, -0.5 * s.n), 0.0));
    observable = tensor(pauli(1), identity(dim / 2));
  }
  NoiseModel noise = s.noise;
  noise.n_qubits = s.n;
  const SquareMatrix rho = evolve(projector(psi0), {field, noise, s.t});
  return std::clamp(0.5 * (1.0 + (observable * rho).trace().real()), 0.0, 1.0);
}

double phase_derivative(const Strategy& s) {
  s.validate();
  return -0.5 * std::exp(-effective_rate(s) * s.t) * std::sin(phase_multiplier(s) * s.omega * s.t);
}

PrecisionReport precision(const Strategy& s) {
  PrecisionReport out;
  out.p_plus = shot_probability(s);
  out.shots = repetitions(s);
  const double slope = std::abs(phase_derivative(s));
  if (slope == 0.0) throw PreconditionViolation("precision: the working point is insensitive to omega");
  const double dp = std::sqrt(out.p_plus * (1.0 - out.p_plus) / out.shots);
  out.delta_omega = dp / (s.t * phase_multiplier(s) * slope);
  return out;
}

PrecisionOptimum optimize_precision(const Strategy& s) {
  Strategy probe = s;
  probe.t = s.t_total;
  probe.validate();
  const double rate = effective_rate(s);
  const double k = phase_multiplier(s);
  // At cos phi = 0: P = 1/2 and |dP/dphi| = e^(-rate t)/2.
  auto delta = [&](double t) {
    Strategy at = s;
    at.t = t;
    return std::exp(rate * t) / (t * k * std::sqrt(repetitions(at)));
  };
  PrecisionOptimum out;
  if (rate == 0.0) {
    out.t_star = s.t_total;
    out.delta_omega = delta(s.t_total);
    out.boundary = true;
    return out;
  }
  const ScalarOptimum best = minimize_scalar(delta, 0.0, s.t_total);
  out.t_star = best.x;
  out.delta_omega = best.value;
  out.boundary = best.x >= s.t_total * (1.0 - 1e-9);
  return out;
}

double figure1_error(ProbeKind probe, double omega, double gamma, double t) {
  double sin_theta = 0.0;
  if (probe == ProbeKind::entangled) {
    sin_theta = std::abs(std::sin(omega * t));
  } else {
    const double c = std::cos(0.5 * omega * t);
    sin_theta = std::sqrt(std::max(0.0, 1.0 - c * c * c * c));
  }
  return std::clamp(0.5 - 0.5 * std::exp(-gamma * t) * sin_theta, 0.0, 1.0);
}

Figure1Row figure1_point(double ratio, int grid) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw InvalidInput("figure1_point: ratio must be positive");
  const double omega = 1.0;
  const double gamma = ratio;
  // Both errors are periodic in t with period at most 2 pi / omega under a
  // decaying envelope, so the first period holds the optimum.
  const double window = std::min(time_window(omega, gamma), 2.0 * std::numbers::pi / omega);
  auto best = [&](ProbeKind probe) {
    return maximize_scalar([&](double t) { return binary_info_gain(figure1_error(probe, omega, gamma, t)); }, 0.0,
                           window, grid);
  };
  const ScalarOptimum ent = best(ProbeKind::entangled);
  const ScalarOptimum prod = best(ProbeKind::product);
  return {ratio, ent.x, prod.x, ent.value, prod.value, ent.value - prod.value};
}

Figure1Curve figure1_curve(const std::vector<double>& ratios, int grid, int threads) {
  Figure1Curve out;
  if (ratios.empty()) return out;
  out.rows.resize(ratios.size());
  parallel_for(ratios.size(), threads, [&](std::size_t i) { out.rows[i] = figure1_point(ratios[i], grid); });

  std::size_t top = 0;
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (out.rows[i].delta_bits > out.rows[top].delta_bits) top = i;
  }
  out.peak_ratio = out.rows[top].ratio;
  out.peak_delta = out.rows[top].delta_bits;
  if (out.rows.size() < 2) return out;

  const double lo = std::log(out.rows[top == 0 ? 0 : top - 1].ratio);
  const double hi = std::log(out.rows[std::min(top + 1, out.rows.size() - 1)].ratio);
  if (!(hi > lo)) return out;
  const ScalarOptimum refined =
      maximize_scalar([&](double x) { return figure1_point(std::exp(x), grid).delta_bits; }, lo, hi, 32);
  if (refined.value > out.peak_delta) {
    out.peak_ratio = std::exp(refined.x);
    out.peak_delta = refined.value;
  }
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo) || count < 1) throw InvalidInput("log_spaced: need 0 < lo <= hi and count >= 1");
  std::vector<double> out(static_cast<std::size_t>(count));
  out[0] = lo;
  if (count == 1) {
    return out;
  }
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (count - 1);
  for (int i = 1; i < count; ++i) out[static_cast<std::size_t>(i)] = std::exp(a + step * i);
  out.back() = hi;
  return out;
}

}  // namespace qd
