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

#include "qd/phase_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qd/errors.hpp"
#include "qd/random.hpp"

namespace qd {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRegisterQubits = 12;

// Relative phase after exposure for pi 2^k, in units of pi and reduced mod 2.
// Scaling by 2^k and fmod are exact in binary floating point.
double exposure_phase(double omega, int k) { return std::fmod(std::ldexp(omega, k), 2.0); }

// Bits already measured, read as 0.b_{k+1} ... b_n.
double known_fraction(const std::vector<int>& bits_so_far) {
  // bits_so_far[0] is b_n, the last entry is b_{k+1}.
  double c = 0.0;
  for (auto it = bits_so_far.begin(); it != bits_so_far.end(); ++it) c = 0.5 * (c + *it);
  return c;
}

double plus_probability(double omega, int k, const std::vector<int>& bits_so_far) {
  const double residual = exposure_phase(omega, k) - known_fraction(bits_so_far);
  const double c = std::cos(0.5 * kPi * residual);
  double p = c * c;
  if (p < 1e-12) p = 0.0;
  if (p > 1.0 - 1e-12) p = 1.0;
  return p;
}

double estimate_from_bits(const std::vector<int>& bits) {
  // bits[i] is b_{n-i}.
  const int n = static_cast<int>(bits.size());
  double est = 0.0;
  for (int i = 0; i < n; ++i) est += std::ldexp(double(bits[static_cast<std::size_t>(i)]), -(n - i));
  return est;
}

}  // namespace

void PhaseConfig::validate() const {
  if (n < 1 || n > 52) throw InvalidInput("PhaseConfig: n must lie in [1, 52]");
  if (!(omega >= 0.0 && omega < 1.0)) throw InvalidInput("PhaseConfig: omega must lie in [0, 1)");
}

MeasurementRecord sqft_estimate(const PhaseConfig& cfg, std::uint64_t rng_seed) {
  cfg.validate();
  Rng rng(rng_seed);
  MeasurementRecord rec;
  for (int k = cfg.n; k >= 1; --k) {
    const double p_plus = plus_probability(cfg.omega, k, rec.bits);
    rec.bits.push_back(rng.uniform() < p_plus ? 0 : 1);
  }
  rec.estimate = estimate_from_bits(rec.bits);
  return rec;
}

double sqft_sequence_probability(const PhaseConfig& cfg, const std::vector<int>& bits) {
  cfg.validate();
  if (static_cast<int>(bits.size()) != cfg.n) throw InvalidInput("sqft_sequence_probability: need n bits");
  std::vector<int> seen;
  double prob = 1.0;
  for (int k = cfg.n; k >= 1; --k) {
    const int b = bits[seen.size()];
    if (b != 0 && b != 1) throw InvalidInput("sqft_sequence_probability: bits must be 0 or 1");
    const double p_plus = plus_probability(cfg.omega, k, seen);
    prob *= b == 0 ? p_plus : 1.0 - p_plus;
    seen.push_back(b);
  }
  return prob;
}

double outcome_prob(double omega, double omega_tilde, int n) {
  if (n < 1 || n > 52) throw InvalidInput("outcome_prob: n must lie in [1, 52]");
  const double scaled = std::ldexp(omega_tilde, n);
  if (std::abs(scaled - std::round(scaled)) > 1e-9) throw InvalidInput("outcome_prob: omega_tilde is not an n-bit value");
  double delta = omega - omega_tilde;
  delta -= std::round(delta);  // the sum is periodic in delta with period 1
  const double x = kPi * delta;
  const double big_n = std::ldexp(1.0, n);
  if (std::abs(x) < 1e-6 / big_n) {
    // Series of (sin(N x) / (N sin x))^2 about x = 0.
    return std::max(0.0, 1.0 - (big_n * big_n - 1.0) * x * x / 3.0);
  }
  const double r = std::sin(big_n * x) / (big_n * std::sin(x));
  return std::clamp(r * r, 0.0, 1.0);
}

PureState phase_state(int dim, int j) {
  if (dim < 1) throw InvalidInput("phase_state: dimension must be positive");
  if (j < 0 || j >= dim) throw InvalidInput("phase_state: index out of range");
  PureState out(dim);
  const double norm = 1.0 / std::sqrt(double(dim));
  for (int k = 0; k < dim; ++k) {
    // Reduce j k mod dim first so the angle stays accurate.
    const auto jk = static_cast<long long>(j) * k % dim;
    out(k) = std::polar(norm, 2.0 * kPi * double(jk) / dim);
  }
  return out;
}

PureState multi_qubit_prepare(const PhaseConfig& cfg) {
  cfg.validate();
  if (cfg.n > kMaxRegisterQubits) throw ResourceLimit("multi_qubit_prepare: at most 12 qubits");
  PureState out = PureState::Ones(1);
  // Qubit k carries weight 2^k in the register index; factors are appended
  // from the most significant qubit down.
  for (int k = cfg.n - 1; k >= 0; --k) {
    PureState q(2);
    q << 1.0 / std::numbers::sqrt2, std::polar(1.0 / std::numbers::sqrt2, kPi * exposure_phase(cfg.omega, k + 1));
    out = tensor(out, q);
  }
  return out;
}

std::vector<double> phase_basis_distribution(const PureState& psi) {
  const int dim = static_cast<int>(psi.size());
  std::vector<double> out(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) out[static_cast<std::size_t>(j)] = std::norm(phase_state(dim, j).dot(psi));
  return out;
}

}  // namespace qd
