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

#pragma once

// Bitwise adaptive frequency estimation with single-qubit probes, plus the
// exact outcome distribution and phase-state helpers it is checked against.

#include <cstdint>
#include <vector>

#include "qd/qmath.hpp"

namespace qd {

struct PhaseConfig {
  int n = 1;           ///< bits of the estimate
  double omega = 0.0;  ///< frequency in [0, 1)

  /// n in [1, 52], omega in [0, 1).
  void validate() const;
};

struct MeasurementRecord {
  /// Bits in measurement order: least significant first.
  std::vector<int> bits;
  double estimate = 0.0;
};

/// Runs the protocol: for k = n down to 1 expose (|0> + |1>)/sqrt 2 to
/// (omega/2) sigma_3 for pi 2^k, undo the phase of the bits already known,
/// and measure in the {|+>, |->} basis (|-> records a 1).
MeasurementRecord sqft_estimate(const PhaseConfig& cfg, std::uint64_t rng_seed);

/// Probability of reading `bits` (least significant first) from the
/// protocol at frequency omega. Exact, no sampling.
double sqft_sequence_probability(const PhaseConfig& cfg, const std::vector<int>& bits);

/// |2^-n sum_y exp(2 pi i y (omega - omega_tilde))|^2. omega_tilde must be a
/// multiple of 2^-n.
double outcome_prob(double omega, double omega_tilde, int n);

/// N^-1/2 sum_k exp(2 pi i j k / N) |k>.
PureState phase_state(int dim, int j);

/// Product of the n exposed qubits, qubit k exposed for pi 2^(k+1). The
/// amplitude of |y> is 2^(-n/2) exp(2 pi i omega y). Throws ResourceLimit
/// above 12 qubits.
PureState multi_qubit_prepare(const PhaseConfig& cfg);

/// |<phi_j|psi>|^2 for every phase state of the register.
std::vector<double> phase_basis_distribution(const PureState& psi);

}  // namespace qd
