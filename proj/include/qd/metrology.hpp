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

// Frequency estimation with n probe qubits: unentangled probes versus a cat
// state, with and without decoherence, and the information-gain comparison
// for telling the trivial Hamiltonian from (omega/2) sigma_3.

#include <vector>

#include "qd/dynamics.hpp"

namespace qd {

enum class StrategyKind { product, cat };

const char* to_string(StrategyKind kind);

struct Strategy {
  StrategyKind kind = StrategyKind::product;
  int n = 1;              ///< qubits
  double t = 1.0;         ///< duration of one shot
  double t_total = 1.0;   ///< time budget
  double omega = 0.0;
  NoiseModel noise;       ///< gamma is per qubit for independent noise

  /// n >= 1, 0 < t <= t_total, gamma >= 0 and a supported noise kind.
  void validate() const;
};

/// Probability of the + outcome of sigma_1 (product: on one qubit; cat: the
/// parity sigma_1 on every qubit). Closed form; for n <= 3 it is
/// cross-checked against simulate_shot_probability.
double shot_probability(const Strategy& s);

/// The same probability obtained by evolving the probe state through the
/// dynamics channels. At most 6 qubits.
double simulate_shot_probability(const Strategy& s);

/// dP/dphi where phi is the accumulated phase (omega t, or n omega t for cat).
double phase_derivative(const Strategy& s);

struct PrecisionReport {
  double delta_omega = 0.0;
  double p_plus = 0.0;
  /// Repetitions that fit in the budget, n T/t for product and T/t for cat.
  /// Kept continuous.
  double shots = 0.0;
};

/// Error propagation: dP = sqrt(P(1 - P)/m), d_omega = dP / (t k |dP/dphi|)
/// with k = 1 for product and n for cat. Throws PreconditionViolation at a
/// working point with dP/dphi = 0.
PrecisionReport precision(const Strategy& s);

struct PrecisionOptimum {
  double t_star = 0.0;
  double delta_omega = 0.0;
  /// The optimum sits on t = t_total (always so without decoherence).
  bool boundary = false;
};

/// Minimizes d_omega over t in (0, t_total] with omega tuned so that the
/// working point has cos phi = 0. s.t is ignored.
PrecisionOptimum optimize_precision(const Strategy& s);

struct Figure1Row {
  double ratio = 0.0;  ///< gamma / omega
  double t_star_ent = 0.0;
  double t_star_prod = 0.0;
  double info_ent = 0.0;   ///< bits
  double info_prod = 0.0;  ///< bits
  double delta_bits = 0.0;
};

struct Figure1Curve {
  std::vector<Figure1Row> rows;
  double peak_ratio = 0.0;
  double peak_delta = 0.0;
};

enum class ProbeKind { entangled, product };

/// Minimum error probability for trivial vs (omega/2) sigma_3 on both
/// qubits, equal priors, symmetric decoherence: 1/2 - 1/2 e^(-gamma t) |sin theta|,
/// where theta is the angle between the two noiseless outputs.
double figure1_error(ProbeKind probe, double omega, double gamma, double t);

/// Separately t-optimized 1 - H2(P_error) for both probes at omega = 1.
Figure1Row figure1_point(double ratio, int grid = 2048);

/// One row per ratio, in input order, then a golden-section refinement of the
/// peak in log ratio.
Figure1Curve figure1_curve(const std::vector<double>& ratios, int grid = 2048, int threads = 1);

/// count points from lo to hi, equally spaced in log.
std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace qd
