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

// Deciding which of several candidate generators acts on a probe: minimum
// error binary measurements, entangled probes for field directions,
// cancellation driving, and pairwise elimination.

#include <cstdint>
#include <span>
#include <vector>

#include "qd/dynamics.hpp"
#include "qd/qmath.hpp"
#include "qd/random.hpp"

namespace qd {

struct Hypothesis {
  Generator generator;
  NoiseModel noise;
  double prior = 0.0;
};

struct HypothesisEnsemble {
  std::vector<Hypothesis> hypotheses;

  /// Shared Hilbert-space dimension. Field generators count as one qubit
  /// unless the noise model declares more.
  int dim() const;
  /// Priors in [0, 1] summing to 1 within 1e-12, consistent dimensions.
  void validate() const;
};

/// Two-outcome measurement {E, I - E}; outcome E votes for the first state.
struct BinaryPOVM {
  SquareMatrix projector;
};

struct HelstromResult {
  BinaryPOVM povm;
  double p_error = 0.0;
};

struct DiscriminationResult {
  double p_error = 0.0;
  /// Mutual information between hypothesis and outcome, in bits.
  double info_bits = 0.0;
  double t_star = 0.0;
  /// Binary discriminations fill `measurement`; multi-hypothesis ones fill
  /// `basis` with the orthonormal measurement vectors (outcome j votes for
  /// hypothesis j, any extra vectors are inconclusive).
  BinaryPOVM measurement;
  std::vector<PureState> basis;
};

/// Minimum-error measurement between rho1 (prior p1) and rho2 (prior p2):
/// project onto the positive eigenspace of p1 rho1 - p2 rho2.
/// p_error = 1/2 - 1/2 ||p1 rho1 - p2 rho2||_1.
HelstromResult helstrom(const SquareMatrix& rho1, const SquareMatrix& rho2, double p1, double p2);

/// Evolves |psi0><psi0| under both hypotheses for time t and applies the
/// Helstrom measurement to the two outputs.
DiscriminationResult discriminate_superops(const HypothesisEnsemble& ensemble, const PureState& psi0, double t);

/// discriminate_superops with t chosen by grid + golden-section search over
/// (0, max(4 pi/omega, 10/gamma)].
DiscriminationResult optimize_discrimination_time(const HypothesisEnsemble& ensemble, const PureState& psi0,
                                                  double omega, double gamma);

/// Best measurement time for telling the trivial Hamiltonian from
/// (omega/2) sigma_3 under qubit depolarizing: the smallest t > 0 with
/// tan(omega t / 2) = omega / (2 gamma); pi/omega when gamma = 0.
double optimal_time_qubit(double omega, double gamma);

/// exp(-i t (a.sigma) (x) I) |phi+>, assembled in the Bell basis.
PureState superdense_probe_state(const BlochVector& a_hat, double t);

/// <psi_a(t)|psi_b(t)> = cos^2 t + (a.b) sin^2 t.
Complex superdense_overlap(const BlochVector& a_hat, const BlochVector& b_hat, double t);

/// Entangled-probe discrimination of 2, 3 or 4 field directions with equal
/// pairwise inner products (cos theta in [-1/2, 0] for three, -1/3 for four).
/// Evolves |phi+> with one qubit exposed for t = arccot(sqrt(-cos theta)) and
/// measures in the basis of the resulting states. Two directions with
/// cos theta > 0 use t = pi/2, which minimizes their overlap, and the
/// Helstrom measurement.
DiscriminationResult trine_discriminate(std::span<const BlochVector> directions, std::span<const double> priors);

struct CancellationStrategy {
  SquareMatrix drive;  ///< -H2
  PureState psi0;      ///< (|E_min> + |E_max>)/sqrt 2 of H1 - H2
  double t_star = 0.0; ///< pi / (E_max - E_min)
  double gap = 0.0;    ///< E_max - E_min
};

/// Perfect two-hypothesis discrimination by driving with -H2. Throws
/// NoDiscrimination when H1 - H2 has no spectral spread.
CancellationStrategy cancellation_strategy(const SquareMatrix& h1, const SquareMatrix& h2);

struct FixedTimeOverlap {
  PureState psi0;
  double overlap = 0.0;  ///< |<psi0| W |psi0>| at the optimum
  double arc = 0.0;      ///< angular spread of the spectrum of W on the circle
  bool perfect = false;  ///< arc >= pi, the states can be made orthogonal
};

/// Best initial state for telling K from H + K in a fixed time t, with
/// W = exp(itK) exp(-it(H+K)): the equal superposition of the eigenvectors of
/// W at the two ends of the smallest arc holding its spectrum. The optimal
/// overlap is cos(arc/2) when arc < pi and 0 otherwise.
FixedTimeOverlap fixed_time_overlap(const SquareMatrix& h, const SquareMatrix& k, double t);

struct EliminationStep {
  int first = 0;        ///< hypothesis whose negative is the drive
  int second = 0;
  int eliminated = 0;
  bool saw_first = false;  ///< outcome of the binary projector
  double t_star = 0.0;
};

struct EliminationResult {
  int identified = -1;
  int measurements = 0;
  std::vector<EliminationStep> transcript;
};

/// Pairwise elimination for noiseless hypotheses: each round drives with -H_i
/// for the first two survivors, prepares the cancellation state, evolves under
/// the true Hamiltonian for t*, and measures the projector onto the initial
/// state. Exactly one candidate is eliminated per round.
EliminationResult adaptive_eliminate(const HypothesisEnsemble& ensemble, int true_index, std::uint64_t rng_seed);

/// H2(p) in bits, H2(0) = H2(1) = 0.
double binary_entropy(double p);

/// 1 - H2(p_error). Values in (1/2, 1] are reflected to 1 - p_error.
double binary_info_gain(double p_error);

/// I(X;Y) in bits for priors p(x) and a channel with rows P(y|x).
double mutual_information(std::span<const double> priors, const Eigen::MatrixXd& channel);

/// Two rounds of single-qubit probing for fields a.sigma: a fresh qubit with
/// Bloch vector `prepare`, exposed for `time`, then measured along `axis`.
/// The second round may depend on the first outcome.
struct SingleQubitStep {
  BlochVector prepare = BlochVector::UnitX();
  double time = 0.0;
  BlochVector axis = BlochVector::UnitX();
};

struct SingleQubitStrategy {
  SingleQubitStep first;
  SingleQubitStep second[2];  ///< indexed by first outcome (0 = +, 1 = -)
};

SingleQubitStrategy random_single_qubit_strategy(Rng& rng);

/// Exact mutual information (bits) between the field direction and the two
/// outcomes of `strategy`.
double single_qubit_adaptive_info(std::span<const BlochVector> directions, std::span<const double> priors,
                                  const SingleQubitStrategy& strategy);

/// Four unit vectors with pairwise inner product -1/3.
std::vector<BlochVector> tetrahedral_directions();

/// Three unit vectors with threefold symmetry and pairwise inner product
/// cos_theta in [-1/2, 1).
std::vector<BlochVector> trine_directions(double cos_theta);

}  // namespace qd
