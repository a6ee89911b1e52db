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

#include "qd/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qd/errors.hpp"
#include "qd/optimize.hpp"
#include "qd/tolerances.hpp"

namespace qd {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSymmetryTol = 1e-9;

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

// Probabilities within this distance of 0 or 1 are snapped so that outcomes
// which are certain in exact arithmetic never depend on the random draw.
double snap_probability(double p) {
  p = clamp_probability(p);
  if (p < 1e-12) return 0.0;
  if (p > 1.0 - 1e-12) return 1.0;
  return p;
}

void require_priors(std::span<const double> priors, std::size_t expected, const char* what) {
  if (priors.size() != expected) throw InvalidInput(std::string(what) + ": one prior per hypothesis required");
  double sum = 0.0;
  for (double p : priors) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput(std::string(what) + ": priors must lie in [0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw InvalidInput(std::string(what) + ": priors must sum to 1");
}

int generator_dim(const Hypothesis& h) {
  if (const auto* m = std::get_if<SquareMatrix>(&h.generator)) return static_cast<int>(m->rows());
  return 1 << std::max(1, h.noise.n_qubits);
}

// Rotation of a Bloch vector by exp(-i t a.sigma): angle 2t about a.
BlochVector rotate_bloch(const BlochVector& p, const BlochVector& a, double t) {
  const double c = std::cos(2.0 * t);
  const double s = std::sin(2.0 * t);
  return p * c + a.cross(p) * s + a * a.dot(p) * (1.0 - c);
}

double plus_probability(const SingleQubitStep& step, const BlochVector& field) {
  const BlochVector p = rotate_bloch(step.prepare, field, step.time);
  return clamp_probability(0.5 * (1.0 + step.axis.dot(p)));
}

void check_equal_inner_products(std::span<const BlochVector> dirs, double& cos_theta) {
  for (const auto& d : dirs) {
    if (std::abs(d.norm() - 1.0) > kSymmetryTol) throw InvalidInput("trine_discriminate: directions must be unit vectors");
  }
  cos_theta = dirs[0].dot(dirs[1]);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      if (std::abs(dirs[i].dot(dirs[j]) - cos_theta) > kSymmetryTol) {
        throw InvalidInput("trine_discriminate: pairwise inner products are not all equal");
      }
    }
  }
}

// Weights w >= 0 with sum 1 and sum w_i z_i = 0 for points z on the unit
// circle, or an empty vector if the origin is outside their convex hull.
std::vector<double> zero_convex_combination(const std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<double> best;
  double best_min = -std::numeric_limits<double>::infinity();
  auto consider = [&](std::vector<double> w) {
    const double m = *std::min_element(w.begin(), w.end());
    if (m >= -1e-12 && m > best_min) {
      best_min = m;
      best = std::move(w);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] + z[j]) < 1e-9) {
        std::vector<double> w(n, 0.0);
        w[i] = w[j] = 0.5;
        consider(std::move(w));
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        Eigen::Matrix3d a;
        a << z[i].real(), z[j].real(), z[k].real(), z[i].imag(), z[j].imag(), z[k].imag(), 1.0, 1.0, 1.0;
        if (std::abs(a.determinant()) < 1e-14) continue;
        const Eigen::Vector3d sol = a.fullPivLu().solve(Eigen::Vector3d(0.0, 0.0, 1.0));
        std::vector<double> w(n, 0.0);
        w[i] = sol(0);
        w[j] = sol(1);
        w[k] = sol(2);
        consider(std::move(w));
      }
    }
  }
  for (double& w : best) w = std::max(w, 0.0);
  return best;
}

}  // namespace

int HypothesisEnsemble::dim() const {
  if (hypotheses.empty()) throw InvalidInput("HypothesisEnsemble: no hypotheses");
  return generator_dim(hypotheses.front());
}

void HypothesisEnsemble::validate() const {
  if (hypotheses.empty()) throw InvalidInput("HypothesisEnsemble: no hypotheses");
  std::vector<double> priors;
  const int d = dim();
  for (const auto& h : hypotheses) {
    priors.push_back(h.prior);
    if (generator_dim(h) != d) throw InvalidInput("HypothesisEnsemble: generators have different dimensions");
    h.noise.validate(d);
  }
  require_priors(priors, hypotheses.size(), "HypothesisEnsemble");
}

HelstromResult helstrom(const SquareMatrix& rho1, const SquareMatrix& rho2, double p1, double p2) {
  require_square(rho1, "helstrom");
  require_square(rho2, "helstrom");
  if (rho1.rows() != rho2.rows()) throw InvalidInput("helstrom: density matrices have different dimensions");
  const double priors[] = {p1, p2};
  require_priors(priors, 2, "helstrom");

  const HermEig eig = herm_eig(p1 * rho1 - p2 * rho2);
  const auto d = eig.values.size();
  SquareMatrix e = SquareMatrix::Zero(d, d);
  double norm = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    norm += std::abs(eig.values(k));
    if (eig.values(k) > 0.0) e += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  }
  return {BinaryPOVM{e}, clamp_probability(0.5 - 0.5 * norm)};
}

DiscriminationResult discriminate_superops(const HypothesisEnsemble& ensemble, const PureState& psi0, double t) {
  if (ensemble.hypotheses.size() != 2) throw InvalidInput("discriminate_superops: exactly two hypotheses required");
  ensemble.validate();
  const int d = ensemble.dim();
  if (psi0.size() != d) throw InvalidInput("discriminate_superops: initial state has the wrong dimension");
  if (std::abs(psi0.norm() - 1.0) > tol::kHermitian) throw InvalidInput("discriminate_superops: initial state is not normalized");

  const SquareMatrix rho0 = projector(psi0);
  const auto& h1 = ensemble.hypotheses[0];
  const auto& h2 = ensemble.hypotheses[1];
  const SquareMatrix rho1 = evolve(rho0, {h1.generator, h1.noise, t});
  const SquareMatrix rho2 = evolve(rho0, {h2.generator, h2.noise, t});
  const HelstromResult hr = helstrom(rho1, rho2, h1.prior, h2.prior);

  Eigen::MatrixXd channel(2, 2);
  const double e1 = clamp_probability((hr.povm.projector * rho1).trace().real());
  const double e2 = clamp_probability((hr.povm.projector * rho2).trace().real());
  channel << e1, 1.0 - e1, e2, 1.0 - e2;
  const double priors[] = {h1.prior, h2.prior};

  DiscriminationResult out;
  out.p_error = hr.p_error;
  out.info_bits = mutual_information(priors, channel);
  out.t_star = t;
  out.measurement = hr.povm;
  return out;
}

DiscriminationResult optimize_discrimination_time(const HypothesisEnsemble& ensemble, const PureState& psi0,
                                                  double omega, double gamma) {
  const double window = time_window(omega, gamma);
  const ScalarOptimum best = minimize_scalar(
      [&](double t) { return discriminate_superops(ensemble, psi0, t).p_error; }, 0.0, window);
  return discriminate_superops(ensemble, psi0, best.x);
}

double optimal_time_qubit(double omega, double gamma) {
  if (!(omega > 0.0)) throw InvalidInput("optimal_time_qubit: omega must be positive");
  if (!(gamma >= 0.0)) throw InvalidInput("optimal_time_qubit: gamma must be non-negative");
  if (gamma == 0.0) return kPi / omega;
  // atan lies in (0, pi/2), which selects the first branch.
  return 2.0 / omega * std::atan(omega / (2.0 * gamma));
}

PureState superdense_probe_state(const BlochVector& a_hat, double t) {
  if (std::abs(a_hat.norm() - 1.0) > tol::kHermitian) throw InvalidInput("superdense_probe_state: axis must be a unit vector");
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Complex i(0.0, 1.0);
  // (a.sigma (x) I)|phi+> = a1 |psi+> - i a2 |psi-> + a3 |phi->.
  return c * bell_phi_plus() - i * s * (a_hat(0) * bell_psi_plus() - i * a_hat(1) * bell_psi_minus() +
                                        a_hat(2) * bell_phi_minus());
}

Complex superdense_overlap(const BlochVector& a_hat, const BlochVector& b_hat, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return {c * c + a_hat.dot(b_hat) * s * s, 0.0};
}

DiscriminationResult trine_discriminate(std::span<const BlochVector> directions, std::span<const double> priors) {
  const std::size_t n = directions.size();
  if (n < 2 || n > 4) throw InvalidInput("trine_discriminate: need 2, 3 or 4 directions");
  require_priors(priors, n, "trine_discriminate");
  double cos_theta = 0.0;
  check_equal_inner_products(directions, cos_theta);
  if (n == 3 && (cos_theta < -0.5 - kSymmetryTol || cos_theta > kSymmetryTol)) {
    throw InvalidInput("trine_discriminate: a trine needs cos theta in [-1/2, 0]");
  }
  if (n == 4 && std::abs(cos_theta + 1.0 / 3.0) > kSymmetryTol) {
    throw InvalidInput("trine_discriminate: four directions must be tetrahedral (cos theta = -1/3)");
  }

  const double t = cos_theta < 0.0 ? std::atan(1.0 / std::sqrt(-cos_theta)) : kPi / 2.0;
  std::vector<PureState> states;
  for (const auto& a : directions) states.push_back(superdense_probe_state(a, t));

  DiscriminationResult out;
  out.t_star = t;
  if (n == 2) {
    const HelstromResult hr = helstrom(projector(states[0]), projector(states[1]), priors[0], priors[1]);
    Eigen::MatrixXd channel(2, 2);
    for (int a = 0; a < 2; ++a) {
      const double pe = clamp_probability((states[a].adjoint() * hr.povm.projector * states[a])(0, 0).real());
      channel(a, 0) = pe;
      channel(a, 1) = 1.0 - pe;
    }
    out.p_error = hr.p_error;
    out.info_bits = mutual_information(priors, channel);
    out.measurement = hr.povm;
    return out;
  }

  // Symmetric (Lowdin) orthonormalization of the evolved states; when the
  // states are already orthogonal this returns them unchanged.
  const auto dn = static_cast<Eigen::Index>(n);
  SquareMatrix psi(4, dn);
  for (Eigen::Index a = 0; a < dn; ++a) psi.col(a) = states[static_cast<std::size_t>(a)];
  const HermEig gram = herm_eig(psi.adjoint() * psi);
  if (gram.values(0) <= 1e-12) throw InvalidInput("trine_discriminate: evolved states are linearly dependent");
  const SquareMatrix inv_sqrt =
      gram.vectors * gram.values.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * gram.vectors.adjoint();
  SquareMatrix basis = psi * inv_sqrt;
  if (n == 3) {
    // Complete the basis with the inconclusive direction.
    const HermEig rest = herm_eig(identity(4) - basis * basis.adjoint());
    basis.conservativeResize(4, 4);
    basis.col(3) = rest.vectors.col(3);
  }

  Eigen::MatrixXd channel(dn, basis.cols());
  double p_correct = 0.0;
  for (Eigen::Index a = 0; a < dn; ++a) {
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      channel(a, j) = clamp_probability(std::norm(basis.col(j).dot(psi.col(a))));
    }
    p_correct += priors[static_cast<std::size_t>(a)] * channel(a, a);
  }
  out.p_error = clamp_probability(1.0 - p_correct);
  out.info_bits = mutual_information(priors, channel);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) out.basis.push_back(basis.col(j));
  return out;
}

CancellationStrategy cancellation_strategy(const SquareMatrix& h1, const SquareMatrix& h2) {
  require_square(h1, "cancellation_strategy");
  require_square(h2, "cancellation_strategy");
  if (h1.rows() != h2.rows()) throw InvalidInput("cancellation_strategy: dimension mismatch");
  if (!is_hermitian(h1, tol::kAlgebraic) || !is_hermitian(h2, tol::kAlgebraic)) {
    throw InvalidInput("cancellation_strategy: Hamiltonians must be Hermitian");
  }
  const HermEig eig = herm_eig(h1 - h2);
  const auto last = eig.values.size() - 1;
  const double gap = eig.values(last) - eig.values(0);
  if (gap <= tol::kGap) throw NoDiscrimination("cancellation_strategy: H1 - H2 has no spectral spread");

  CancellationStrategy out;
  out.drive = -hermitian_part(h2);
  out.psi0 = (eig.vectors.col(0) + eig.vectors.col(last)) / std::numbers::sqrt2;
  out.t_star = kPi / gap;
  out.gap = gap;
  return out;
}

FixedTimeOverlap fixed_time_overlap(const SquareMatrix& h, const SquareMatrix& k, double t) {
  if (!(t > 0.0)) throw InvalidInput("fixed_time_overlap: t must be positive");
  require_square(h, "fixed_time_overlap");
  require_square(k, "fixed_time_overlap");
  if (h.rows() != k.rows()) throw InvalidInput("fixed_time_overlap: dimension mismatch");

  const SquareMatrix w = expm_i(k, -t) * expm_i(h + k, t);
  const UnitaryEig eig = unitary_eig(w);
  const std::size_t n = eig.args.size();

  FixedTimeOverlap out;
  if (n == 1) {
    out.psi0 = eig.vectors.col(0);
    out.overlap = 1.0;
    return out;
  }

  // The smallest arc holding the spectrum is the circle minus its largest gap.
  std::size_t gap_at = n - 1;
  double largest_gap = eig.args.front() + 2.0 * kPi - eig.args.back();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double g = eig.args[i + 1] - eig.args[i];
    if (g > largest_gap) {
      largest_gap = g;
      gap_at = i;
    }
  }
  out.arc = 2.0 * kPi - largest_gap;
  const std::size_t arc_end = gap_at;
  const std::size_t arc_start = (gap_at + 1) % n;

  if (out.arc < kPi) {
    out.psi0 = (eig.vectors.col(static_cast<Eigen::Index>(arc_start)) +
                eig.vectors.col(static_cast<Eigen::Index>(arc_end))) /
               std::numbers::sqrt2;
    out.overlap = std::abs(out.psi0.dot(w * out.psi0));
    return out;
  }

  out.perfect = true;
  std::vector<Complex> points;
  for (double a : eig.args) points.push_back(std::polar(1.0, a));
  const std::vector<double> weights = zero_convex_combination(points);
  out.psi0 = PureState::Zero(static_cast<Eigen::Index>(n));
  if (weights.empty()) {
    // Only reachable through rounding right at arc == pi.
    out.psi0 = (eig.vectors.col(static_cast<Eigen::Index>(arc_start)) +
                eig.vectors.col(static_cast<Eigen::Index>(arc_end))) /
               std::numbers::sqrt2;
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      out.psi0 += std::sqrt(weights[a]) * eig.vectors.col(static_cast<Eigen::Index>(a));
    }
    out.psi0.normalize();
  }
  out.overlap = 0.0;
  return out;
}

EliminationResult adaptive_eliminate(const HypothesisEnsemble& ensemble, int true_index, std::uint64_t rng_seed) {
  ensemble.validate();
  const auto n = static_cast<int>(ensemble.hypotheses.size());
  if (n < 2) throw InvalidInput("adaptive_eliminate: need at least two hypotheses");
  if (true_index < 0 || true_index >= n) throw InvalidInput("adaptive_eliminate: true_index out of range");
  const int d = ensemble.dim();
  std::vector<SquareMatrix> hams;
  for (const auto& h : ensemble.hypotheses) {
    if (h.noise.kind != NoiseKind::none && h.noise.gamma != 0.0) {
      throw Unsupported("adaptive_eliminate: pairwise elimination is defined for noiseless hypotheses only");
    }
    hams.push_back(generator_matrix(h.generator, d));
  }

  Rng rng(rng_seed);
  std::vector<int> survivors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) survivors[static_cast<std::size_t>(i)] = i;

  EliminationResult out;
  while (survivors.size() > 1) {
    const int first = survivors[0];
    const int second = survivors[1];
    const CancellationStrategy cs = cancellation_strategy(hams[static_cast<std::size_t>(second)],
                                                          hams[static_cast<std::size_t>(first)]);
    const PureState final_state =
        evolve_pure(cs.psi0, hams[static_cast<std::size_t>(true_index)] + cs.drive, cs.t_star);
    const double p_first = snap_probability(std::norm(cs.psi0.dot(final_state)));
    const bool saw_first = rng.uniform() < p_first;
    const int eliminated = saw_first ? second : first;

    out.transcript.push_back({first, second, eliminated, saw_first, cs.t_star});
    ++out.measurements;
    survivors.erase(std::find(survivors.begin(), survivors.end(), eliminated));
  }
  out.identified = survivors.front();
  return out;
}

double binary_entropy(double p) {
  p = clamp_probability(p);
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double binary_info_gain(double p_error) {
  if (!(p_error >= 0.0 && p_error <= 1.0)) throw InvalidInput("binary_info_gain: p_error must lie in [0, 1]");
  if (p_error > 0.5) p_error = 1.0 - p_error;
  return 1.0 - binary_entropy(p_error);
}

double mutual_information(std::span<const double> priors, const Eigen::MatrixXd& channel) {
  if (static_cast<Eigen::Index>(priors.size()) != channel.rows()) {
    throw InvalidInput("mutual_information: one channel row per prior required");
  }
  Eigen::VectorXd p_out = Eigen::VectorXd::Zero(channel.cols());
  for (Eigen::Index x = 0; x < channel.rows(); ++x) {
    for (Eigen::Index y = 0; y < channel.cols(); ++y) {
      p_out(y) += priors[static_cast<std::size_t>(x)] * clamp_probability(channel(x, y));
    }
  }
  double info = 0.0;
  for (Eigen::Index x = 0; x < channel.rows(); ++x) {
    const double px = priors[static_cast<std::size_t>(x)];
    if (px == 0.0) continue;
    for (Eigen::Index y = 0; y < channel.cols(); ++y) {
      const double pyx = clamp_probability(channel(x, y));
      if (pyx == 0.0 || p_out(y) == 0.0) continue;
      info += px * pyx * std::log2(pyx / p_out(y));
    }
  }
  return std::max(info, 0.0);
}

SingleQubitStrategy random_single_qubit_strategy(Rng& rng) {
  auto step = [&rng] {
    SingleQubitStep s;
    s.prepare = random_unit_vector(rng);
    s.time = rng.uniform(0.0, kPi);
    s.axis = random_unit_vector(rng);
    return s;
  };
  SingleQubitStrategy out;
  out.first = step();
  out.second[0] = step();
  out.second[1] = step();
  return out;
}

double single_qubit_adaptive_info(std::span<const BlochVector> directions, std::span<const double> priors,
                                  const SingleQubitStrategy& strategy) {
  require_priors(priors, directions.size(), "single_qubit_adaptive_info");
  const auto n = static_cast<Eigen::Index>(directions.size());
  Eigen::MatrixXd channel(n, 4);
  for (Eigen::Index a = 0; a < n; ++a) {
    const BlochVector& field = directions[static_cast<std::size_t>(a)];
    const double p1 = plus_probability(strategy.first, field);
    const double first[2] = {p1, 1.0 - p1};
    for (int o1 = 0; o1 < 2; ++o1) {
      const double p2 = plus_probability(strategy.second[o1], field);
      channel(a, 2 * o1) = first[o1] * p2;
      channel(a, 2 * o1 + 1) = first[o1] * (1.0 - p2);
    }
  }
  return mutual_information(priors, channel);
}

std::vector<BlochVector> trine_directions(double cos_theta) {
  if (cos_theta < -0.5 - 1e-15 || cos_theta >= 1.0) throw InvalidInput("trine_directions: cos theta must lie in [-1/2, 1)");
  const double s = std::sqrt(2.0 * (1.0 - cos_theta) / 3.0);
  const double h = std::sqrt(std::max(0.0, (1.0 + 2.0 * cos_theta) / 3.0));
  std::vector<BlochVector> out;
  for (int k = 0; k < 3; ++k) {
    const double phi = 2.0 * kPi * k / 3.0;
    out.emplace_back(s * std::cos(phi), s * std::sin(phi), h);
  }
  return out;
}

std::vector<BlochVector> tetrahedral_directions() {
  std::vector<BlochVector> out = trine_directions(-1.0 / 3.0);
  out.emplace_back(0.0, 0.0, -1.0);
  return out;
}

}  // namespace qd
