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

#include "qd/dynamics.hpp"

#include <cmath>
#include <string>

#include "qd/errors.hpp"
#include "qd/tolerances.hpp"

namespace qd {
namespace {

constexpr int kMaxQubits = 10;

void require_time(double t, const char* what) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidInput(std::string(what) + ": duration must be >= 0");
}

void require_rate(double gamma, const char* what) {
  if (!std::isfinite(gamma) || gamma < 0.0) throw InvalidInput(std::string(what) + ": gamma must be >= 0");
}

int qubit_count(long dim) {
  int n = 0;
  while ((1L << n) < dim) ++n;
  return (1L << n) == dim ? n : -1;
}

// Scales every non-identity Pauli component on one qubit by `lambda`. In the
// 2x2 block [[a, b], [c, d]] of that qubit, the I, Z, X, Y coefficients are
// (a+d)/2, (a-d)/2, (b+c)/2, i(b-c)/2.
void depolarize_qubit(SquareMatrix& rho, int n_qubits, int qubit, double lambda) {
  const long dim = rho.rows();
  const long bit = 1L << (n_qubits - 1 - qubit);
  const double keep = 0.5 * (1.0 + lambda);
  const double swap = 0.5 * (1.0 - lambda);
  for (long r = 0; r < dim; ++r) {
    if (r & bit) continue;
    for (long c = 0; c < dim; ++c) {
      if (c & bit) continue;
      const Complex a = rho(r, c);
      const Complex d = rho(r | bit, c | bit);
      // Diagonal block pair: I stays, Z scales.
      rho(r, c) = keep * a + swap * d;
      rho(r | bit, c | bit) = swap * a + keep * d;
      // Off-diagonal pair: both X and Y scale.
      rho(r, c | bit) *= lambda;
      rho(r | bit, c) *= lambda;
    }
  }
}

}  // namespace

FieldHamiltonian FieldHamiltonian::make(double omega, const BlochVector& axis) {
  if (!std::isfinite(omega)) throw InvalidInput("FieldHamiltonian: omega must be finite");
  if (std::abs(axis.norm() - 1.0) > tol::kHermitian) {
    throw InvalidInput("FieldHamiltonian: axis must be a unit vector");
  }
  return {omega, axis};
}

SquareMatrix FieldHamiltonian::matrix() const { return 0.5 * omega * dot_sigma(axis); }

SquareMatrix FieldHamiltonian::on_qubits(int n_qubits) const {
  if (n_qubits < 1) throw InvalidInput("FieldHamiltonian::on_qubits: need at least one qubit");
  if (n_qubits > kMaxQubits) throw ResourceLimit("FieldHamiltonian::on_qubits: more than 10 qubits");
  const SquareMatrix local = matrix();
  const long dim = 1L << n_qubits;
  SquareMatrix out = SquareMatrix::Zero(dim, dim);
  for (int q = 0; q < n_qubits; ++q) {
    SquareMatrix term = identity(1);
    for (int k = 0; k < n_qubits; ++k) term = tensor(term, k == q ? local : identity(2));
    out += term;
  }
  return out;
}

FieldHamiltonian field_from_matrix(const SquareMatrix& h) {
  if (h.rows() != 2 || h.cols() != 2) throw InvalidInput("field_from_matrix: expected a 2x2 matrix");
  if (!is_hermitian(h, tol::kAlgebraic)) throw InvalidInput("field_from_matrix: matrix is not Hermitian");
  BlochVector v;
  for (int i = 0; i < 3; ++i) v(i) = 0.5 * (h * pauli(i + 1)).trace().real();
  const double norm = v.norm();
  if (norm == 0.0) return {0.0, BlochVector::UnitZ()};
  return {2.0 * norm, v / norm};
}

const char* to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::none: return "none";
    case NoiseKind::qubit_depolarizing: return "qubit_depolarizing";
    case NoiseKind::independent_depolarizing: return "independent_depolarizing";
    case NoiseKind::symmetric: return "symmetric";
  }
  return "unknown";
}

void NoiseModel::validate(int dim) const {
  require_rate(gamma, "NoiseModel");
  switch (kind) {
    case NoiseKind::none:
    case NoiseKind::symmetric:
      return;
    case NoiseKind::qubit_depolarizing:
      if (dim != 2) throw InvalidInput("NoiseModel: qubit_depolarizing requires dimension 2");
      return;
    case NoiseKind::independent_depolarizing:
      if (n_qubits < 1 || qubit_count(dim) != n_qubits) {
        throw InvalidInput("NoiseModel: independent_depolarizing requires dimension 2^n_qubits");
      }
      return;
  }
}

SquareMatrix generator_matrix(const Generator& g, int dim) {
  if (const auto* m = std::get_if<SquareMatrix>(&g)) {
    require_square(*m, "generator_matrix");
    if (m->rows() != dim) throw InvalidInput("generator_matrix: dimension mismatch");
    if (!is_hermitian(*m, tol::kAlgebraic)) throw InvalidInput("generator_matrix: generator is not Hermitian");
    return hermitian_part(*m);
  }
  const int n = qubit_count(dim);
  if (n < 1) throw InvalidInput("generator_matrix: a field generator needs a qubit register");
  return std::get<FieldHamiltonian>(g).on_qubits(n);
}

PureState evolve_pure(const PureState& psi0, const SquareMatrix& h, double t) {
  require_square(h, "evolve_pure");
  if (psi0.size() != h.rows()) throw InvalidInput("evolve_pure: state and Hamiltonian dimensions differ");
  if (!std::isfinite(t)) throw InvalidInput("evolve_pure: time must be finite");
  return expm_i(h, t) * psi0;
}

BlochVector evolve_depolarizing_qubit(const BlochVector& p0, const FieldHamiltonian& field, double gamma,
                                      double t) {
  if (p0.norm() > 1.0 + tol::kAlgebraic) throw InvalidInput("evolve_depolarizing_qubit: |P0| exceeds 1");
  require_rate(gamma, "evolve_depolarizing_qubit");
  require_time(t, "evolve_depolarizing_qubit");
  const BlochVector& a = field.axis;
  const double angle = field.omega * t;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  // Rodrigues rotation about a by omega t.
  const BlochVector rotated = p0 * c + a.cross(p0) * s + a * a.dot(p0) * (1.0 - c);
  return std::exp(-gamma * t) * rotated;
}

SquareMatrix evolve_symmetric(const SquareMatrix& rho0, const SquareMatrix& h, double gamma, double t) {
  require_square(rho0, "evolve_symmetric");
  require_square(h, "evolve_symmetric");
  if (rho0.rows() != h.rows()) throw InvalidInput("evolve_symmetric: dimension mismatch");
  require_rate(gamma, "evolve_symmetric");
  require_time(t, "evolve_symmetric");
  const auto d = static_cast<int>(rho0.rows());
  const SquareMatrix u = expm_i(h, t);
  const double lambda = std::exp(-gamma * t);
  return lambda * (u * rho0 * u.adjoint()) + ((1.0 - lambda) / d) * identity(d);
}

SquareMatrix evolve_independent_depolarizing(const SquareMatrix& rho0, int n_qubits,
                                             const FieldHamiltonian& local_field, double gamma, double t) {
  require_square(rho0, "evolve_independent_depolarizing");
  if (n_qubits > kMaxQubits) throw ResourceLimit("evolve_independent_depolarizing: more than 10 qubits");
  if (n_qubits < 1 || qubit_count(rho0.rows()) != n_qubits) {
    throw InvalidInput("evolve_independent_depolarizing: dimension is not 2^n_qubits");
  }
  require_rate(gamma, "evolve_independent_depolarizing");
  require_time(t, "evolve_independent_depolarizing");

  // Local depolarizing commutes with local precession, so the two are applied
  // one after the other.
  SquareMatrix rho = rho0;
  const double lambda = std::exp(-gamma * t);
  if (lambda != 1.0) {
    for (int q = 0; q < n_qubits; ++q) depolarize_qubit(rho, n_qubits, q, lambda);
  }
  const SquareMatrix u1 = expm_i(local_field.matrix(), t);
  SquareMatrix u = identity(1);
  for (int q = 0; q < n_qubits; ++q) u = tensor(u, u1);
  return u * rho * u.adjoint();
}

SquareMatrix evolve(const SquareMatrix& rho0, const EvolutionSpec& spec) {
  require_square(rho0, "evolve");
  const auto dim = static_cast<int>(rho0.rows());
  spec.noise.validate(dim);
  require_time(spec.duration, "evolve");
  switch (spec.noise.kind) {
    case NoiseKind::none: {
      const SquareMatrix u = expm_i(generator_matrix(spec.hamiltonian, dim), spec.duration);
      return u * rho0 * u.adjoint();
    }
    case NoiseKind::qubit_depolarizing: {
      const FieldHamiltonian field = std::holds_alternative<FieldHamiltonian>(spec.hamiltonian)
                                         ? std::get<FieldHamiltonian>(spec.hamiltonian)
                                         : field_from_matrix(std::get<SquareMatrix>(spec.hamiltonian));
      const BlochVector p = evolve_depolarizing_qubit(bloch_from_density(rho0), field, spec.noise.gamma,
                                                      spec.duration);
      return density_from_bloch(p);
    }
    case NoiseKind::independent_depolarizing: {
      FieldHamiltonian field;
      if (const auto* f = std::get_if<FieldHamiltonian>(&spec.hamiltonian)) {
        field = *f;
      } else if (dim == 2) {
        field = field_from_matrix(std::get<SquareMatrix>(spec.hamiltonian));
      } else {
        throw Unsupported("evolve: independent depolarizing needs a per-qubit field generator");
      }
      return evolve_independent_depolarizing(rho0, spec.noise.n_qubits, field, spec.noise.gamma,
                                             spec.duration);
    }
    case NoiseKind::symmetric:
      return evolve_symmetric(rho0, generator_matrix(spec.hamiltonian, dim), spec.noise.gamma,
                              spec.duration);
  }
  throw InvalidInput("evolve: unknown noise kind");
}

}  // namespace qd
