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

// Evolution engines. Every channel here is given in closed form; the tests
// check each one against a generic integrator of its master equation.
//
// Phase convention: exp(-i t H) with H = (omega/2) sigma_3 multiplies |1> by
// exp(+i omega t) relative to |0>, and the Bloch vector precesses
// counter-clockwise about the field axis.

#include <variant>

#include "qd/qmath.hpp"

namespace qd {

/// Qubit Hamiltonian (omega/2) axis.sigma with a unit axis.
struct FieldHamiltonian {
  double omega = 0.0;
  BlochVector axis = BlochVector::UnitZ();

  /// Validating constructor; throws InvalidInput if |axis| differs from 1.
  static FieldHamiltonian make(double omega, const BlochVector& axis);
  /// 2x2 matrix (omega/2) axis.sigma.
  SquareMatrix matrix() const;
  /// Sum of the single-qubit term over each of n qubits.
  SquareMatrix on_qubits(int n_qubits) const;
};

/// Recovers omega and axis from a traceless-up-to-constant 2x2 Hermitian
/// matrix; the identity component is dropped.
FieldHamiltonian field_from_matrix(const SquareMatrix& h);

enum class NoiseKind { none, qubit_depolarizing, independent_depolarizing, symmetric };

const char* to_string(NoiseKind kind);

struct NoiseModel {
  NoiseKind kind = NoiseKind::none;
  double gamma = 0.0;  ///< rate, inverse time
  int n_qubits = 0;    ///< declared qubit count for independent_depolarizing

  /// Throws InvalidInput if the model cannot act on a Hilbert space of `dim`.
  void validate(int dim) const;
};

/// A generator is either an explicit Hermitian matrix or a field acting
/// identically on every qubit of the register.
using Generator = std::variant<SquareMatrix, FieldHamiltonian>;

/// Dense matrix of a generator in dimension `dim`.
SquareMatrix generator_matrix(const Generator& g, int dim);

struct EvolutionSpec {
  Generator hamiltonian;
  NoiseModel noise;
  double duration = 0.0;
};

/// exp(-i t H) |psi0>.
PureState evolve_pure(const PureState& psi0, const SquareMatrix& h, double t);

/// Closed-form solution of dP/dt = omega (a x P) - gamma P:
/// P(t) = exp(-gamma t) R_a(omega t) P0.
BlochVector evolve_depolarizing_qubit(const BlochVector& p0, const FieldHamiltonian& field, double gamma,
                                      double t);

/// Uniform contraction toward I/d:
/// rho(t) = exp(-gamma t) U rho0 U^dagger + (1 - exp(-gamma t)) I/d.
SquareMatrix evolve_symmetric(const SquareMatrix& rho0, const SquareMatrix& h, double gamma, double t);

/// Every qubit precesses in `local_field` and depolarizes at rate gamma. Works
/// in the Pauli-coefficient picture: a Pauli string of weight w decays by
/// exp(-w gamma t). Limited to 10 qubits.
SquareMatrix evolve_independent_depolarizing(const SquareMatrix& rho0, int n_qubits,
                                             const FieldHamiltonian& local_field, double gamma, double t);

/// Dispatches on spec.noise.kind.
SquareMatrix evolve(const SquareMatrix& rho0, const EvolutionSpec& spec);

}  // namespace qd
