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

// Dense complex linear algebra on small Hilbert spaces (dimension 2 to about
// 1024). Units: hbar = 1 throughout, so Hamiltonians are angular frequencies.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qd {

using Complex = std::complex<double>;

/// Dense square complex matrix. Depending on context it plays the role of a
/// Hermitian generator, a unitary, or a density matrix; the `is_*` predicates
/// below check the corresponding invariants.
using SquareMatrix = Eigen::MatrixXcd;

/// State vector. Expected to have unit norm.
using PureState = Eigen::VectorXcd;

/// Real 3-vector P of a qubit density matrix rho = (I + P.sigma)/2. Also used
/// for unit field axes.
using BlochVector = Eigen::Vector3d;

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct HermEig {
  Eigen::VectorXd values;
  SquareMatrix vectors;  // orthonormal columns
};

/// Eigendecomposition of a unitary: arguments in (-pi, pi], ascending, with
/// matching orthonormal eigenvectors.
struct UnitaryEig {
  std::vector<double> args;
  SquareMatrix vectors;
};

SquareMatrix identity(int dim);
PureState basis_state(int dim, int index);

/// Pauli matrix by index: 0 -> I, 1 -> sigma_1, 2 -> sigma_2, 3 -> sigma_3.
const SquareMatrix& pauli(int index);

/// a.sigma for a real 3-vector a.
SquareMatrix dot_sigma(const BlochVector& a);

/// |psi><psi|.
SquareMatrix projector(const PureState& psi);

/// (M + M^dagger) / 2.
SquareMatrix hermitian_part(const SquareMatrix& m);

double max_abs_entry(const SquareMatrix& m);
bool is_hermitian(const SquareMatrix& m, double tol = 1e-12);
bool is_unitary(const SquareMatrix& m, double tol = 1e-10);
bool is_density(const SquareMatrix& m, double tol = 1e-10);

/// Throws InvalidInput unless `m` is a non-empty square matrix.
void require_square(const SquareMatrix& m, const char* what);

/// Eigendecomposition of the Hermitian part of `m`.
HermEig herm_eig(const SquareMatrix& m);

/// exp(-i t H), computed exactly in the eigenbasis of H.
SquareMatrix expm_i(const SquareMatrix& h, double t);

/// Eigenvalue arguments of a unitary in (-pi, pi], ascending.
std::vector<double> unitary_args(const SquareMatrix& u);

/// Arguments and eigenvectors of a unitary. The eigenvectors are the Schur
/// vectors, which are orthonormal because unitaries are normal.
UnitaryEig unitary_eig(const SquareMatrix& u);

/// Kronecker product A (x) B; A indexes the more significant digit.
SquareMatrix tensor(const SquareMatrix& a, const SquareMatrix& b);
PureState tensor(const PureState& a, const PureState& b);

/// Reduced density matrix on the subsystems listed in `keep` (any order;
/// the result keeps the original subsystem order).
SquareMatrix partial_trace(const SquareMatrix& rho, std::span<const int> subsystem_dims,
                           std::span<const int> keep);

/// Sum of |eigenvalues| of the Hermitian part of `m`.
double trace_norm(const SquareMatrix& m);

/// Operator norm (largest singular value).
double sup_norm(const SquareMatrix& m);

/// rho = (I + P.sigma)/2; throws InvalidInput for |P| > 1.
SquareMatrix density_from_bloch(const BlochVector& p);

/// P_i = tr(rho sigma_i) for a 2x2 density matrix.
BlochVector bloch_from_density(const SquareMatrix& rho);

/// Bell states in the computational basis |00>, |01>, |10>, |11>.
PureState bell_phi_plus();
PureState bell_phi_minus();
PureState bell_psi_plus();
PureState bell_psi_minus();

}  // namespace qd
