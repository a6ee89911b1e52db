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

#include "qd/qmath.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "qd/errors.hpp"
#include "qd/tolerances.hpp"

namespace qd {
namespace {

constexpr Complex kI{0.0, 1.0};

double wrap_argument(double arg) {
  // std::arg already returns (-pi, pi]; only the -pi end needs folding.
  if (arg <= -std::numbers::pi + tol::kBranch) return std::numbers::pi;
  return arg;
}

std::array<SquareMatrix, 4> make_paulis() {
  std::array<SquareMatrix, 4> p;
  for (auto& m : p) m = SquareMatrix::Zero(2, 2);
  p[0](0, 0) = 1.0;
  p[0](1, 1) = 1.0;
  p[1](0, 1) = 1.0;
  p[1](1, 0) = 1.0;
  p[2](0, 1) = -kI;
  p[2](1, 0) = kI;
  p[3](0, 0) = 1.0;
  p[3](1, 1) = -1.0;
  return p;
}

}  // namespace

SquareMatrix identity(int dim) { return SquareMatrix::Identity(dim, dim); }

PureState basis_state(int dim, int index) {
  if (dim <= 0 || index < 0 || index >= dim) {
    throw InvalidInput("basis_state: index " + std::to_string(index) + " out of range for dimension " +
                       std::to_string(dim));
  }
  PureState v = PureState::Zero(dim);
  v(index) = 1.0;
  return v;
}

const SquareMatrix& pauli(int index) {
  static const std::array<SquareMatrix, 4> kPaulis = make_paulis();
  if (index < 0 || index > 3) throw InvalidInput("pauli: index must be 0..3");
  return kPaulis[static_cast<std::size_t>(index)];
}

SquareMatrix dot_sigma(const BlochVector& a) {
  return a(0) * pauli(1) + a(1) * pauli(2) + a(2) * pauli(3);
}

SquareMatrix projector(const PureState& psi) { return psi * psi.adjoint(); }

SquareMatrix hermitian_part(const SquareMatrix& m) {
  require_square(m, "hermitian_part");
  return 0.5 * (m + m.adjoint());
}

double max_abs_entry(const SquareMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const SquareMatrix& m, double tol) {
  return m.rows() == m.cols() && m.rows() > 0 && max_abs_entry(m - m.adjoint()) <= tol;
}

bool is_unitary(const SquareMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  return max_abs_entry(m.adjoint() * m - identity(static_cast<int>(m.rows()))) <= tol;
}

bool is_density(const SquareMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0)) > tol) return false;
  return herm_eig(m).values(0) >= -tol;
}

void require_square(const SquareMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidInput(std::string(what) + ": expected a non-empty square matrix, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

HermEig herm_eig(const SquareMatrix& m) {
  require_square(m, "herm_eig");
  Eigen::SelfAdjointEigenSolver<SquareMatrix> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success) throw InvalidInput("herm_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SquareMatrix expm_i(const SquareMatrix& h, double t) {
  const HermEig eig = herm_eig(h);
  Eigen::VectorXcd phases(eig.values.size());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -t * eig.values(k)));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

UnitaryEig unitary_eig(const SquareMatrix& u) {
  require_square(u, "unitary_eig");
  if (!is_unitary(u, tol::kAlgebraic)) {
    throw InvalidInput("unitary_eig: matrix is not unitary within tolerance");
  }
  // For a normal matrix the Schur form is diagonal and the Schur vectors are
  // an orthonormal eigenbasis, including inside degenerate eigenspaces.
  Eigen::ComplexSchur<SquareMatrix> schur(u);
  if (schur.info() != Eigen::Success) throw InvalidInput("unitary_eig: Schur decomposition failed");
  const SquareMatrix& tri = schur.matrixT();
  const Eigen::Index n = tri.rows();

  std::vector<double> args(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex lambda = tri(k, k);
    if (std::abs(std::abs(lambda) - 1.0) > tol::kSpectral) {
      throw InvalidInput("unitary_eig: eigenvalue modulus deviates from 1");
    }
    args[static_cast<std::size_t>(k)] = wrap_argument(std::arg(lambda / std::abs(lambda)));
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return args[static_cast<std::size_t>(a)] < args[static_cast<std::size_t>(b)];
  });

  UnitaryEig out;
  out.args.reserve(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.args.push_back(args[static_cast<std::size_t>(src)]);
    out.vectors.col(k) = schur.matrixU().col(src);
  }
  return out;
}

std::vector<double> unitary_args(const SquareMatrix& u) { return unitary_eig(u).args; }

SquareMatrix tensor(const SquareMatrix& a, const SquareMatrix& b) {
  SquareMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

PureState tensor(const PureState& a, const PureState& b) {
  PureState out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

SquareMatrix partial_trace(const SquareMatrix& rho, std::span<const int> subsystem_dims,
                           std::span<const int> keep) {
  require_square(rho, "partial_trace");
  const std::size_t n_sub = subsystem_dims.size();
  long total = 1;
  for (int d : subsystem_dims) {
    if (d <= 0) throw InvalidInput("partial_trace: subsystem dimensions must be positive");
    total *= d;
  }
  if (total != rho.rows()) {
    throw InvalidInput("partial_trace: product of subsystem dimensions " + std::to_string(total) +
                       " does not match matrix dimension " + std::to_string(rho.rows()));
  }
  std::vector<bool> kept(n_sub, false);
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= n_sub || kept[static_cast<std::size_t>(k)]) {
      throw InvalidInput("partial_trace: invalid or repeated subsystem index in keep set");
    }
    kept[static_cast<std::size_t>(k)] = true;
  }

  // Split every full index into a kept index and a traced index (mixed radix,
  // subsystem 0 most significant).
  std::vector<long> kept_index(static_cast<std::size_t>(total));
  std::vector<long> traced_index(static_cast<std::size_t>(total));
  long kept_dim = 1;
  for (std::size_t s = 0; s < n_sub; ++s) {
    if (kept[s]) kept_dim *= subsystem_dims[s];
  }
  for (long full = 0; full < total; ++full) {
    long rem = full;
    long k_idx = 0, k_mul = 1, t_idx = 0, t_mul = 1;
    for (std::size_t s = n_sub; s-- > 0;) {
      const long digit = rem % subsystem_dims[s];
      rem /= subsystem_dims[s];
      if (kept[s]) {
        k_idx += digit * k_mul;
        k_mul *= subsystem_dims[s];
      } else {
        t_idx += digit * t_mul;
        t_mul *= subsystem_dims[s];
      }
    }
    kept_index[static_cast<std::size_t>(full)] = k_idx;
    traced_index[static_cast<std::size_t>(full)] = t_idx;
  }

  SquareMatrix out = SquareMatrix::Zero(kept_dim, kept_dim);
  for (long r = 0; r < total; ++r) {
    for (long c = 0; c < total; ++c) {
      if (traced_index[static_cast<std::size_t>(r)] != traced_index[static_cast<std::size_t>(c)]) continue;
      out(kept_index[static_cast<std::size_t>(r)], kept_index[static_cast<std::size_t>(c)]) += rho(r, c);
    }
  }
  return out;
}

double trace_norm(const SquareMatrix& m) { return herm_eig(m).values.cwiseAbs().sum(); }

double sup_norm(const SquareMatrix& m) {
  require_square(m, "sup_norm");
  Eigen::JacobiSVD<SquareMatrix> svd(m);
  return svd.singularValues()(0);
}

SquareMatrix density_from_bloch(const BlochVector& p) {
  if (p.norm() > 1.0 + tol::kAlgebraic) throw InvalidInput("density_from_bloch: |P| exceeds 1");
  return 0.5 * (identity(2) + dot_sigma(p));
}

BlochVector bloch_from_density(const SquareMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw InvalidInput("bloch_from_density: expected a 2x2 matrix");
  BlochVector p;
  for (int i = 0; i < 3; ++i) p(i) = (rho * pauli(i + 1)).trace().real();
  return p;
}

PureState bell_phi_plus() {
  PureState v = PureState::Zero(4);
  v(0) = v(3) = std::numbers::sqrt2 / 2.0;
  return v;
}

PureState bell_phi_minus() {
  PureState v = bell_phi_plus();
  v(3) = -v(3);
  return v;
}

PureState bell_psi_plus() {
  PureState v = PureState::Zero(4);
  v(1) = v(2) = std::numbers::sqrt2 / 2.0;
  return v;
}

PureState bell_psi_minus() {
  PureState v = bell_psi_plus();
  v(2) = -v(2);
  return v;
}

}  // namespace qd
