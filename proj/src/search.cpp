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

#include "qd/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qd/dynamics.hpp"
#include "qd/errors.hpp"

namespace qd {
namespace {

constexpr int kDenseLimit = 256;
constexpr int kMatrixLimit = 4096;

double success_dense(const GroverInstance& inst, double t) {
  const PureState s = PureState::Constant(inst.n, Complex(1.0 / std::sqrt(double(inst.n)), 0.0));
  const PureState psi = evolve_pure(s, grover_hamiltonian(inst), t);
  return std::norm(psi(inst.marked));
}

// Basis {|x>, |r>} with |r> the normalized part of |s> orthogonal to |x>.
double success_reduced(const GroverInstance& inst, double t) {
  const double n = inst.n;
  const double e = inst.energy;
  SquareMatrix h(2, 2);
  const double off = e * std::sqrt(n - 1.0) / n;
  h << e * (1.0 + 1.0 / n), off, off, e * (n - 1.0) / n;
  PureState s(2);
  s << 1.0 / std::sqrt(n), std::sqrt((n - 1.0) / n);
  const PureState psi = evolve_pure(s, h, t);
  return std::norm(psi(0));
}

}  // namespace

void GroverInstance::validate() const {
  if (n < 1) throw InvalidInput("GroverInstance: N must be positive");
  if (marked < 0 || marked >= n) throw InvalidInput("GroverInstance: marked index out of range");
  if (!(energy > 0.0) || !std::isfinite(energy)) throw InvalidInput("GroverInstance: energy must be positive");
}

SquareMatrix grover_hamiltonian(const GroverInstance& inst) {
  inst.validate();
  if (inst.n > kMatrixLimit) throw ResourceLimit("grover_hamiltonian: N too large for a dense matrix");
  SquareMatrix h = SquareMatrix::Constant(inst.n, inst.n, Complex(inst.energy / inst.n, 0.0));
  h(inst.marked, inst.marked) += inst.energy;
  return h;
}

double grover_time(const GroverInstance& inst) {
  inst.validate();
  return std::numbers::pi * std::sqrt(double(inst.n)) / (2.0 * inst.energy);
}

double grover_success_at(const GroverInstance& inst, double t, GroverPath path) {
  inst.validate();
  if (inst.n == 1) return 1.0;
  if (path == GroverPath::automatic) path = inst.n <= kDenseLimit ? GroverPath::dense : GroverPath::reduced;
  const double p = path == GroverPath::dense ? success_dense(inst, t) : success_reduced(inst, t);
  return std::clamp(p, 0.0, 1.0);
}

GroverRun grover_run(const GroverInstance& inst, GroverPath path) {
  inst.validate();
  if (inst.n < 2) throw InvalidInput("grover_run: N must be at least 2");
  const double t = grover_time(inst);
  return {grover_success_at(inst, t, path), t};
}

double naive_probe(const GroverInstance& inst, int y, int y_prime) {
  inst.validate();
  if (y < 0 || y >= inst.n || y_prime < 0 || y_prime >= inst.n) throw InvalidInput("naive_probe: index out of range");
  if (y == y_prime) throw InvalidInput("naive_probe: y and y' must differ");
  const double t = std::numbers::pi / inst.energy;
  // H_x is diagonal, so each amplitude only picks up its own phase.
  auto phase = [&](int k) { return k == inst.marked ? std::polar(1.0, -inst.energy * t) : Complex(1.0, 0.0); };
  const Complex minus_amp = 0.5 * (phase(y) - phase(y_prime));
  return std::clamp(std::norm(minus_amp), 0.0, 1.0);
}

}  // namespace qd
