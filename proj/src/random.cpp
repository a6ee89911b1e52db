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

#include "qd/random.hpp"

#include <cmath>
#include <numbers>

#include "qd/errors.hpp"

namespace qd {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidInput("Rng::below: empty range");
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t counter) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SquareMatrix random_hermitian(int dim, double sup_norm_target, Rng& rng) {
  if (dim <= 0) throw InvalidInput("random_hermitian: dimension must be positive");
  SquareMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  SquareMatrix h = 0.5 * (g + g.adjoint());
  const double norm = sup_norm(h);
  if (norm == 0.0) return h;
  return h * (sup_norm_target / norm);
}

PureState random_state(int dim, Rng& rng) {
  PureState v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v / v.norm();
}

SquareMatrix random_density(int dim, Rng& rng) {
  SquareMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  SquareMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return hermitian_part(rho);
}

SquareMatrix random_unitary(int dim, Rng& rng) {
  return expm_i(random_hermitian(dim, rng.uniform(0.0, std::numbers::pi), rng), 1.0);
}

BlochVector random_unit_vector(Rng& rng) {
  BlochVector v(rng.normal(), rng.normal(), rng.normal());
  while (v.norm() == 0.0) v = BlochVector(rng.normal(), rng.normal(), rng.normal());
  return v.normalized();
}

}  // namespace qd
