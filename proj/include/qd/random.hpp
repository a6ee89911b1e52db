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

#include <cstdint>
#include <random>

#include "qd/qmath.hpp"

namespace qd {

/// Seeded random source. The engine is std::mt19937_64, whose output sequence
/// is fixed by the standard; the floating-point transforms are done here
/// rather than with <random> distributions so that draws are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, no caching).
  double normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent per-trial seeds from a root
/// seed and a counter, so results do not depend on how trials are scheduled.
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t counter);

/// Gaussian entries, symmetrized, rescaled to the requested sup norm.
SquareMatrix random_hermitian(int dim, double sup_norm, Rng& rng);

/// Haar-ish random unit vector (normalized complex Gaussian).
PureState random_state(int dim, Rng& rng);

/// Random full-rank density matrix G G^dagger / tr(G G^dagger).
SquareMatrix random_density(int dim, Rng& rng);

/// Random unitary exp(-i H) with H Gaussian Hermitian of sup norm up to pi.
SquareMatrix random_unitary(int dim, Rng& rng);

/// Uniformly distributed unit 3-vector.
BlochVector random_unit_vector(Rng& rng);

}  // namespace qd
