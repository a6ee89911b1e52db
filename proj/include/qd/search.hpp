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

// Continuous-time search: the unknown Hamiltonian is E|x><x| for a hidden
// index x, and a drive E|s><s| on the uniform superposition |s> turns the
// search into a two-level Rabi problem.

#include "qd/qmath.hpp"

namespace qd {

struct GroverInstance {
  int n = 2;         ///< dimension N, any positive integer
  int marked = 0;    ///< hidden index x
  double energy = 1.0;

  void validate() const;
};

/// E(|x><x| + |s><s|). Throws ResourceLimit above N = 4096.
SquareMatrix grover_hamiltonian(const GroverInstance& inst);

/// pi sqrt(N) / (2E).
double grover_time(const GroverInstance& inst);

enum class GroverPath { automatic, dense, reduced };

/// Probability of finding x after preparing |s> and evolving under the
/// driven Hamiltonian for time t. `automatic` uses dense evolution up to
/// N = 256 and the exact two-level reduction above.
double grover_success_at(const GroverInstance& inst, double t, GroverPath path = GroverPath::automatic);

struct GroverRun {
  double success_prob = 0.0;
  double time = 0.0;
};

/// Evolves for grover_time(inst). Requires N >= 2.
GroverRun grover_run(const GroverInstance& inst, GroverPath path = GroverPath::automatic);

/// Undriven pair test: prepare (|y> + |y'>)/sqrt 2, evolve under E|x><x| for
/// pi/E and return the probability of (|y> - |y'>)/sqrt 2.
double naive_probe(const GroverInstance& inst, int y, int y_prime);

}  // namespace qd
