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

// Extremal eigenvalue arguments of unitaries and the inequalities that bound
// how much a driving term can spread the spectrum of exp(iK) exp(-i(H+K)).

#include <cstdint>
#include <vector>

#include "qd/qmath.hpp"

namespace qd {

/// Largest eigenvalue argument in (-pi, pi]. Throws InvalidInput if u is not
/// unitary.
double maxarg(const SquareMatrix& u);
/// Smallest eigenvalue argument in (-pi, pi].
double minarg(const SquareMatrix& u);

struct TheoremCase {
  SquareMatrix h;
  SquareMatrix k;
  double lhs_max = 0.0;  ///< maxarg(exp(iK) exp(-i(H+K)))
  double rhs_max = 0.0;  ///< maxarg(exp(-iH))
  double lhs_min = 0.0;
  double rhs_min = 0.0;
  bool holds = false;
  /// ||H||_sup < pi; cases outside are evaluated anyway.
  bool in_regime = false;
};

/// Evaluates lhs_max <= rhs_max and lhs_min >= rhs_min with slack 1e-9.
TheoremCase theorem1_check(const SquareMatrix& h, const SquareMatrix& k);

enum class Lemma3Outcome { holds, violated, not_applicable };

const char* to_string(Lemma3Outcome outcome);

/// Subadditivity of maxarg and superadditivity of minarg under products,
/// applicable when maxarg(U1) + maxarg(U2) < pi and minarg(U1) + minarg(U2) > -pi.
Lemma3Outcome lemma3_check(const SquareMatrix& u1, const SquareMatrix& u2);

/// ||(exp(-iH/n) exp(-iK/n))^n - exp(-i(H+K))||_sup.
double lie_product_residual(const SquareMatrix& h, const SquareMatrix& k, int n);

struct CounterexampleSearch {
  int dim = 2;
  int trials = 1;
  std::uint64_t seed = 0;
  double h_norm_lo = 3.141592653589793;
  double h_norm_hi = 1.5 * 3.141592653589793;
  double k_norm_max = 10.0;
  int threads = 1;
};

/// Samples H with ||H||_sup uniform in [h_norm_lo, h_norm_hi] and K with
/// ||K||_sup uniform in [0, k_norm_max]. Returns, in trial order, every case
/// that violates either inequality by more than 1e-6 in both double and
/// long double arithmetic.
std::vector<TheoremCase> counterexample_search(const CounterexampleSearch& params);

}  // namespace qd
