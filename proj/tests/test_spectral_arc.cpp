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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qd/errors.hpp"
#include "qd/random.hpp"
#include "qd/spectral_arc.hpp"

using namespace qd;

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("maxarg and minarg basics") {
  CHECK(maxarg(identity(3)) == 0.0);
  CHECK(minarg(identity(3)) == 0.0);
  SquareMatrix d = SquareMatrix::Zero(2, 2);
  d(0, 0) = std::polar(1.0, 3.0);
  d(1, 1) = std::polar(1.0, -1.0);
  CHECK(std::abs(maxarg(d) - 3.0) < 1e-14);
  CHECK(std::abs(minarg(d) + 1.0) < 1e-14);
  SquareMatrix bad = identity(2);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(maxarg(bad), InvalidInput);
}

TEST_CASE("maxarg of exp(-iH) is minus the smallest eigenvalue") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 5;
    const SquareMatrix h = random_hermitian(d, 0.99 * kPi, rng);
    const HermEig e = herm_eig(h);
    const SquareMatrix u = oracle::expm_taylor(h, 1.0);
    CHECK(std::abs(maxarg(u) + e.values(0)) < 1e-10);
    CHECK(std::abs(minarg(u) + e.values(d - 1)) < 1e-10);
  }
}

TEST_CASE("maxarg is invariant under conjugation") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 4;
    const SquareMatrix u = random_unitary(d, rng), v = random_unitary(d, rng);
    CHECK(std::abs(maxarg(v * u * v.adjoint()) - maxarg(u)) < 1e-10);
    CHECK(std::abs(minarg(v * u * v.adjoint()) - minarg(u)) < 1e-10);
  }
}

TEST_CASE("shifting H by a constant shifts maxarg") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 4;
    const SquareMatrix h = random_hermitian(d, kPi / 2, rng);
    const double c = rng.uniform(-kPi / 4, kPi / 4);
    const double shifted = maxarg(expm_i(h + c * identity(d), 1.0));
    CHECK(std::abs(shifted - (maxarg(expm_i(h, 1.0)) - c)) < 1e-10);
  }
}

TEST_CASE("arc bounds are tight for K = 0 and K = -H") {
  Rng rng(9);
  const SquareMatrix h = random_hermitian(3, 2.0, rng);
  const TheoremCase zero = theorem1_check(h, SquareMatrix::Zero(3, 3));
  CHECK(zero.holds);
  CHECK(zero.in_regime);
  CHECK(std::abs(zero.lhs_max - zero.rhs_max) < 1e-12);
  CHECK(std::abs(zero.lhs_min - zero.rhs_min) < 1e-12);
  const TheoremCase neg = theorem1_check(h, -h);
  CHECK(neg.holds);
  CHECK(std::abs(neg.lhs_max - neg.rhs_max) < 1e-12);
}

TEST_CASE("arc bounds hold on random in-regime cases") {
  Rng rng(11);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int d = 2 + trial % 5;
    const SquareMatrix h = random_hermitian(d, rng.uniform(0.0, 0.999 * kPi), rng);
    const SquareMatrix k = random_hermitian(d, rng.uniform(0.0, 10.0), rng);
    const TheoremCase c = theorem1_check(h, k);
    REQUIRE(c.in_regime);
    failures += !c.holds;
  }
  CHECK(failures == 0);
}

TEST_CASE("out-of-regime cases are evaluated and flagged") {
  const TheoremCase c = theorem1_check(4.0 * pauli(3), pauli(1));
  CHECK_FALSE(c.in_regime);
}

TEST_CASE("product arc bound on small-argument unitaries") {
  Rng rng(13);
  const SquareMatrix u = expm_i(random_hermitian(3, 1.0, rng), 1.0);
  CHECK(lemma3_check(u, identity(3)) == Lemma3Outcome::holds);
  CHECK(std::abs(maxarg(u * identity(3)) - maxarg(u)) < 1e-12);

  int applicable = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int d = 2 + trial % 4;
    const SquareMatrix u1 = expm_i(random_hermitian(d, rng.uniform(0.0, kPi / 4), rng), 1.0);
    const SquareMatrix u2 = expm_i(random_hermitian(d, rng.uniform(0.0, kPi / 4), rng), 1.0);
    const Lemma3Outcome r = lemma3_check(u1, u2);
    CHECK(r != Lemma3Outcome::violated);
    applicable += r == Lemma3Outcome::holds;
  }
  CHECK(applicable == 10000);

  const SquareMatrix big = expm_i(3.0 * pauli(3), 1.0);
  CHECK(lemma3_check(big, big) == Lemma3Outcome::not_applicable);
}

TEST_CASE("product arc bound is tight for a shared extremal eigenvector") {
  Rng rng(17);
  const SquareMatrix h = random_hermitian(4, 0.5, rng);
  const SquareMatrix u = expm_i(h, 1.0);
  CHECK(std::abs(maxarg(u * u) - 2 * maxarg(u)) < 1e-12);
  const SquareMatrix v = expm_i(random_hermitian(4, 0.5, rng), 1.0);
  CHECK(maxarg(u * v) <= maxarg(u) + maxarg(v) + 1e-12);
}

TEST_CASE("Lie product residual") {
  SquareMatrix a = SquareMatrix::Zero(2, 2), b = SquareMatrix::Zero(2, 2);
  a(0, 0) = 0.3;
  b(1, 1) = -1.2;
  for (int n : {1, 7, 100}) CHECK(lie_product_residual(a, b, n) < 1e-12);

  const double r64 = lie_product_residual(pauli(1), pauli(3), 64);
  const double r128 = lie_product_residual(pauli(1), pauli(3), 128);
  const double r256 = lie_product_residual(pauli(1), pauli(3), 256);
  CHECK(std::abs(r64 / r128 - 2.0) < 0.05);
  CHECK(std::abs(r128 / r256 - 2.0) < 0.05);
  const double r1024 = lie_product_residual(pauli(1), pauli(3), 1024);
  CHECK(r1024 < 1e-2);
  CHECK(r1024 < r256);
}

TEST_CASE("counterexample search is empty in regime") {
  CounterexampleSearch s;
  s.dim = 3;
  s.trials = 2000;
  s.seed = 19;
  s.h_norm_lo = 0.0;
  s.h_norm_hi = 0.999 * kPi;
  CHECK(counterexample_search(s).empty());
}

TEST_CASE("counterexample search beyond pi finds re-verified cases") {
  CounterexampleSearch s;
  s.dim = 2;
  s.trials = 20000;
  s.seed = 23;
  s.threads = 4;
  const auto found = counterexample_search(s);
  CHECK_FALSE(found.empty());
  for (const auto& c : found) {
    CHECK_FALSE(c.in_regime);
    CHECK((c.lhs_max - c.rhs_max > 1e-6 || c.rhs_min - c.lhs_min > 1e-6));
  }
  s.threads = 1;
  CHECK(counterexample_search(s).size() == found.size());
}
