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

#include "qd/spectral_arc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

#include <Eigen/Eigenvalues>

#include "qd/errors.hpp"
#include "qd/parallel.hpp"
#include "qd/random.hpp"
#include "qd/tolerances.hpp"

namespace qd {
namespace {

constexpr double kCounterexampleMargin = 1e-6;

using LComplex = std::complex<long double>;
using LMatrix = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;

// exp(-i s M) for Hermitian M in long double.
LMatrix expm_long(const LMatrix& m, long double s) {
  Eigen::SelfAdjointEigenSolver<LMatrix> es(0.5L * (m + m.adjoint()));
  const auto& vals = es.eigenvalues();
  LMatrix d = LMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < vals.size(); ++i) d(i, i) = std::polar(1.0L, -s * vals(i));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

std::pair<long double, long double> extreme_args_long(const LMatrix& u) {
  Eigen::ComplexEigenSolver<LMatrix> es(u, false);
  long double lo = std::numeric_limits<long double>::infinity();
  long double hi = -lo;
  const long double pi = std::numbers::pi_v<long double>;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    long double a = std::arg(es.eigenvalues()(i));
    if (a <= -pi + 1e-15L) a = pi;
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return {lo, hi};
}

bool violates(const TheoremCase& c, double margin) {
  return c.lhs_max - c.rhs_max > margin || c.rhs_min - c.lhs_min > margin;
}

bool confirmed_in_long_double(const TheoremCase& c) {
  const LMatrix h = c.h.cast<LComplex>();
  const LMatrix k = c.k.cast<LComplex>();
  const LMatrix w = expm_long(k, -1.0L) * expm_long(h + k, 1.0L);
  const auto [lhs_min, lhs_max] = extreme_args_long(w);
  const auto [rhs_min, rhs_max] = extreme_args_long(expm_long(h, 1.0L));
  return lhs_max - rhs_max > kCounterexampleMargin || rhs_min - lhs_min > kCounterexampleMargin;
}

}  // namespace

double maxarg(const SquareMatrix& u) {
  const auto args = unitary_args(u);
  return args.back();
}

double minarg(const SquareMatrix& u) {
  const auto args = unitary_args(u);
  return args.front();
}

TheoremCase theorem1_check(const SquareMatrix& h, const SquareMatrix& k) {
  require_square(h, "theorem1_check");
  require_square(k, "theorem1_check");
  if (h.rows() != k.rows()) throw InvalidInput("theorem1_check: dimension mismatch");
  if (!is_hermitian(h, tol::kAlgebraic) || !is_hermitian(k, tol::kAlgebraic)) {
    throw InvalidInput("theorem1_check: H and K must be Hermitian");
  }
  TheoremCase c;
  c.h = hermitian_part(h);
  c.k = hermitian_part(k);
  c.in_regime = sup_norm(c.h) < std::numbers::pi;
  const SquareMatrix w = expm_i(c.k, -1.0) * expm_i(c.h + c.k, 1.0);
  const auto lhs = unitary_args(w);
  const auto rhs = unitary_args(expm_i(c.h, 1.0));
  c.lhs_min = lhs.front();
  c.lhs_max = lhs.back();
  c.rhs_min = rhs.front();
  c.rhs_max = rhs.back();
  c.holds = !violates(c, tol::kArgument);
  return c;
}

const char* to_string(Lemma3Outcome outcome) {
  switch (outcome) {
    case Lemma3Outcome::holds: return "holds";
    case Lemma3Outcome::violated: return "violated";
    case Lemma3Outcome::not_applicable: return "not_applicable";
  }
  return "unknown";
}

Lemma3Outcome lemma3_check(const SquareMatrix& u1, const SquareMatrix& u2) {
  const auto a1 = unitary_args(u1);
  const auto a2 = unitary_args(u2);
  if (u1.rows() != u2.rows()) throw InvalidInput("lemma3_check: dimension mismatch");
  const double max_sum = a1.back() + a2.back();
  const double min_sum = a1.front() + a2.front();
  if (!(max_sum < std::numbers::pi && min_sum > -std::numbers::pi)) return Lemma3Outcome::not_applicable;
  const auto prod = unitary_args(u1 * u2);
  const bool ok = prod.back() <= max_sum + tol::kArgument && prod.front() >= min_sum - tol::kArgument;
  return ok ? Lemma3Outcome::holds : Lemma3Outcome::violated;
}

double lie_product_residual(const SquareMatrix& h, const SquareMatrix& k, int n) {
  if (n < 1) throw InvalidInput("lie_product_residual: n must be at least 1");
  require_square(h, "lie_product_residual");
  require_square(k, "lie_product_residual");
  if (h.rows() != k.rows()) throw InvalidInput("lie_product_residual: dimension mismatch");
  const SquareMatrix step = expm_i(h, 1.0 / n) * expm_i(k, 1.0 / n);
  SquareMatrix prod = identity(static_cast<int>(h.rows()));
  for (int i = 0; i < n; ++i) prod = prod * step;
  return sup_norm(prod - expm_i(h + k, 1.0));
}

std::vector<TheoremCase> counterexample_search(const CounterexampleSearch& params) {
  if (params.trials < 1) throw InvalidInput("counterexample_search: trials must be at least 1");
  if (params.dim < 1) throw InvalidInput("counterexample_search: dim must be positive");
  if (!(params.h_norm_lo >= 0.0 && params.h_norm_hi >= params.h_norm_lo)) {
    throw InvalidInput("counterexample_search: bad norm range for H");
  }
  std::vector<std::optional<TheoremCase>> found(static_cast<std::size_t>(params.trials));
  parallel_for(found.size(), params.threads, [&](std::size_t i) {
    Rng rng(mix_seed(params.seed, i));
    const double h_norm = rng.uniform(params.h_norm_lo, params.h_norm_hi);
    const SquareMatrix h = random_hermitian(params.dim, h_norm, rng);
    const SquareMatrix k = random_hermitian(params.dim, rng.uniform(0.0, params.k_norm_max), rng);
    TheoremCase c = theorem1_check(h, k);
    if (violates(c, kCounterexampleMargin) && confirmed_in_long_double(c)) found[i] = std::move(c);
  });
  std::vector<TheoremCase> out;
  for (auto& f : found) {
    if (f) out.push_back(std::move(*f));
  }
  return out;
}

}  // namespace qd
