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

// Numerical tolerances shared by the library and its tests.
namespace qd::tol {

/// Hermiticity of inputs after symmetrization; norm of pure states.
inline constexpr double kHermitian = 1e-12;
/// Algebraic identities: unitarity, trace, reconstruction residuals.
inline constexpr double kAlgebraic = 1e-10;
/// Spectral quantities, e.g. how far an eigenvalue modulus of a unitary may
/// stray from 1 before the input is rejected.
inline constexpr double kSpectral = 1e-8;
/// Agreement between closed forms and the generic integrators in tests.
inline constexpr double kOdeOracle = 1e-6;
/// Slack on eigenvalue-argument inequalities.
inline constexpr double kArgument = 1e-9;
/// Arguments this close to -pi are reported as +pi.
inline constexpr double kBranch = 1e-12;
/// Minimum spectral gap for two Hamiltonians to count as different.
inline constexpr double kGap = 1e-12;

}  // namespace qd::tol
