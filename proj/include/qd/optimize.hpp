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

#include <functional>

namespace qd {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
};

/// Maximizes f on (lo, hi]: a uniform pre-scan over `grid` points picks the
/// best lobe, then golden-section search refines inside the bracket formed by
/// the neighbouring grid points until the bracket is below rel_tol * |x|.
ScalarOptimum maximize_scalar(const std::function<double(double)>& f, double lo, double hi, int grid = 2048,
                              double rel_tol = 1e-9);

ScalarOptimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi, int grid = 2048,
                              double rel_tol = 1e-9);

/// Upper end of the time window scanned when optimizing over the evolution
/// time: max(4 pi / omega, 10 / gamma).
double time_window(double omega, double gamma);

}  // namespace qd
