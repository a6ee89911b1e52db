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

#include "qd/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qd/errors.hpp"

namespace qd {

ScalarOptimum maximize_scalar(const std::function<double(double)>& f, double lo, double hi, int grid,
                              double rel_tol) {
  if (!(hi > lo) || grid < 2) throw InvalidInput("maximize_scalar: need hi > lo and grid >= 2");
  const double step = (hi - lo) / grid;
  int best = 1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= grid; ++k) {
    const double v = f(lo + step * k);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }

  double a = lo + step * (best - 1);
  double b = lo + step * std::min(best + 1, grid);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 200; ++iter) {
    const double scale = std::max(std::abs(0.5 * (a + b)), std::numeric_limits<double>::min());
    if (b - a <= rel_tol * scale) break;
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }

  // The grid point can win when the optimum sits on the window boundary.
  const double refined_x = f1 >= f2 ? x1 : x2;
  const double refined_value = std::max(f1, f2);
  if (best_value > refined_value) return {lo + step * best, best_value};
  return {refined_x, refined_value};
}

ScalarOptimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi, int grid,
                              double rel_tol) {
  ScalarOptimum r = maximize_scalar([&](double x) { return -f(x); }, lo, hi, grid, rel_tol);
  r.value = -r.value;
  return r;
}

double time_window(double omega, double gamma) {
  double window = 0.0;
  if (omega > 0.0) window = 4.0 * std::numbers::pi / omega;
  if (gamma > 0.0) window = std::max(window, 10.0 / gamma);
  if (!(window > 0.0)) throw InvalidInput("time_window: need omega > 0 or gamma > 0");
  return window;
}

}  // namespace qd
