// Copyright 2026 The uscgate Authors
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

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "uscgate/evolve.hpp"

namespace uscgate::detail {

struct Dopri5Stats {
  std::size_t steps = 0;
  double max_local_error = 0.0;
};

// Dormand-Prince 5(4) tableau.
struct Dopri5 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // b - b*, where b* is the embedded fourth-order solution.
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

/// Integrates dy/dt = rhs(t, y) from t0 to t1 in place. rhs(t, y, dydt)
/// writes into dydt. observe(t, y) runs after every accepted step.
template <typename Vec, typename Rhs, typename Observer>
Dopri5Stats integrate_dopri5(Rhs&& rhs, double t0, double t1, Vec& y,
                             const IntegratorOptions& opts, Observer&& observe) {
  using T = Dopri5;
  Dopri5Stats stats;
  if (t1 < t0) throw std::invalid_argument("integration needs t1 >= t0");
  if (t1 == t0) return stats;

  Vec k1 = y, k2 = y, k3 = y, k4 = y, k5 = y, k6 = y, k7 = y, tmp = y, y_new = y;
  double t = t0;
  rhs(t, y, k1);

  const bool fixed = opts.fixed_step > 0.0;
  double h;
  if (fixed) {
    h = opts.fixed_step;
  } else if (opts.initial_step > 0.0) {
    h = opts.initial_step;
  } else {
    const double slope = std::max(k1.cwiseAbs().maxCoeff(), 1e-12);
    h = 0.1 * std::pow(opts.tol, 0.2) / slope;
  }
  h = std::min({h, opts.max_step, t1 - t0});

  while (t < t1) {
    if (stats.steps >= opts.max_steps) {
      throw IntegrationError("integrator exceeded max_steps", t, h);
    }
    const bool last = t + h >= t1;
    if (last) h = t1 - t;

    tmp = y + h * (T::a21 * k1);
    rhs(t + T::c2 * h, tmp, k2);
    tmp = y + h * (T::a31 * k1 + T::a32 * k2);
    rhs(t + T::c3 * h, tmp, k3);
    tmp = y + h * (T::a41 * k1 + T::a42 * k2 + T::a43 * k3);
    rhs(t + T::c4 * h, tmp, k4);
    tmp = y + h * (T::a51 * k1 + T::a52 * k2 + T::a53 * k3 + T::a54 * k4);
    rhs(t + T::c5 * h, tmp, k5);
    tmp = y + h * (T::a61 * k1 + T::a62 * k2 + T::a63 * k3 + T::a64 * k4 + T::a65 * k5);
    rhs(t + h, tmp, k6);
    y_new = y + h * (T::b1 * k1 + T::b3 * k3 + T::b4 * k4 + T::b5 * k5 + T::b6 * k6);
    const double t_new = last ? t1 : t + h;
    rhs(t_new, y_new, k7);

    tmp = h * (T::e1 * k1 + T::e3 * k3 + T::e4 * k4 + T::e5 * k5 + T::e6 * k6 + T::e7 * k7);
    const double err = tmp.cwiseAbs().maxCoeff();

    if (fixed || err <= opts.tol) {
      t = t_new;
      y.swap(y_new);
      k1.swap(k7);
      ++stats.steps;
      stats.max_local_error = std::max(stats.max_local_error, err);
      observe(t, y);
    }
    if (!fixed) {
      const double factor =
          err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(opts.tol / err, 0.2), 0.2, 5.0);
      h = std::min(h * factor, opts.max_step);
      if (h < opts.min_step * std::max(1.0, std::abs(t))) {
        throw IntegrationError("integrator step size underflow", t, h);
      }
    }
  }
  return stats;
}

}  // namespace uscgate::detail
