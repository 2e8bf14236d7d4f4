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

#include <cstddef>
#include <functional>
#include <limits>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "uscgate/hilbert.hpp"

namespace uscgate {

struct IntegratorOptions {
  double tol = 1e-10;       // max-norm local error allowed per step
  double norm_tol = 1e-9;   // allowed | |psi(t1)| - |psi(t0)| |
  double initial_step = 0;  // 0 picks one from the first derivative
  double min_step = 1e-13;  // relative to max(1, |t|)
  double max_step = std::numeric_limits<double>::infinity();
  double fixed_step = 0;    // > 0 disables adaptivity
  std::size_t max_steps = 20'000'000;
};

struct PropagationReport {
  StateVector final_state;
  double norm_drift = 0.0;
  std::size_t steps_taken = 0;
  double max_local_error = 0.0;
  bool renormalized = false;
};

/// Raised when an integration cannot meet its tolerances.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t, double step)
      : std::runtime_error(what + " (t=" + sci(t) + ", h=" + sci(step) + ")"),
        time_(t),
        step_(step) {}

  double time() const { return time_; }
  double step() const { return step_; }

  static std::string sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", value);
    return buf;
  }

 private:
  double time_;
  double step_;
};

/// exp(-i H t) from a Hermitian eigendecomposition. Throws
/// std::invalid_argument if H is not Hermitian or t < 0.
Matrix propagator(const OperatorMatrix& h, double duration);

PropagationReport propagate_const(const OperatorMatrix& h, double duration,
                                  const StateVector& psi);

using HamiltonianFn = std::function<OperatorMatrix(double)>;

/// Writes H(t) psi into h_psi. h_psi is already sized.
using HamiltonianAction = std::function<void(double t, const Vector& psi, Vector& h_psi)>;

/// Adaptive Dormand-Prince 5(4) integration of i d/dt psi = H(t) psi.
///
/// A norm drift below opts.norm_tol is removed and flagged in the report; a
/// larger one throws IntegrationError, as do step underflow and max_steps.
PropagationReport propagate_timedep(const HamiltonianFn& h_of_t, double t0, double t1,
                                    const StateVector& psi, const IntegratorOptions& opts = {});

PropagationReport propagate_timedep_action(const HamiltonianAction& h_action, double t0,
                                           double t1, const StateVector& psi,
                                           const IntegratorOptions& opts = {});

struct Amplitudes {
  Complex excited;    // C_e
  Complex auxiliary;  // C_a
};

/// Rotating-frame amplitude equations of a driven e <-> a transition:
///
///   dC_e/dt = -i Omega (e^{i (wL - w) t} + e^{-i (wL + w) t}) C_a
///   dC_a/dt = -i Omega (e^{-i (wL - w) t} + e^{i (wL + w) t}) C_e
///
/// rwa drops the e^{+-i (wL + w) t} terms. |C_e|^2 + |C_a|^2 is checked at
/// every accepted step against opts.norm_tol.
Amplitudes amplitude_ode(double rabi, double omega_l, double omega_ea, bool rwa, double t0,
                         double t1, Amplitudes start, const IntegratorOptions& opts = {});

}  // namespace uscgate
