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

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uscgate/hamiltonian.hpp"
#include "uscgate/protocols.hpp"

namespace uscgate {

/// 0.01, 0.015, ..., 0.20 (39 points).
std::vector<double> default_grid();

/// `points` evenly spaced values from `from` to `to` inclusive.
std::vector<double> linear_grid(double from, double to, int points);

struct SweepPlan {
  ProtocolId protocol = ProtocolId::one;
  Model model = Model::full;
  std::vector<double> grid = default_grid();
  GateInput input = maximally_entangled_input();
  int fock_dim = 15;
  /// Level energies, omega_r and drive frequency. Couplings and the Rabi
  /// frequency are overwritten per grid point.
  SystemParams base{};
  double drive_ratio = 1.0;  // Omega / g
  RunOptions run{};
  unsigned threads = 0;  // 0 = hardware concurrency

  /// Throws std::invalid_argument unless the grid is strictly increasing
  /// inside (0, 1) and the rest of the plan is usable.
  void validate() const;
  SystemParams params_at(double g_over_omega_r) const;
};

struct SweepRecord {
  double g_over_omega_r = 0.0;
  double fidelity = 0.0;
  double leakage = 0.0;
  int fock_dim = 0;
  double wall_time = 0.0;
  double norm_drift = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

/// One grid point. Failures are captured in the record.
SweepRecord evaluate_point(const SweepPlan& plan, double g_over_omega_r, int fock_dim);

/// One record per grid point in grid order, evaluated on up to plan.threads
/// worker threads.
std::vector<SweepRecord> run_sweep(const SweepPlan& plan);

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConvergenceResult {
  int fock_dim = 0;
  double fidelity = 0.0;
  std::vector<std::pair<int, double>> history;  // (N, F(N)) in evaluation order
};

/// Doubles N from start_n until |F(N) - F(2N)| < tol and returns the
/// smallest passing N. Throws ConvergenceError if 2N would exceed cap.
ConvergenceResult converge_fock(const SweepPlan& plan, double g_over_omega_r, int start_n = 4,
                                double tol = 1e-4, int cap = 256);

/// Fidelity for the four computational basis inputs and the maximally
/// entangled one, and their mean.
struct InputAveragedReport {
  std::array<double, 5> per_input{};
  double mean = 0.0;
};
InputAveragedReport input_averaged_fidelity(const SweepPlan& plan, double g_over_omega_r);

}  // namespace uscgate
