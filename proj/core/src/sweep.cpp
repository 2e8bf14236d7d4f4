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

#include "uscgate/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "uscgate/metrics.hpp"

namespace uscgate {
namespace {

double run_fidelity(const SweepPlan& plan, double g, int fock_dim, const GateInput& input) {
  const SpaceDescriptor space(fock_dim);
  const Protocol protocol = make_protocol(plan.protocol);
  const SystemParams params = plan.params_at(g);
  const ProtocolRun run = run_protocol(protocol, params, plan.model, input, space, plan.run);
  return fidelity(reference_output(protocol, params, input, space, plan.run), run.final_state);
}

}  // namespace

std::vector<double> default_grid() { return linear_grid(0.01, 0.20, 39); }

std::vector<double> linear_grid(double from, double to, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  if (points == 1) return {from};
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = (to - from) / (points - 1);
  for (int i = 0; i < points; ++i) {
    // Rounded to 1e-12 so that e.g. 0.065 prints as 0.065.
    grid[static_cast<std::size_t>(i)] = std::round((from + i * step) * 1e12) / 1e12;
  }
  return grid;
}

void SweepPlan::validate() const {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0 && grid[i] < 1.0)) {
      throw std::invalid_argument("grid value " + std::to_string(grid[i]) +
                                  " is outside (0, 1)");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("grid values must be strictly increasing");
    }
  }
  if (fock_dim < 2) throw std::invalid_argument("fock_dim must be >= 2");
  if (!(drive_ratio > 0.0)) throw std::invalid_argument("drive_ratio must be > 0");
  input.validate();
  params_at(grid.front()).validate();
}

SystemParams SweepPlan::params_at(double g_over_omega_r) const {
  SystemParams p = base;
  const double g = g_over_omega_r * p.omega_r;
  p.couplings = {g, g, g};
  p.drive.rabi = drive_ratio * g;
  return p;
}

SweepRecord evaluate_point(const SweepPlan& plan, double g_over_omega_r, int fock_dim) {
  SweepRecord rec;
  rec.g_over_omega_r = g_over_omega_r;
  rec.fock_dim = fock_dim;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const SpaceDescriptor space(fock_dim);
    const Protocol protocol = make_protocol(plan.protocol);
    const SystemParams params = plan.params_at(g_over_omega_r);
    const ProtocolRun run =
        run_protocol(protocol, params, plan.model, plan.input, space, plan.run);
    const GateScore s =
        score(reference_output(protocol, params, plan.input, space, plan.run), run.final_state);
    rec.fidelity = s.fidelity;
    rec.leakage = s.leakage;
    rec.norm_drift = run.norm_drift;
  } catch (const std::exception& e) {
    rec.fidelity = std::numeric_limits<double>::quiet_NaN();
    rec.leakage = std::numeric_limits<double>::quiet_NaN();
    rec.error = e.what();
  }
  rec.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepPlan& plan) {
  plan.validate();
  std::vector<SweepRecord> records(plan.grid.size());
  unsigned workers = plan.threads != 0 ? plan.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(plan.grid.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < plan.grid.size(); i = next++) {
      records[i] = evaluate_point(plan, plan.grid[i], plan.fock_dim);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return records;
}

ConvergenceResult converge_fock(const SweepPlan& plan, double g_over_omega_r, int start_n,
                                double tol, int cap) {
  if (start_n < 4) throw std::invalid_argument("converge_fock needs start_n >= 4");
  if (start_n > cap) throw std::invalid_argument("converge_fock: start_n exceeds cap");
  ConvergenceResult result;
  int n = start_n;
  double f_n = run_fidelity(plan, g_over_omega_r, n, plan.input);
  result.history.emplace_back(n, f_n);
  if (std::isinf(tol) && tol > 0) {
    result.fock_dim = n;
    result.fidelity = f_n;
    return result;
  }
  while (true) {
    if (2 * n > cap) {
      throw ConvergenceError("Fock truncation did not converge below cap " +
                             std::to_string(cap) + " (last N = " + std::to_string(n) + ")");
    }
    const double f_2n = run_fidelity(plan, g_over_omega_r, 2 * n, plan.input);
    result.history.emplace_back(2 * n, f_2n);
    if (std::abs(f_n - f_2n) < tol) {
      result.fock_dim = n;
      result.fidelity = f_n;
      return result;
    }
    n *= 2;
    f_n = f_2n;
  }
}

InputAveragedReport input_averaged_fidelity(const SweepPlan& plan, double g_over_omega_r) {
  InputAveragedReport report;
  for (std::size_t i = 0; i < 4; ++i) {
    GateInput basis;
    basis.b[i] = 1.0;
    report.per_input[i] = run_fidelity(plan, g_over_omega_r, plan.fock_dim, basis);
  }
  report.per_input[4] =
      run_fidelity(plan, g_over_omega_r, plan.fock_dim, maximally_entangled_input());
  double total = 0.0;
  for (double f : report.per_input) total += f;
  report.mean = total / static_cast<double>(report.per_input.size());
  return report;
}

}  // namespace uscgate
