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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "uscgate/sweep.hpp"

namespace uscgate::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a CLI invocation needs. Defaults match the library defaults.
struct RunConfig {
  ProtocolId protocol = ProtocolId::one;
  Model model = Model::full;
  double g = 0.12;  // g / omega_r
  int fock_dim = 15;
  OffMode off_mode = OffMode::hard;
  double delta_off = 3.0;
  Frame drive_frame = Frame::rotating;
  double drive_ratio = 1.0;  // Omega / g
  SystemParams base{};       // omega_r, level energies, drive frequency
  double tol = 1e-10;
  double norm_tol = 1e-9;

  double sweep_from = 0.01;
  double sweep_to = 0.20;
  int sweep_points = 39;
  unsigned threads = 0;

  int converge_start = 4;
  double converge_tol = 1e-4;
  int fock_cap = 256;

  /// Throws ConfigError.
  void validate() const;
  SweepPlan sweep_plan() const;
  SweepPlan point_plan() const;
};

/// Config file schema (JSON, every key optional):
///
///   protocol: 1 | 2          model: "rwa" | "full"      g: number
///   fock_dim: int            off_mode: "hard" | "detuned"
///   delta_off: number        drive_frame: "rotating" | "lab"
///   drive_ratio: number      omega_r: number            drive_frequency: number
///   qubit1, qubit2: {E_g, E_e, E_a}
///   integrator: {tol, norm_tol}
///   sweep: {from, to, points, threads}
///   converge: {start_fock, tol, cap}
RunConfig config_from_json(const nlohmann::json& doc, RunConfig defaults = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig defaults = {});
nlohmann::json to_json(const RunConfig& config);

/// Effective configuration as "# key = value" lines, in a fixed order.
std::vector<std::string> describe(const RunConfig& config);

}  // namespace uscgate::cli
