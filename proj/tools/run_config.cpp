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

#include "run_config.hpp"

#include <fstream>
#include <optional>
#include <set>

#include "csv_output.hpp"

namespace uscgate::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown config key '" + where + key + "'");
  }
}

template <typename T>
void read(const json& obj, const char* key, T& target) {
  if (!obj.contains(key)) return;
  try {
    target = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

void read_qubit(const json& obj, const char* key, QubitEnergies& q) {
  if (!obj.contains(key)) return;
  const json& sub = obj.at(key);
  reject_unknown(sub, {"E_g", "E_e", "E_a"}, std::string(key) + ".");
  read(sub, "E_g", q.g);
  read(sub, "E_e", q.e);
  read(sub, "E_a", q.a);
}

template <typename Parse>
auto read_enum(const json& obj, const char* key, Parse parse) -> std::optional<decltype(parse(""))> {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  try {
    return parse(v.is_string() ? v.get<std::string>() : v.dump());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

void RunConfig::validate() const {
  if (!(g > 0.0 && g < 1.0)) throw ConfigError("g must lie in (0, 1), got " + format_number(g));
  if (fock_dim < 2) throw ConfigError("fock_dim must be >= 2");
  if (!(delta_off > 0.0)) throw ConfigError("delta_off must be > 0");
  if (!(drive_ratio > 0.0)) throw ConfigError("drive_ratio must be > 0");
  if (!(tol > 0.0) || !(norm_tol > 0.0)) throw ConfigError("tolerances must be > 0");
  if (sweep_points < 1) throw ConfigError("sweep points must be >= 1");
  if (converge_start < 4) throw ConfigError("converge start_fock must be >= 4");
  if (!(converge_tol > 0.0)) throw ConfigError("converge tol must be > 0");
  if (fock_cap < converge_start) throw ConfigError("fock cap is below start_fock");
  try {
    point_plan().validate();
    sweep_plan().validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SweepPlan RunConfig::point_plan() const {
  SweepPlan plan;
  plan.protocol = protocol;
  plan.model = model;
  plan.grid = {g};
  plan.fock_dim = fock_dim;
  plan.base = base;
  plan.drive_ratio = drive_ratio;
  plan.run.off_mode = off_mode;
  plan.run.delta_off = delta_off;
  plan.run.drive_frame = drive_frame;
  plan.run.integrator.tol = tol;
  plan.run.integrator.norm_tol = norm_tol;
  plan.threads = threads;
  return plan;
}

SweepPlan RunConfig::sweep_plan() const {
  SweepPlan plan = point_plan();
  plan.grid = linear_grid(sweep_from, sweep_to, sweep_points);
  return plan;
}

RunConfig config_from_json(const json& doc, RunConfig cfg) {
  reject_unknown(doc,
                 {"protocol", "model", "g", "fock_dim", "off_mode", "delta_off", "drive_frame",
                  "drive_ratio", "omega_r", "drive_frequency", "qubit1", "qubit2", "integrator",
                  "sweep", "converge"},
                 "");
  if (auto v = read_enum(doc, "protocol", parse_protocol)) cfg.protocol = *v;
  if (auto v = read_enum(doc, "model", parse_model)) cfg.model = *v;
  if (auto v = read_enum(doc, "off_mode", parse_off_mode)) cfg.off_mode = *v;
  if (auto v = read_enum(doc, "drive_frame", parse_frame)) cfg.drive_frame = *v;
  read(doc, "g", cfg.g);
  read(doc, "fock_dim", cfg.fock_dim);
  read(doc, "delta_off", cfg.delta_off);
  read(doc, "drive_ratio", cfg.drive_ratio);
  read(doc, "omega_r", cfg.base.omega_r);
  read(doc, "drive_frequency", cfg.base.drive.frequency);
  read_qubit(doc, "qubit1", cfg.base.qubits[0]);
  read_qubit(doc, "qubit2", cfg.base.qubits[1]);
  if (doc.contains("integrator")) {
    const json& sub = doc.at("integrator");
    reject_unknown(sub, {"tol", "norm_tol"}, "integrator.");
    read(sub, "tol", cfg.tol);
    read(sub, "norm_tol", cfg.norm_tol);
  }
  if (doc.contains("sweep")) {
    const json& sub = doc.at("sweep");
    reject_unknown(sub, {"from", "to", "points", "threads"}, "sweep.");
    read(sub, "from", cfg.sweep_from);
    read(sub, "to", cfg.sweep_to);
    read(sub, "points", cfg.sweep_points);
    read(sub, "threads", cfg.threads);
  }
  if (doc.contains("converge")) {
    const json& sub = doc.at("converge");
    reject_unknown(sub, {"start_fock", "tol", "cap"}, "converge.");
    read(sub, "start_fock", cfg.converge_start);
    read(sub, "tol", cfg.converge_tol);
    read(sub, "cap", cfg.fock_cap);
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig defaults) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path.string() + "': " + e.what());
  }
  return config_from_json(doc, defaults);
}

json to_json(const RunConfig& c) {
  auto qubit = [](const QubitEnergies& q) { return json{{"E_g", q.g}, {"E_e", q.e}, {"E_a", q.a}}; };
  return json{
      {"protocol", c.protocol == ProtocolId::one ? 1 : 2},
      {"model", model_name(c.model)},
      {"g", c.g},
      {"fock_dim", c.fock_dim},
      {"off_mode", off_mode_name(c.off_mode)},
      {"delta_off", c.delta_off},
      {"drive_frame", frame_name(c.drive_frame)},
      {"drive_ratio", c.drive_ratio},
      {"omega_r", c.base.omega_r},
      {"drive_frequency", c.base.drive.frequency},
      {"qubit1", qubit(c.base.qubits[0])},
      {"qubit2", qubit(c.base.qubits[1])},
      {"integrator", {{"tol", c.tol}, {"norm_tol", c.norm_tol}}},
      {"sweep",
       {{"from", c.sweep_from}, {"to", c.sweep_to}, {"points", c.sweep_points},
        {"threads", c.threads}}},
      {"converge",
       {{"start_fock", c.converge_start}, {"tol", c.converge_tol}, {"cap", c.fock_cap}}},
  };
}

std::vector<std::string> describe(const RunConfig& c) {
  const auto num = format_number;
  auto levels = [&](const QubitEnergies& q) {
    return num(q.g) + " " + num(q.e) + " " + num(q.a);
  };
  return {
      "# protocol = " + std::string(protocol_name(c.protocol)),
      "# model = " + std::string(model_name(c.model)),
      "# g_over_omega_r = " + num(c.g),
      "# fock_dim = " + std::to_string(c.fock_dim),
      "# off_mode = " + std::string(off_mode_name(c.off_mode)),
      "# delta_off = " + num(c.delta_off),
      "# drive_frame = " + std::string(frame_name(c.drive_frame)),
      "# drive_ratio = " + num(c.drive_ratio),
      "# omega_r = " + num(c.base.omega_r),
      "# drive_frequency = " + num(c.base.drive.frequency),
      "# qubit1_levels = " + levels(c.base.qubits[0]),
      "# qubit2_levels = " + levels(c.base.qubits[1]),
      "# integrator_tol = " + num(c.tol),
      "# norm_tol = " + num(c.norm_tol),
      "# sweep = " + num(c.sweep_from) + " " + num(c.sweep_to) + " " +
          std::to_string(c.sweep_points),
      "# threads = " + std::to_string(c.threads),
      "# converge = " + std::to_string(c.converge_start) + " " + num(c.converge_tol) + " " +
          std::to_string(c.fock_cap),
  };
}

}  // namespace uscgate::cli
