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

#include "csv_output.hpp"

#include <cmath>
#include <cstdio>

#include "run_config.hpp"

namespace uscgate::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const RunConfig& config,
                     std::span<const SweepRecord> records) {
  for (const std::string& line : describe(config)) out << line << '\n';
  for (const SweepRecord& r : records) {
    if (!r.ok()) out << "# error at g_over_omega_r = " << format_number(r.g_over_omega_r) << ": "
                     << r.error << '\n';
  }
  out << kCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << format_number(r.g_over_omega_r) << ',' << format_number(r.fidelity) << ','
        << format_number(r.leakage) << ',' << r.fock_dim << '\n';
  }
}

void write_plot_data(std::ostream& out, const RunConfig& config,
                     std::span<const SweepRecord> records) {
  for (const std::string& line : describe(config)) out << line << '\n';
  out << "# g_over_omega_r fidelity\n";
  for (const SweepRecord& r : records) {
    out << format_number(r.g_over_omega_r) << ' ' << format_number(r.fidelity) << '\n';
  }
}

}  // namespace uscgate::cli
