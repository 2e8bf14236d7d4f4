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

#include <ostream>
#include <span>
#include <string>

#include "uscgate/sweep.hpp"

namespace uscgate::cli {

struct RunConfig;

inline constexpr const char* kCsvHeader = "g_over_omega_r,fidelity,leakage,fock_dim";

/// printf %.9g in the C locale; "nan" for NaN.
std::string format_number(double value);

/// Config comment block, header, one row per record. LF line endings.
void write_sweep_csv(std::ostream& out, const RunConfig& config,
                     std::span<const SweepRecord> records);

/// Two whitespace-separated columns, g/omega_r and fidelity, for gnuplot.
void write_plot_data(std::ostream& out, const RunConfig& config,
                     std::span<const SweepRecord> records);

}  // namespace uscgate::cli
