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
#include <span>
#include <string_view>

#include "uscgate/hilbert.hpp"

namespace uscgate {

/// Transitions that a pulse step can address. The three quantized ones couple
/// to the resonator; drive_e1_a1 is the classical microwave drive on qubit 1.
enum class Transition { e1_a1, g2_e2, g1_e1, drive_e1_a1 };

inline constexpr std::array<Transition, 3> kQuantizedTransitions = {
    Transition::e1_a1, Transition::g2_e2, Transition::g1_e1};

std::string_view transition_name(Transition transition);
Transition parse_transition(std::string_view name);

/// Qubit index (1 or 2) and the (lower, upper) levels of a transition.
struct TransitionLevels {
  int qubit;
  Level lower;
  Level upper;
};
TransitionLevels transition_levels(Transition transition);

enum class OffMode { hard, detuned };

std::string_view off_mode_name(OffMode mode);
OffMode parse_off_mode(std::string_view name);

struct QubitEnergies {
  double g = 0.0;
  double e = 1.0;
  double a = 2.0;

  double of(Level level) const;
  double& of(Level level);
  bool operator==(const QubitEnergies&) const = default;
};

struct Couplings {
  double e1_a1 = 0.0;
  double g2_e2 = 0.0;
  double g1_e1 = 0.0;

  double of(Transition transition) const;
  double& of(Transition transition);
  bool operator==(const Couplings&) const = default;
};

struct Drive {
  double rabi = 0.0;       // Omega_{e1,a1}
  double frequency = 1.0;  // omega_L
  bool operator==(const Drive&) const = default;
};

/// Units: hbar = 1, every energy and rate in multiples of omega_r.
struct SystemParams {
  double omega_r = 1.0;
  std::array<QubitEnergies, 2> qubits{};
  Couplings couplings{};
  Drive drive{};

  /// All three quantized couplings equal to g_over_omega_r * omega_r and
  /// Omega = drive_ratio * g.
  static SystemParams uniform(double g_over_omega_r, double drive_ratio = 1.0);

  const QubitEnergies& qubit(int index) const;
  QubitEnergies& qubit(int index);
  double gap(Transition transition) const;

  /// Throws std::invalid_argument on omega_r <= 0, negative couplings or
  /// non-increasing level energies.
  void validate() const;

  bool operator==(const SystemParams&) const = default;
};

/// Which quantized couplings are switched on for one pulse step, and how the
/// others are switched off.
struct CouplingSwitch {
  std::array<bool, 3> active{};  // indexed like kQuantizedTransitions
  OffMode off_mode = OffMode::hard;
  double delta_off = 3.0;  // ignored in hard mode

  static CouplingSwitch only(Transition transition, OffMode mode = OffMode::hard,
                             double delta_off = 3.0);
  static CouplingSwitch none(OffMode mode = OffMode::hard, double delta_off = 3.0);

  bool is_active(Transition transition) const;
  /// Coupling strength that enters the Hamiltonian for this transition.
  double effective_coupling(const SystemParams& params, Transition transition) const;
};

/// Sets the gap of `transition` to `gap`, moving every level above its lower
/// level by the same amount so no other gap changes.
SystemParams retune(const SystemParams& params, Transition transition, double gap);

/// Gap set equal to omega_r (or omega_L for drive_e1_a1).
SystemParams tune_resonant(const SystemParams& params, Transition transition);

/// Level structure for one step: inactive quantized transitions parked at
/// omega_r + delta_off (detuned mode only), then every active one made
/// resonant.
SystemParams step_params(const SystemParams& params, const CouplingSwitch& switches);

/// Diagonal of sum_j E_j |j><j| + omega_r a^dag a.
Eigen::VectorXd free_energies(const SystemParams& params, const SpaceDescriptor& space);

/// Free part plus g sigma^x (a + a^dag) for each coupling the switch lets through.
OperatorMatrix build_full(const SystemParams& params, const CouplingSwitch& switches,
                          const SpaceDescriptor& space);

/// Free part plus g (sigma_+ a + sigma_- a^dag) for each coupling the switch
/// lets through.
OperatorMatrix build_rwa(const SystemParams& params, const CouplingSwitch& switches,
                         const SpaceDescriptor& space);

/// Photon number plus one excitation per coupled rung of each qubit ladder.
/// Commutes with build_rwa for the same set of transitions.
OperatorMatrix excitation_number_op(const SpaceDescriptor& space,
                                    std::span<const Transition> transitions);

enum class Frame { lab, rotating };

/// Coefficient c(t) of the drive written as c |a1><e1| + conj(c) |e1><a1|.
///
/// lab:      Omega (e^{i wL t} + e^{-i wL t}), rwa keeps only Omega e^{-i wL t}.
/// rotating: Omega (e^{-i (wL - w) t} + e^{i (wL + w) t}) with w = E_a1 - E_e1,
///           rwa drops the (wL + w) term.
Complex drive_coefficient(const SystemParams& params, double t, Frame frame, bool rwa);

/// Semiclassical drive Hamiltonian on qubit 1. The lab frame adds
/// E_e1 |e1><e1| + E_a1 |a1><a1|.
OperatorMatrix build_drive(const SystemParams& params, double t, Frame frame, bool rwa,
                           const SpaceDescriptor& space);

}  // namespace uscgate
