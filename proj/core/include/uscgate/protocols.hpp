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
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "uscgate/evolve.hpp"
#include "uscgate/hamiltonian.hpp"
#include "uscgate/hilbert.hpp"

namespace uscgate {

enum class ProtocolId { one, two };
enum class Model { rwa, full };
enum class CouplingKind { quantized, classical };

std::string_view protocol_name(ProtocolId id);
ProtocolId parse_protocol(std::string_view name);  // "1" or "2"
std::string_view model_name(Model model);
Model parse_model(std::string_view name);  // "rwa" or "full"
std::string_view frame_name(Frame frame);
Frame parse_frame(std::string_view name);  // "lab" or "rotating"

/// One pulse of a schedule. The pulse area is coupling rate x duration, the
/// rotation angle of the addressed n = 0 <-> 1 doublet.
struct PulseStep {
  Transition transition;
  CouplingKind kind;
  double pulse_area;
  std::string label;
};

struct Protocol {
  ProtocolId id;
  std::vector<PulseStep> steps;

  /// Quantized couplings the schedule uses; the others are absent from its
  /// Hamiltonian.
  std::vector<Transition> quantized_transitions() const;
};

/// Map e2 onto the resonator (pi/2), pi on e1 <-> a1 with one photon,
/// map back (3pi/2). Phases |e1 e2>.
Protocol protocol_one();

/// Map e2 onto the resonator, drive e1 -> a1, pi on g1 <-> e1 with one
/// photon, drive back, map back. Phases |e1 g2>.
Protocol protocol_two();

Protocol make_protocol(ProtocolId id);

/// Coefficients of |g1 g2>, |g1 e2>, |e1 g2>, |e1 e2>; resonator in |0>.
struct GateInput {
  std::array<Complex, 4> b{};

  /// Throws std::invalid_argument unless sum |b_i|^2 = 1 within tol.
  void validate(double tol = 1e-10) const;
  StateVector to_state(const SpaceDescriptor& space) const;
};

/// All four coefficients equal to 1/2.
GateInput maximally_entangled_input();
GateInput random_gate_input(std::mt19937_64& rng);

/// diag(1, 1, 1, e^{i theta}) applied to the input, resonator in |0>.
StateVector ideal_cphase(const GateInput& input, double theta, const SpaceDescriptor& space);

/// (b1, b2, -b3, b4), resonator in |0>.
StateVector ideal_protocol_two_output(const GateInput& input, const SpaceDescriptor& space);

StateVector ideal_output(ProtocolId id, const GateInput& input, const SpaceDescriptor& space);

/// pulse_area / rate, with rate the bare coupling g of the addressed
/// transition or the drive Rabi frequency. Throws std::invalid_argument on a
/// zero rate.
double pulse_duration(const PulseStep& step, const SystemParams& params);

struct RunOptions {
  OffMode off_mode = OffMode::hard;
  double delta_off = 3.0;
  /// rotating: drive clock restarts at each driven step, phase-locked to
  /// the qubit frame. lab: 2 Omega cos(wL t) continuous in lab time.
  Frame drive_frame = Frame::rotating;
  IntegratorOptions integrator{};
};

struct StepTrace {
  std::string label;
  double start = 0.0;
  double duration = 0.0;
  std::size_t integrator_steps = 0;
  double norm_drift = 0.0;
};

struct ProtocolRun {
  /// In the interaction frame of the accumulated free Hamiltonian, so the
  /// RWA run equals the ideal output up to numerical error.
  StateVector final_state;
  double total_time = 0.0;
  double norm_drift = 0.0;  // sum over steps, before any renormalization
  std::vector<StepTrace> steps;
};

/// Runs the schedule step by step: retune, switch couplings, build the step
/// Hamiltonian for `model`, propagate for pulse_duration. Integration
/// failures are rethrown as IntegrationError carrying the step label.
ProtocolRun run_protocol(const Protocol& protocol, const SystemParams& params, Model model,
                         const GateInput& input, const SpaceDescriptor& space,
                         const RunOptions& options = {});

/// Reference state for scoring a run made with `options`. Hard switching:
/// the ideal output. Detuned parking: the same schedule under the RWA model,
/// which carries the parked levels' frame phases the ideal output lacks.
StateVector reference_output(const Protocol& protocol, const SystemParams& params,
                             const GateInput& input, const SpaceDescriptor& space,
                             const RunOptions& options = {});

}  // namespace uscgate
