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

#include "uscgate/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace uscgate {
namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<std::pair<Level, Level>, 4> kComputational = {
    std::pair{Level::g, Level::g}, std::pair{Level::g, Level::e},
    std::pair{Level::e, Level::g}, std::pair{Level::e, Level::e}};

StateVector from_coefficients(const std::array<Complex, 4>& b, const SpaceDescriptor& space) {
  StateVector psi = StateVector::zero(space);
  for (std::size_t i = 0; i < kComputational.size(); ++i) {
    psi.amplitudes()(space.basis_index(kComputational[i].first, kComputational[i].second, 0)) =
        b[i];
  }
  return psi;
}

Vector phase_factors(const Eigen::VectorXd& phases, double sign) {
  Vector out(phases.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) out(i) = std::exp(kI * (sign * phases(i)));
  return out;
}

struct StepContext {
  const SpaceDescriptor& space;
  Model model;
  const RunOptions& options;
};

// Evolves psi (interaction frame) through one step and advances the frame
// phases. Returns integrator steps and norm drift.
std::pair<std::size_t, double> run_quantized(const StepContext& ctx, const PulseStep& step,
                                             const SystemParams& params, Vector& psi,
                                             Eigen::VectorXd& frame_phase) {
  const CouplingSwitch sw =
      CouplingSwitch::only(step.transition, ctx.options.off_mode, ctx.options.delta_off);
  const SystemParams p = step_params(params, sw);
  const OperatorMatrix h =
      ctx.model == Model::full ? build_full(p, sw, ctx.space) : build_rwa(p, sw, ctx.space);
  const double duration = pulse_duration(step, p);
  const double norm_in = psi.norm();

  Vector lab = phase_factors(frame_phase, -1.0).cwiseProduct(psi);
  lab = propagator(h, duration) * lab;
  frame_phase += free_energies(p, ctx.space) * duration;
  psi = phase_factors(frame_phase, 1.0).cwiseProduct(lab);
  return {1, std::abs(psi.norm() - norm_in)};
}

std::pair<std::size_t, double> run_driven(const StepContext& ctx, const PulseStep& step,
                                          const SystemParams& params, Vector& psi,
                                          Eigen::VectorXd& frame_phase) {
  const CouplingSwitch sw = CouplingSwitch::none(ctx.options.off_mode, ctx.options.delta_off);
  const SystemParams p = tune_resonant(step_params(params, sw), Transition::drive_e1_a1);
  const double duration = pulse_duration(step, p);
  const bool rwa = ctx.model == Model::rwa;

  const Eigen::VectorXd energies = free_energies(p, ctx.space);
  const OperatorMatrix h_static =
      rwa ? build_rwa(p, sw, ctx.space) : build_full(p, sw, ctx.space);
  OperatorMatrix coupling = h_static;
  coupling.matrix().diagonal() -= energies.cast<Complex>();
  const SparseMatrix v = coupling.sparse();
  const bool has_coupling = v.nonZeros() > 0;

  const TransitionOperators s = transition_op(ctx.space, 1, Level::e, Level::a);
  const SparseMatrix raising = s.raising.sparse();
  const SparseMatrix lowering = s.lowering.sparse();

  const Eigen::VectorXd phase0 = frame_phase;
  // Accumulated phase of a1 relative to e1 at the step start.
  const double theta0 = frame_phase(ctx.space.basis_index(Level::a, Level::g, 0)) -
                        frame_phase(ctx.space.basis_index(Level::e, Level::g, 0));
  const double gap = p.gap(Transition::drive_e1_a1);
  const double w_l = p.drive.frequency;

  Vector scratch(psi.size());
  auto action = [&](double tau, const Vector& y, Vector& out) {
    Complex c;
    if (ctx.options.drive_frame == Frame::rotating) {
      c = drive_coefficient(p, tau, Frame::rotating, rwa);
    } else {
      const double lab_time = tau + (w_l > 0.0 ? theta0 / w_l : 0.0);
      c = drive_coefficient(p, lab_time, Frame::lab, rwa) *
          std::exp(kI * (theta0 + gap * tau));
    }
    out.noalias() = c * (raising * y);
    out.noalias() += std::conj(c) * (lowering * y);
    if (has_coupling) {
      const Vector d = phase_factors(phase0 + energies * tau, 1.0);
      scratch = d.conjugate().cwiseProduct(y);
      out += d.cwiseProduct(v * scratch);
    }
  };

  const StateVector start(ctx.space, psi);
  PropagationReport report = propagate_timedep_action(action, 0.0, duration, start,
                                                      ctx.options.integrator);
  psi = report.final_state.amplitudes();
  frame_phase += energies * duration;
  return {report.steps_taken, report.norm_drift};
}

}  // namespace

std::string_view protocol_name(ProtocolId id) { return id == ProtocolId::one ? "1" : "2"; }

ProtocolId parse_protocol(std::string_view name) {
  if (name == "1" || name == "I" || name == "one") return ProtocolId::one;
  if (name == "2" || name == "II" || name == "two") return ProtocolId::two;
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

std::string_view model_name(Model model) { return model == Model::rwa ? "rwa" : "full"; }

Model parse_model(std::string_view name) {
  if (name == "rwa") return Model::rwa;
  if (name == "full") return Model::full;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

std::string_view frame_name(Frame frame) { return frame == Frame::lab ? "lab" : "rotating"; }

Frame parse_frame(std::string_view name) {
  if (name == "lab") return Frame::lab;
  if (name == "rotating") return Frame::rotating;
  throw std::invalid_argument("unknown drive frame '" + std::string(name) + "'");
}

std::vector<Transition> Protocol::quantized_transitions() const {
  std::vector<Transition> out;
  for (const PulseStep& s : steps) {
    if (s.kind == CouplingKind::quantized &&
        std::find(out.begin(), out.end(), s.transition) == out.end()) {
      out.push_back(s.transition);
    }
  }
  return out;
}

Protocol protocol_one() {
  return {ProtocolId::one,
          {
              {Transition::g2_e2, CouplingKind::quantized, kPi / 2, "(i) mapping"},
              {Transition::e1_a1, CouplingKind::quantized, kPi, "(ii) cphase"},
              {Transition::g2_e2, CouplingKind::quantized, 3 * kPi / 2, "(iii) back mapping"},
          }};
}

Protocol protocol_two() {
  return {ProtocolId::two,
          {
              {Transition::g2_e2, CouplingKind::quantized, kPi / 2, "(i) mapping"},
              {Transition::drive_e1_a1, CouplingKind::classical, kPi / 2, "(ii) rotate qubit 1"},
              {Transition::g1_e1, CouplingKind::quantized, kPi, "(iii) cphase"},
              {Transition::drive_e1_a1, CouplingKind::classical, kPi / 2,
               "(iv) back rotate qubit 1"},
              {Transition::g2_e2, CouplingKind::quantized, kPi / 2, "(v) back mapping"},
          }};
}

Protocol make_protocol(ProtocolId id) {
  return id == ProtocolId::one ? protocol_one() : protocol_two();
}

void GateInput::validate(double tol) const {
  double total = 0.0;
  for (const Complex& c : b) total += std::norm(c);
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument("gate input is not normalized (sum |b|^2 = " +
                                std::to_string(total) + ")");
  }
}

StateVector GateInput::to_state(const SpaceDescriptor& space) const {
  return from_coefficients(b, space);
}

GateInput maximally_entangled_input() { return {{0.5, 0.5, 0.5, 0.5}}; }

GateInput random_gate_input(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  GateInput in;
  double total = 0.0;
  for (Complex& c : in.b) {
    c = {normal(rng), normal(rng)};
    total += std::norm(c);
  }
  for (Complex& c : in.b) c /= std::sqrt(total);
  return in;
}

StateVector ideal_cphase(const GateInput& input, double theta, const SpaceDescriptor& space) {
  input.validate();
  std::array<Complex, 4> out = input.b;
  out[3] *= std::exp(kI * theta);
  return from_coefficients(out, space);
}

StateVector ideal_protocol_two_output(const GateInput& input, const SpaceDescriptor& space) {
  input.validate();
  std::array<Complex, 4> out = input.b;
  out[2] = -out[2];
  return from_coefficients(out, space);
}

StateVector ideal_output(ProtocolId id, const GateInput& input, const SpaceDescriptor& space) {
  return id == ProtocolId::one ? ideal_cphase(input, kPi, space)
                               : ideal_protocol_two_output(input, space);
}

double pulse_duration(const PulseStep& step, const SystemParams& params) {
  const double rate = step.kind == CouplingKind::classical ? params.drive.rabi
                                                           : params.couplings.of(step.transition);
  if (!(rate > 0.0)) {
    throw std::invalid_argument("pulse step '" + step.label + "' has zero coupling rate");
  }
  return step.pulse_area / rate;
}

ProtocolRun run_protocol(const Protocol& protocol, const SystemParams& params, Model model,
                         const GateInput& input, const SpaceDescriptor& space,
                         const RunOptions& options) {
  params.validate();
  input.validate();

  // Couplings the schedule never addresses are absent from its Hamiltonian.
  SystemParams base = params;
  const std::vector<Transition> used = protocol.quantized_transitions();
  for (Transition t : kQuantizedTransitions) {
    if (std::find(used.begin(), used.end(), t) == used.end()) base.couplings.of(t) = 0.0;
  }

  const StepContext ctx{space, model, options};
  Vector psi = input.to_state(space).amplitudes();
  Eigen::VectorXd frame_phase = Eigen::VectorXd::Zero(space.total_dim());
  ProtocolRun run{StateVector::zero(space), 0.0, 0.0, {}};

  for (const PulseStep& step : protocol.steps) {
    StepTrace trace{step.label, run.total_time, 0.0, 0, 0.0};
    try {
      const auto [steps, drift] = step.kind == CouplingKind::quantized
                                      ? run_quantized(ctx, step, base, psi, frame_phase)
                                      : run_driven(ctx, step, base, psi, frame_phase);
      trace.integrator_steps = steps;
      trace.norm_drift = drift;
    } catch (const IntegrationError& e) {
      throw IntegrationError("step " + step.label + ": " + e.what(), e.time(), e.step());
    }
    trace.duration = pulse_duration(step, base);
    run.total_time += trace.duration;
    run.norm_drift += trace.norm_drift;
    run.steps.push_back(std::move(trace));
  }
  run.final_state = StateVector(space, std::move(psi));
  return run;
}

StateVector reference_output(const Protocol& protocol, const SystemParams& params,
                             const GateInput& input, const SpaceDescriptor& space,
                             const RunOptions& options) {
  if (options.off_mode == OffMode::hard) return ideal_output(protocol.id, input, space);
  return run_protocol(protocol, params, Model::rwa, input, space, options).final_state;
}

}  // namespace uscgate
