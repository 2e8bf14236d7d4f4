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

#include "uscgate/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uscgate {
namespace {

std::size_t quantized_slot(Transition transition) {
  switch (transition) {
    case Transition::e1_a1: return 0;
    case Transition::g2_e2: return 1;
    case Transition::g1_e1: return 2;
    case Transition::drive_e1_a1: break;
  }
  throw std::invalid_argument("drive_e1_a1 is not a quantized coupling");
}

OperatorMatrix free_part(const SystemParams& params, const SpaceDescriptor& space) {
  const Eigen::VectorXd diag = free_energies(params, space);
  Matrix m = Matrix::Zero(space.total_dim(), space.total_dim());
  m.diagonal() = diag.cast<Complex>();
  return OperatorMatrix(space, std::move(m));
}

template <typename CouplingTerm>
OperatorMatrix build_with(const SystemParams& params, const CouplingSwitch& switches,
                          const SpaceDescriptor& space, CouplingTerm&& term) {
  params.validate();
  OperatorMatrix h = free_part(params, space);
  const OperatorMatrix a = annihilation_op(space);
  const OperatorMatrix a_dag = a.adjoint();
  for (Transition t : kQuantizedTransitions) {
    const double g = switches.effective_coupling(params, t);
    if (g == 0.0) continue;
    const TransitionLevels lv = transition_levels(t);
    const TransitionOperators s = transition_op(space, lv.qubit, lv.lower, lv.upper);
    h += Complex{g} * term(s, a, a_dag);
  }
  return h;
}

}  // namespace

std::string_view transition_name(Transition transition) {
  switch (transition) {
    case Transition::e1_a1: return "e1_a1";
    case Transition::g2_e2: return "g2_e2";
    case Transition::g1_e1: return "g1_e1";
    case Transition::drive_e1_a1: return "drive_e1_a1";
  }
  return "?";
}

Transition parse_transition(std::string_view name) {
  for (Transition t : {Transition::e1_a1, Transition::g2_e2, Transition::g1_e1,
                       Transition::drive_e1_a1}) {
    if (transition_name(t) == name) return t;
  }
  throw std::invalid_argument("unknown transition '" + std::string(name) + "'");
}

TransitionLevels transition_levels(Transition transition) {
  switch (transition) {
    case Transition::e1_a1:
    case Transition::drive_e1_a1: return {1, Level::e, Level::a};
    case Transition::g2_e2: return {2, Level::g, Level::e};
    case Transition::g1_e1: return {1, Level::g, Level::e};
  }
  throw std::invalid_argument("unknown transition");
}

std::string_view off_mode_name(OffMode mode) {
  return mode == OffMode::hard ? "hard" : "detuned";
}

OffMode parse_off_mode(std::string_view name) {
  if (name == "hard") return OffMode::hard;
  if (name == "detuned") return OffMode::detuned;
  throw std::invalid_argument("unknown off mode '" + std::string(name) + "'");
}

double QubitEnergies::of(Level level) const {
  switch (level) {
    case Level::g: return g;
    case Level::e: return e;
    case Level::a: return a;
  }
  throw std::out_of_range("bad level");
}

double& QubitEnergies::of(Level level) {
  switch (level) {
    case Level::g: return g;
    case Level::e: return e;
    case Level::a: return a;
  }
  throw std::out_of_range("bad level");
}

double Couplings::of(Transition transition) const {
  switch (transition) {
    case Transition::e1_a1: return e1_a1;
    case Transition::g2_e2: return g2_e2;
    case Transition::g1_e1: return g1_e1;
    case Transition::drive_e1_a1: break;
  }
  throw std::invalid_argument("drive_e1_a1 has no quantized coupling");
}

double& Couplings::of(Transition transition) {
  switch (transition) {
    case Transition::e1_a1: return e1_a1;
    case Transition::g2_e2: return g2_e2;
    case Transition::g1_e1: return g1_e1;
    case Transition::drive_e1_a1: break;
  }
  throw std::invalid_argument("drive_e1_a1 has no quantized coupling");
}

SystemParams SystemParams::uniform(double g_over_omega_r, double drive_ratio) {
  SystemParams p;
  const double g = g_over_omega_r * p.omega_r;
  p.couplings = {g, g, g};
  p.drive.rabi = drive_ratio * g;
  p.drive.frequency = p.omega_r;
  return p;
}

const QubitEnergies& SystemParams::qubit(int index) const {
  if (index != 1 && index != 2) throw std::out_of_range("qubit must be 1 or 2");
  return qubits[static_cast<std::size_t>(index - 1)];
}

QubitEnergies& SystemParams::qubit(int index) {
  if (index != 1 && index != 2) throw std::out_of_range("qubit must be 1 or 2");
  return qubits[static_cast<std::size_t>(index - 1)];
}

double SystemParams::gap(Transition transition) const {
  const TransitionLevels lv = transition_levels(transition);
  const QubitEnergies& q = qubit(lv.qubit);
  return q.of(lv.upper) - q.of(lv.lower);
}

void SystemParams::validate() const {
  if (!(omega_r > 0.0)) throw std::invalid_argument("omega_r must be > 0");
  if (couplings.e1_a1 < 0.0 || couplings.g2_e2 < 0.0 || couplings.g1_e1 < 0.0) {
    throw std::invalid_argument("coupling strengths must be >= 0");
  }
  if (drive.rabi < 0.0) throw std::invalid_argument("drive Rabi frequency must be >= 0");
  for (int i = 1; i <= 2; ++i) {
    const QubitEnergies& q = qubit(i);
    if (!(q.g < q.e && q.e < q.a)) {
      throw std::invalid_argument("qubit " + std::to_string(i) +
                                  " level energies must satisfy E_g < E_e < E_a");
    }
  }
}

CouplingSwitch CouplingSwitch::only(Transition transition, OffMode mode, double delta_off) {
  CouplingSwitch s = none(mode, delta_off);
  s.active[quantized_slot(transition)] = true;
  return s;
}

CouplingSwitch CouplingSwitch::none(OffMode mode, double delta_off) {
  CouplingSwitch s;
  s.off_mode = mode;
  s.delta_off = delta_off;
  return s;
}

bool CouplingSwitch::is_active(Transition transition) const {
  return active[quantized_slot(transition)];
}

double CouplingSwitch::effective_coupling(const SystemParams& params,
                                          Transition transition) const {
  if (is_active(transition) || off_mode == OffMode::detuned) {
    return params.couplings.of(transition);
  }
  return 0.0;
}

SystemParams retune(const SystemParams& params, Transition transition, double gap) {
  SystemParams out = params;
  const TransitionLevels lv = transition_levels(transition);
  QubitEnergies& q = out.qubit(lv.qubit);
  const double shift = gap - (q.of(lv.upper) - q.of(lv.lower));
  for (Level level : {Level::g, Level::e, Level::a}) {
    if (static_cast<int>(level) > static_cast<int>(lv.lower)) q.of(level) += shift;
  }
  return out;
}

SystemParams tune_resonant(const SystemParams& params, Transition transition) {
  const double target =
      transition == Transition::drive_e1_a1 ? params.drive.frequency : params.omega_r;
  return retune(params, transition, target);
}

SystemParams step_params(const SystemParams& params, const CouplingSwitch& switches) {
  SystemParams out = params;
  if (switches.off_mode == OffMode::detuned) {
    for (Transition t : kQuantizedTransitions) {
      if (!switches.is_active(t) && params.couplings.of(t) != 0.0) {
        out = retune(out, t, out.omega_r + switches.delta_off);
      }
    }
  }
  for (Transition t : kQuantizedTransitions) {
    if (switches.is_active(t)) out = tune_resonant(out, t);
  }
  return out;
}

Eigen::VectorXd free_energies(const SystemParams& params, const SpaceDescriptor& space) {
  Eigen::VectorXd diag(space.total_dim());
  for (int i = 0; i < space.total_dim(); ++i) {
    const SpaceDescriptor::Label l = space.label(i);
    diag(i) = params.qubits[0].of(l.q1) + params.qubits[1].of(l.q2) + params.omega_r * l.n;
  }
  return diag;
}

OperatorMatrix build_full(const SystemParams& params, const CouplingSwitch& switches,
                          const SpaceDescriptor& space) {
  return build_with(params, switches, space,
                    [](const TransitionOperators& s, const OperatorMatrix& a,
                       const OperatorMatrix& a_dag) { return s.sigma_x * (a + a_dag); });
}

OperatorMatrix build_rwa(const SystemParams& params, const CouplingSwitch& switches,
                         const SpaceDescriptor& space) {
  return build_with(params, switches, space,
                    [](const TransitionOperators& s, const OperatorMatrix& a,
                       const OperatorMatrix& a_dag) {
                      return s.raising * a + s.lowering * a_dag;
                    });
}

OperatorMatrix excitation_number_op(const SpaceDescriptor& space,
                                    std::span<const Transition> transitions) {
  std::array<std::array<double, kQubitLevels>, 2> rung{};
  for (int qubit = 1; qubit <= 2; ++qubit) {
    auto coupled = [&](Level lower, Level upper) {
      for (Transition t : transitions) {
        const TransitionLevels lv = transition_levels(t);
        if (lv.qubit == qubit && lv.lower == lower && lv.upper == upper) return 1.0;
      }
      return 0.0;
    };
    auto& r = rung[static_cast<std::size_t>(qubit - 1)];
    r[0] = 0.0;
    r[1] = coupled(Level::g, Level::e);
    r[2] = r[1] + coupled(Level::e, Level::a);
  }
  Matrix m = Matrix::Zero(space.total_dim(), space.total_dim());
  for (int i = 0; i < space.total_dim(); ++i) {
    const SpaceDescriptor::Label l = space.label(i);
    m(i, i) = rung[0][static_cast<std::size_t>(l.q1)] + rung[1][static_cast<std::size_t>(l.q2)] +
              static_cast<double>(l.n);
  }
  return OperatorMatrix(space, std::move(m));
}

Complex drive_coefficient(const SystemParams& params, double t, Frame frame, bool rwa) {
  const double omega = params.drive.rabi;
  const double w_l = params.drive.frequency;
  if (frame == Frame::lab) {
    if (rwa) return omega * std::exp(-kI * (w_l * t));
    return Complex{2.0 * omega * std::cos(w_l * t)};
  }
  const double w = params.gap(Transition::drive_e1_a1);
  Complex c = omega * std::exp(-kI * ((w_l - w) * t));
  if (!rwa) c += omega * std::exp(kI * ((w_l + w) * t));
  return c;
}

OperatorMatrix build_drive(const SystemParams& params, double t, Frame frame, bool rwa,
                           const SpaceDescriptor& space) {
  const TransitionOperators s = transition_op(space, 1, Level::e, Level::a);
  const Complex c = drive_coefficient(params, t, frame, rwa);
  OperatorMatrix h = c * s.raising + std::conj(c) * s.lowering;
  if (frame == Frame::lab) {
    const QubitEnergies& q1 = params.qubit(1);
    Matrix local = Matrix::Zero(kQubitLevels, kQubitLevels);
    local(1, 1) = q1.e;
    local(2, 2) = q1.a;
    h += embed(local, Slot::qubit1, space);
  }
  return h;
}

}  // namespace uscgate
