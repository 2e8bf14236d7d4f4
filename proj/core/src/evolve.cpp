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

#include "uscgate/evolve.hpp"

#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

#include "dopri5.hpp"

namespace uscgate {
namespace {

PropagationReport finish_report(const StateVector& initial, Vector amplitudes,
                                const detail::Dopri5Stats& stats,
                                const IntegratorOptions& opts, double t) {
  const double target = initial.norm();
  const double drift = std::abs(amplitudes.norm() - target);
  if (!(drift < opts.norm_tol)) {
    throw IntegrationError("norm drift " + IntegrationError::sci(drift) + " exceeds tolerance", t,
                           0.0);
  }
  PropagationReport report{StateVector(initial.space(), std::move(amplitudes)), drift,
                           stats.steps, stats.max_local_error, false};
  if (drift > 0.0 && target > 0.0) {
    report.final_state.amplitudes() *= target / report.final_state.norm();
    report.renormalized = true;
  }
  return report;
}

}  // namespace

Matrix propagator(const OperatorMatrix& h, double duration) {
  if (!h.is_hermitian()) throw std::invalid_argument("propagator: Hamiltonian is not Hermitian");
  if (duration < 0.0) throw std::invalid_argument("propagator: negative duration");
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("propagator: eigendecomposition failed");
  }
  const Eigen::VectorXd& energies = eig.eigenvalues();
  Vector phases(energies.size());
  for (Eigen::Index i = 0; i < energies.size(); ++i) {
    phases(i) = std::exp(-kI * (energies(i) * duration));
  }
  const Matrix& v = eig.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

PropagationReport propagate_const(const OperatorMatrix& h, double duration,
                                  const StateVector& psi) {
  if (!(h.space() == psi.space())) {
    throw std::invalid_argument("propagate_const: space mismatch");
  }
  if (duration == 0.0) {
    if (!h.is_hermitian()) {
      throw std::invalid_argument("propagate_const: Hamiltonian is not Hermitian");
    }
    return {psi, 0.0, 0, 0.0, false};
  }
  Vector out = propagator(h, duration) * psi.amplitudes();
  const double drift = std::abs(out.norm() - psi.norm());
  return {StateVector(psi.space(), std::move(out)), drift, 1, 0.0, false};
}

PropagationReport propagate_timedep_action(const HamiltonianAction& h_action, double t0,
                                           double t1, const StateVector& psi,
                                           const IntegratorOptions& opts) {
  Vector y = psi.amplitudes();
  auto rhs = [&](double t, const Vector& state, Vector& dydt) {
    h_action(t, state, dydt);
    dydt *= -kI;
  };
  const detail::Dopri5Stats stats =
      detail::integrate_dopri5(rhs, t0, t1, y, opts, [](double, const Vector&) {});
  return finish_report(psi, std::move(y), stats, opts, t1);
}

PropagationReport propagate_timedep(const HamiltonianFn& h_of_t, double t0, double t1,
                                    const StateVector& psi, const IntegratorOptions& opts) {
  const SpaceDescriptor space = psi.space();
  auto action = [&](double t, const Vector& state, Vector& h_psi) {
    const OperatorMatrix h = h_of_t(t);
    if (!(h.space() == space)) {
      throw std::invalid_argument("propagate_timedep: Hamiltonian space mismatch");
    }
    h_psi.noalias() = h.matrix() * state;
  };
  return propagate_timedep_action(action, t0, t1, psi, opts);
}

Amplitudes amplitude_ode(double rabi, double omega_l, double omega_ea, bool rwa, double t0,
                         double t1, Amplitudes start, const IntegratorOptions& opts) {
  const double norm0 = std::norm(start.excited) + std::norm(start.auxiliary);
  if (std::abs(norm0 - 1.0) > opts.norm_tol) {
    throw std::invalid_argument("amplitude_ode: initial amplitudes are not normalized");
  }
  const double slow = omega_l - omega_ea;
  const double fast = omega_l + omega_ea;
  auto rhs = [&](double t, const Eigen::Vector2cd& c, Eigen::Vector2cd& dc) {
    Complex to_e = std::exp(kI * (slow * t));
    Complex to_a = std::exp(-kI * (slow * t));
    if (!rwa) {
      to_e += std::exp(-kI * (fast * t));
      to_a += std::exp(kI * (fast * t));
    }
    dc(0) = -kI * rabi * to_e * c(1);
    dc(1) = -kI * rabi * to_a * c(0);
  };
  Eigen::Vector2cd c(start.excited, start.auxiliary);
  auto check_norm = [&](double t, const Eigen::Vector2cd& state) {
    const double drift = std::abs(state.squaredNorm() - 1.0);
    if (!(drift < opts.norm_tol)) {
      throw IntegrationError("amplitude norm drift " + IntegrationError::sci(drift), t, 0.0);
    }
  };
  detail::integrate_dopri5(rhs, t0, t1, c, opts, check_norm);
  return {c(0), c(1)};
}

}  // namespace uscgate
