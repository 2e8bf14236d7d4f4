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

// Reference computations used only by tests. None of them call into the
// library's operator builders or propagators.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace uscgate::oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Mat kron3(const Mat& q1, const Mat& q2, const Mat& mode) { return kron(kron(q1, q2), mode); }

inline Mat ket_bra(int dim, int row, int col) {
  Mat m = Mat::Zero(dim, dim);
  m(row, col) = 1.0;
  return m;
}

inline Mat lowering(int n) {
  Mat a = Mat::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
  return a;
}

/// exp(-i H t) by scaling and squaring of a truncated Taylor series.
inline Mat taylor_expm(const Mat& h, double t) {
  const Mat x = C(0, -t) * h;
  const double nrm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scaled = nrm;
  while (scaled > 0.25) {
    scaled /= 2;
    ++squarings;
  }
  const Mat y = x / std::pow(2.0, squarings);
  Mat term = Mat::Identity(h.rows(), h.cols());
  Mat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * y / double(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Fixed-step classical RK4 for i dpsi/dt = H(t) psi.
template <typename HOfT>
Vec rk4(HOfT&& h_of_t, double t0, double t1, Vec psi, int steps) {
  const double h = (t1 - t0) / steps;
  const C mi(0, -1);
  for (int s = 0; s < steps; ++s) {
    const double t = t0 + s * h;
    const Vec k1 = mi * (h_of_t(t) * psi);
    const Vec k2 = mi * (h_of_t(t + h / 2) * (psi + h / 2 * k1));
    const Vec k3 = mi * (h_of_t(t + h / 2) * (psi + h / 2 * k2));
    const Vec k4 = mi * (h_of_t(t + h) * (psi + h * k3));
    psi += h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

/// Protocol I with hard switching, every gap resonant with omega_r = 1,
/// integrated directly in the interaction picture of the free Hamiltonian.
/// There each quantized coupling g sigma^x (a + a^dag) becomes
/// g (s+ a + s- a^dag) + g (s+ a^dag e^{2it} + s- a e^{-2it}), with the clock
/// running continuously from the start of the protocol. Returns the final
/// interaction-picture state for the maximally entangled input.
inline Vec protocol_one_interaction_picture(double g, int fock, bool counter_rotating,
                                            int steps_per_unit_time) {
  const int dim = 9 * fock;
  const Mat i3 = Mat::Identity(3, 3);
  const Mat in = Mat::Identity(fock, fock);
  const Mat a = kron3(i3, i3, lowering(fock));
  const Mat ad = a.adjoint();
  // s+ = |upper><lower|
  const Mat sp_q2 = kron3(i3, ket_bra(3, 1, 0), in);  // g2 -> e2
  const Mat sp_q1 = kron3(ket_bra(3, 2, 1), i3, in);  // e1 -> a1
  Vec psi = Vec::Zero(dim);
  for (int q1 : {0, 1}) {
    for (int q2 : {0, 1}) psi((q1 * 3 + q2) * fock) = 0.5;
  }
  struct Step {
    const Mat* sp;
    double area;
  };
  const double pi = std::numbers::pi;
  const Step steps[] = {{&sp_q2, pi / 2}, {&sp_q1, pi}, {&sp_q2, 3 * pi / 2}};
  double t = 0.0;
  for (const Step& st : steps) {
    const double duration = st.area / g;
    const Mat co = g * (*st.sp * a + st.sp->adjoint() * ad);
    const Mat counter_up = g * (*st.sp * ad);
    const Mat counter_down = g * (st.sp->adjoint() * a);
    auto h = [&](double tt) -> Mat {
      if (!counter_rotating) return co;
      const C phase = std::exp(C(0, 2 * tt));
      return co + phase * counter_up + std::conj(phase) * counter_down;
    };
    const int n = std::max(1, int(std::ceil(duration * steps_per_unit_time)));
    psi = rk4(h, t, t + duration, psi, n);
    t += duration;
  }
  return psi;
}

}  // namespace uscgate::oracle
