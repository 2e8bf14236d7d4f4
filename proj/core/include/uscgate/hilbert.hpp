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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace uscgate {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr int kQubitLevels = 3;

/// Qubit levels: logical |g>, |e> plus the auxiliary |a>.
enum class Level : int { g = 0, e = 1, a = 2 };

/// Tensor factor of the composite space.
enum class Slot { qubit1, qubit2, mode };

char level_name(Level level);

/// Shape of qutrit (x) qutrit (x) Fock(N).
///
/// Basis ordering is (q1, q2, n) with q1 slowest and the photon number n
/// fastest: index = q1 * 3N + q2 * N + n.
class SpaceDescriptor {
 public:
  struct Label {
    Level q1;
    Level q2;
    int n;
  };

  explicit SpaceDescriptor(int fock_dim);

  int qubit_levels() const { return kQubitLevels; }
  int fock_dim() const { return fock_dim_; }
  int total_dim() const { return kQubitLevels * kQubitLevels * fock_dim_; }
  int slot_dim(Slot slot) const;

  /// Throws std::out_of_range for an invalid level or photon number.
  int basis_index(Level q1, Level q2, int n) const;
  Label label(int index) const;

  bool operator==(const SpaceDescriptor&) const = default;

 private:
  int fock_dim_;
};

class StateVector {
 public:
  StateVector(SpaceDescriptor space, Vector amplitudes);

  static StateVector zero(const SpaceDescriptor& space);
  static StateVector basis(const SpaceDescriptor& space, Level q1, Level q2, int n);

  const SpaceDescriptor& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Vector& amplitudes() { return amplitudes_; }

  Complex amplitude(Level q1, Level q2, int n) const;
  double norm() const { return amplitudes_.norm(); }
  StateVector normalized() const;

 private:
  SpaceDescriptor space_;
  Vector amplitudes_;
};

class OperatorMatrix {
 public:
  OperatorMatrix(SpaceDescriptor space, Matrix entries);

  static OperatorMatrix zero(const SpaceDescriptor& space);
  static OperatorMatrix identity(const SpaceDescriptor& space);

  const SpaceDescriptor& space() const { return space_; }
  const Matrix& matrix() const { return entries_; }
  Matrix& matrix() { return entries_; }

  /// max|H - H^dag| <= rel_tol * max(1, max|H|).
  bool is_hermitian(double rel_tol = 1e-12) const;
  OperatorMatrix adjoint() const;
  StateVector apply(const StateVector& psi) const;
  SparseMatrix sparse(double prune_below = 0.0) const;

  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(Complex scale);

 private:
  SpaceDescriptor space_;
  Matrix entries_;
};

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs);
OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs);
OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix operator*(Complex scale, OperatorMatrix op);
OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

/// Mode lowering operator a, identity on both qubits. a^dag|N-1> = 0.
OperatorMatrix annihilation_op(const SpaceDescriptor& space);
OperatorMatrix creation_op(const SpaceDescriptor& space);
OperatorMatrix number_op(const SpaceDescriptor& space);

/// sigma^x_{k,l} = |l><k| + |k><l| on one qubit, with its one-sided parts
/// raising = |l><k| and lowering = |k><l|.
struct TransitionOperators {
  OperatorMatrix sigma_x;
  OperatorMatrix raising;
  OperatorMatrix lowering;
};

/// qubit is 1 or 2. Throws std::invalid_argument if k == l or the qubit is
/// not 1 or 2.
TransitionOperators transition_op(const SpaceDescriptor& space, int qubit, Level k, Level l);

/// Single-qutrit |row><col|.
Matrix qutrit_outer(Level row, Level col);

/// Kronecker embedding of a local operator into one slot, consistent with
/// basis_index ordering. Throws std::invalid_argument on dimension mismatch.
OperatorMatrix embed(const Matrix& local_op, Slot slot, const SpaceDescriptor& space);

/// <x|y>, conjugate-linear in x.
Complex inner_product(const StateVector& x, const StateVector& y);

}  // namespace uscgate
