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

#include "uscgate/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uscgate {
namespace {

int level_index(Level level) {
  const int idx = static_cast<int>(level);
  if (idx < 0 || idx >= kQubitLevels) {
    throw std::out_of_range("qubit level out of range: " + std::to_string(idx));
  }
  return idx;
}

void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": space mismatch (fock_dim " +
                                std::to_string(a.fock_dim()) + " vs " +
                                std::to_string(b.fock_dim()) + ")");
  }
}

}  // namespace

char level_name(Level level) {
  switch (level) {
    case Level::g: return 'g';
    case Level::e: return 'e';
    case Level::a: return 'a';
  }
  return '?';
}

SpaceDescriptor::SpaceDescriptor(int fock_dim) : fock_dim_(fock_dim) {
  if (fock_dim < 2) {
    throw std::invalid_argument("fock_dim must be >= 2, got " + std::to_string(fock_dim));
  }
}

int SpaceDescriptor::slot_dim(Slot slot) const {
  return slot == Slot::mode ? fock_dim_ : kQubitLevels;
}

int SpaceDescriptor::basis_index(Level q1, Level q2, int n) const {
  const int i1 = level_index(q1);
  const int i2 = level_index(q2);
  if (n < 0 || n >= fock_dim_) {
    throw std::out_of_range("photon number " + std::to_string(n) + " outside 0.." +
                            std::to_string(fock_dim_ - 1));
  }
  return (i1 * kQubitLevels + i2) * fock_dim_ + n;
}

SpaceDescriptor::Label SpaceDescriptor::label(int index) const {
  if (index < 0 || index >= total_dim()) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
  }
  const int n = index % fock_dim_;
  const int rest = index / fock_dim_;
  return {static_cast<Level>(rest / kQubitLevels), static_cast<Level>(rest % kQubitLevels), n};
}

StateVector::StateVector(SpaceDescriptor space, Vector amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.total_dim()) {
    throw std::invalid_argument("state length " + std::to_string(amplitudes_.size()) +
                                " does not match total_dim " +
                                std::to_string(space_.total_dim()));
  }
}

StateVector StateVector::zero(const SpaceDescriptor& space) {
  return StateVector(space, Vector::Zero(space.total_dim()));
}

StateVector StateVector::basis(const SpaceDescriptor& space, Level q1, Level q2, int n) {
  StateVector psi = zero(space);
  psi.amplitudes_(space.basis_index(q1, q2, n)) = 1.0;
  return psi;
}

Complex StateVector::amplitude(Level q1, Level q2, int n) const {
  return amplitudes_(space_.basis_index(q1, q2, n));
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  return StateVector(space_, amplitudes_ / nrm);
}

OperatorMatrix::OperatorMatrix(SpaceDescriptor space, Matrix entries)
    : space_(space), entries_(std::move(entries)) {
  const int dim = space_.total_dim();
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw std::invalid_argument("operator shape does not match total_dim " +
                                std::to_string(dim));
  }
}

OperatorMatrix OperatorMatrix::zero(const SpaceDescriptor& space) {
  return OperatorMatrix(space, Matrix::Zero(space.total_dim(), space.total_dim()));
}

OperatorMatrix OperatorMatrix::identity(const SpaceDescriptor& space) {
  return OperatorMatrix(space, Matrix::Identity(space.total_dim(), space.total_dim()));
}

bool OperatorMatrix::is_hermitian(double rel_tol) const {
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  return asym <= rel_tol * scale;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(space_, entries_.adjoint());
}

StateVector OperatorMatrix::apply(const StateVector& psi) const {
  require_same_space(space_, psi.space(), "apply");
  return StateVector(space_, entries_ * psi.amplitudes());
}

SparseMatrix OperatorMatrix::sparse(double prune_below) const {
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
    for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
      const Complex v = entries_(r, c);
      if (std::abs(v) > prune_below) triplets.emplace_back(r, c, v);
    }
  }
  SparseMatrix out(entries_.rows(), entries_.cols());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  require_same_space(space_, other.space_, "operator+");
  entries_ += other.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  require_same_space(space_, other.space_, "operator-");
  entries_ -= other.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scale) {
  entries_ *= scale;
  return *this;
}

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_space(lhs.space(), rhs.space(), "operator*");
  return OperatorMatrix(lhs.space(), lhs.matrix() * rhs.matrix());
}

OperatorMatrix operator*(Complex scale, OperatorMatrix op) { return op *= scale; }

OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  return lhs * rhs - rhs * lhs;
}

OperatorMatrix annihilation_op(const SpaceDescriptor& space) {
  const int n = space.fock_dim();
  Matrix local = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) local(k - 1, k) = std::sqrt(static_cast<double>(k));
  return embed(local, Slot::mode, space);
}

OperatorMatrix creation_op(const SpaceDescriptor& space) {
  return annihilation_op(space).adjoint();
}

OperatorMatrix number_op(const SpaceDescriptor& space) {
  const int n = space.fock_dim();
  Matrix local = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) local(k, k) = static_cast<double>(k);
  return embed(local, Slot::mode, space);
}

Matrix qutrit_outer(Level row, Level col) {
  Matrix m = Matrix::Zero(kQubitLevels, kQubitLevels);
  m(level_index(row), level_index(col)) = 1.0;
  return m;
}

TransitionOperators transition_op(const SpaceDescriptor& space, int qubit, Level k, Level l) {
  if (qubit != 1 && qubit != 2) {
    throw std::invalid_argument("qubit must be 1 or 2, got " + std::to_string(qubit));
  }
  if (k == l) {
    throw std::invalid_argument("transition_op needs two distinct levels");
  }
  const Slot slot = qubit == 1 ? Slot::qubit1 : Slot::qubit2;
  OperatorMatrix raising = embed(qutrit_outer(l, k), slot, space);
  OperatorMatrix lowering = embed(qutrit_outer(k, l), slot, space);
  OperatorMatrix sigma_x = raising + lowering;
  return {std::move(sigma_x), std::move(raising), std::move(lowering)};
}

OperatorMatrix embed(const Matrix& local_op, Slot slot, const SpaceDescriptor& space) {
  const int d = space.slot_dim(slot);
  if (local_op.rows() != d || local_op.cols() != d) {
    throw std::invalid_argument("embed: local operator is " + std::to_string(local_op.rows()) +
                                "x" + std::to_string(local_op.cols()) + ", slot expects " +
                                std::to_string(d));
  }
  const int dim = space.total_dim();
  const int n = space.fock_dim();
  // Strides of the (q1, q2, n) layout.
  const int stride = slot == Slot::qubit1 ? kQubitLevels * n : (slot == Slot::qubit2 ? n : 1);
  Matrix out = Matrix::Zero(dim, dim);
  for (int base = 0; base < dim; ++base) {
    const int digit = (base / stride) % d;
    if (digit != 0) continue;
    // base enumerates every configuration of the other slots.
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        const Complex v = local_op(r, c);
        if (v != Complex{}) out(base + r * stride, base + c * stride) = v;
      }
    }
  }
  return OperatorMatrix(space, std::move(out));
}

Complex inner_product(const StateVector& x, const StateVector& y) {
  require_same_space(x.space(), y.space(), "inner_product");
  return x.amplitudes().dot(y.amplitudes());
}

}  // namespace uscgate
