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

#include <cmath>
#include <random>
#include <set>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "oracles.hpp"

namespace uscgate {
namespace {

constexpr Level kLevels[] = {Level::g, Level::e, Level::a};

TEST(SpaceDescriptor, Dimensions) {
  SpaceDescriptor space(10);
  EXPECT_EQ(space.total_dim(), 90);
  EXPECT_EQ(space.slot_dim(Slot::qubit1), 3);
  EXPECT_EQ(space.slot_dim(Slot::mode), 10);
  EXPECT_THROW(SpaceDescriptor(1), std::invalid_argument);
}

TEST(SpaceDescriptor, BasisIndexExamples) {
  SpaceDescriptor space(10);
  EXPECT_EQ(space.basis_index(Level::g, Level::g, 0), 0);
  EXPECT_EQ(space.basis_index(Level::g, Level::g, 1), 1);
  EXPECT_EQ(space.basis_index(Level::e, Level::g, 0), 1 * 3 * 10 + 0 * 10 + 0);
}

TEST(SpaceDescriptor, BasisIndexRejectsOutOfRange) {
  SpaceDescriptor space(4);
  EXPECT_THROW(space.basis_index(Level::g, Level::g, 4), std::out_of_range);
  EXPECT_THROW(space.basis_index(Level::g, Level::g, -1), std::out_of_range);
  EXPECT_THROW(space.basis_index(static_cast<Level>(3), Level::g, 0), std::out_of_range);
  EXPECT_THROW(space.label(36), std::out_of_range);
}

TEST(SpaceDescriptor, BasisIndexIsBijectiveUpTo32) {
  for (int n = 2; n <= 32; ++n) {
    SpaceDescriptor space(n);
    std::set<int> seen;
    for (Level q1 : kLevels) {
      for (Level q2 : kLevels) {
        for (int k = 0; k < n; ++k) {
          const int idx = space.basis_index(q1, q2, k);
          ASSERT_GE(idx, 0);
          ASSERT_LT(idx, space.total_dim());
          ASSERT_TRUE(seen.insert(idx).second);
          const auto lbl = space.label(idx);
          ASSERT_EQ(lbl.q1, q1);
          ASSERT_EQ(lbl.q2, q2);
          ASSERT_EQ(lbl.n, k);
        }
      }
    }
    ASSERT_EQ(static_cast<int>(seen.size()), space.total_dim());
  }
}

TEST(AnnihilationOp, LadderAction) {
  SpaceDescriptor space(6);
  const OperatorMatrix a = annihilation_op(space);
  const StateVector vac = StateVector::basis(space, Level::e, Level::g, 0);
  EXPECT_LT(a.apply(vac).norm(), 1e-15);
  const StateVector two = StateVector::basis(space, Level::e, Level::g, 2);
  const StateVector out = a.apply(two);
  EXPECT_NEAR(std::abs(out.amplitude(Level::e, Level::g, 1) - std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(out.norm(), std::sqrt(2.0), 1e-15);
}

TEST(AnnihilationOp, OnlyFirstSubdiagonalOfFockFactor) {
  SpaceDescriptor space(7);
  const Matrix& a = annihilation_op(space).matrix();
  for (int r = 0; r < space.total_dim(); ++r) {
    for (int c = 0; c < space.total_dim(); ++c) {
      const auto lr = space.label(r);
      const auto lc = space.label(c);
      const bool allowed = lr.q1 == lc.q1 && lr.q2 == lc.q2 && lr.n + 1 == lc.n;
      if (allowed) {
        EXPECT_NEAR(std::abs(a(r, c) - std::sqrt(double(lc.n))), 0.0, 1e-15);
      } else {
        EXPECT_EQ(a(r, c), Complex{});
      }
    }
  }
}

TEST(AnnihilationOp, CanonicalCommutatorBelowTruncation) {
  SpaceDescriptor space(8);
  const OperatorMatrix a = annihilation_op(space);
  const Matrix comm = commutator(a, creation_op(space)).matrix();
  for (int i = 0; i < space.total_dim(); ++i) {
    for (int j = 0; j < space.total_dim(); ++j) {
      if (space.label(i).n == 7 || space.label(j).n == 7) continue;
      EXPECT_NEAR(std::abs(comm(i, j) - (i == j ? 1.0 : 0.0)), 0.0, 1e-12);
    }
  }
  // The top level carries the truncation defect [a, a^dag]|N-1> = -(N-1)|N-1>.
  const int top = space.basis_index(Level::g, Level::g, 7);
  EXPECT_NEAR(comm(top, top).real(), -7.0, 1e-12);
}

TEST(TransitionOp, SigmaXMovesGroundToExcited) {
  SpaceDescriptor space(3);
  const TransitionOperators s = transition_op(space, 2, Level::g, Level::e);
  const StateVector out = s.sigma_x.apply(StateVector::basis(space, Level::a, Level::g, 1));
  EXPECT_NEAR(std::abs(out.amplitude(Level::a, Level::e, 1) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(out.norm(), 1.0, 1e-15);
  EXPECT_TRUE(s.sigma_x.is_hermitian());
  EXPECT_TRUE((s.raising.adjoint() - s.lowering).matrix().isZero());
}

TEST(TransitionOp, AnticommutatorIsIdentityOnTheDoublet) {
  SpaceDescriptor space(3);
  const TransitionOperators s = transition_op(space, 1, Level::e, Level::a);
  const Matrix anti = (s.raising * s.lowering + s.lowering * s.raising).matrix();
  for (int i = 0; i < space.total_dim(); ++i) {
    const Level q1 = space.label(i).q1;
    const double expected = (q1 == Level::e || q1 == Level::a) ? 1.0 : 0.0;
    EXPECT_NEAR(std::abs(anti(i, i) - expected), 0.0, 1e-15);
  }
  EXPECT_NEAR((anti - Matrix(anti.diagonal().asDiagonal())).norm(), 0.0, 1e-15);
}

TEST(TransitionOp, RejectsEqualLevelsAndBadQubit) {
  SpaceDescriptor space(3);
  EXPECT_THROW(transition_op(space, 1, Level::e, Level::e), std::invalid_argument);
  EXPECT_THROW(transition_op(space, 3, Level::g, Level::e), std::invalid_argument);
}

TEST(Embed, MatchesNaiveKroneckerProduct) {
  SpaceDescriptor space(4);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  auto random = [&](int d) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = {nd(rng), nd(rng)};
    return m;
  };
  const Matrix a = random(3);
  const Matrix b = random(4);
  const Matrix i3 = Matrix::Identity(3, 3);
  const Matrix i4 = Matrix::Identity(4, 4);
  EXPECT_NEAR((embed(a, Slot::qubit1, space).matrix() - oracle::kron3(a, i3, i4)).norm(), 0, 1e-14);
  EXPECT_NEAR((embed(a, Slot::qubit2, space).matrix() - oracle::kron3(i3, a, i4)).norm(), 0, 1e-14);
  EXPECT_NEAR((embed(b, Slot::mode, space).matrix() - oracle::kron3(i3, i3, b)).norm(), 0, 1e-14);
}

TEST(Embed, IdentityCommutationAndTrace) {
  SpaceDescriptor space(5);
  EXPECT_TRUE(embed(Matrix::Identity(3, 3), Slot::qubit2, space).matrix().isIdentity());

  Matrix a(3, 3);
  a << 1, 2, 0, Complex(0, 1), 4, 5, 0, 0, Complex(-2, 1);
  Matrix b = Matrix::Random(5, 5);
  const OperatorMatrix ea = embed(a, Slot::qubit1, space);
  const OperatorMatrix eb = embed(b, Slot::mode, space);
  EXPECT_NEAR(commutator(ea, eb).matrix().norm(), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(ea.matrix().trace() - a.trace() * 3.0 * 5.0), 0.0, 1e-12);
}

TEST(Embed, PreservesHermiticityAndSpectrum) {
  SpaceDescriptor space(4);
  Matrix h(3, 3);
  h << 1.0, Complex(0.5, -0.2), 0.3, Complex(0.5, 0.2), -2.0, Complex(0, 1), 0.3, Complex(0, -1), 0.7;
  const OperatorMatrix e = embed(h, Slot::qubit2, space);
  EXPECT_TRUE(e.is_hermitian());
  const Eigen::VectorXd local = Eigen::SelfAdjointEigenSolver<Matrix>(h).eigenvalues();
  const Eigen::VectorXd full = Eigen::SelfAdjointEigenSolver<Matrix>(e.matrix()).eigenvalues();
  const int mult = space.total_dim() / 3;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < mult; ++k) EXPECT_NEAR(full(i * mult + k), local(i), 1e-12);
  }
}

TEST(Embed, RejectsDimensionMismatch) {
  SpaceDescriptor space(4);
  EXPECT_THROW(embed(Matrix::Identity(4, 4), Slot::qubit1, space), std::invalid_argument);
  EXPECT_THROW(embed(Matrix::Identity(3, 3), Slot::mode, space), std::invalid_argument);
}

TEST(InnerProduct, Examples) {
  SpaceDescriptor space(3);
  const StateVector b0 = StateVector::basis(space, Level::g, Level::g, 0);
  const StateVector b1 = StateVector::basis(space, Level::g, Level::g, 1);
  EXPECT_NEAR(std::abs(inner_product(b0, b0) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(inner_product(b0, b1), Complex{});
  StateVector plus(space, (b0.amplitudes() + b1.amplitudes()) / std::sqrt(2.0));
  StateVector minus(space, (b0.amplitudes() - b1.amplitudes()) / std::sqrt(2.0));
  EXPECT_NEAR(std::abs(inner_product(plus, minus)), 0.0, 1e-15);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
  SpaceDescriptor space(3);
  const StateVector b0 = StateVector::basis(space, Level::e, Level::g, 2);
  StateVector scaled(space, Complex(0, 1) * b0.amplitudes());
  EXPECT_NEAR(std::abs(inner_product(scaled, b0) - Complex(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(b0, scaled) - Complex(0, 1)), 0.0, 1e-15);
}

TEST(InnerProduct, CauchySchwarzOnRandomStates) {
  SpaceDescriptor space(4);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 50; ++trial) {
    Vector x(space.total_dim()), y(space.total_dim());
    for (int i = 0; i < space.total_dim(); ++i) {
      x(i) = {nd(rng), nd(rng)};
      y(i) = {nd(rng), nd(rng)};
    }
    const StateVector sx(space, x), sy(space, y);
    EXPECT_LE(std::abs(inner_product(sx, sy)), sx.norm() * sy.norm() * (1 + 1e-14));
  }
}

TEST(InnerProduct, SpaceMismatchThrows) {
  EXPECT_THROW(inner_product(StateVector::zero(SpaceDescriptor(3)),
                             StateVector::zero(SpaceDescriptor(4))),
               std::invalid_argument);
}

}  // namespace
}  // namespace uscgate
