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

#include "uscgate/hilbert.hpp"

namespace uscgate {

struct GateScore {
  double fidelity = 0.0;
  double leakage = 0.0;
  double photon_tail = 0.0;  // population in Fock levels n >= 2
};

/// |<reference|actual>|^2. Throws std::invalid_argument on a space mismatch.
double fidelity(const StateVector& reference, const StateVector& actual);

/// Population of span{|g1 g2>, |g1 e2>, |e1 g2>, |e1 e2>} (x) |0>.
double computational_population(const StateVector& state);

/// 1 - computational_population, clamped to [0, 1].
double leakage(const StateVector& state);

double photon_tail(const StateVector& state);

GateScore score(const StateVector& reference, const StateVector& actual);

}  // namespace uscgate
