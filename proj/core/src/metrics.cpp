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

#include "uscgate/metrics.hpp"

#include <algorithm>
#include <complex>

namespace uscgate {

double fidelity(const StateVector& reference, const StateVector& actual) {
  return std::norm(inner_product(reference, actual));
}

double computational_population(const StateVector& state) {
  const SpaceDescriptor& space = state.space();
  double total = 0.0;
  for (Level q1 : {Level::g, Level::e}) {
    for (Level q2 : {Level::g, Level::e}) {
      total += std::norm(state.amplitudes()(space.basis_index(q1, q2, 0)));
    }
  }
  return total;
}

double leakage(const StateVector& state) {
  return std::clamp(1.0 - computational_population(state), 0.0, 1.0);
}

double photon_tail(const StateVector& state) {
  const SpaceDescriptor& space = state.space();
  double total = 0.0;
  for (int i = 0; i < space.total_dim(); ++i) {
    if (space.label(i).n >= 2) total += std::norm(state.amplitudes()(i));
  }
  return total;
}

GateScore score(const StateVector& reference, const StateVector& actual) {
  return {fidelity(reference, actual), leakage(actual), photon_tail(actual)};
}

}  // namespace uscgate
