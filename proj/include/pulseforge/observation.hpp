// Copyright 2026 The Pulseforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "pulseforge/linalg.hpp"

namespace pulseforge {

/// Canonical two-qubit Pauli-string order: (a, b) over {I, X, Y, Z} x
/// {I, X, Y, Z} row-major with II skipped -> IX, IY, IZ, XI, XX, ..., ZZ.
inline constexpr int kTwoQubitStrings = 15;

inline std::pair<int, int> pauli_string_labels(int k) {
  if (k < 0 || k >= kTwoQubitStrings)
    throw std::invalid_argument("pauli_string_labels: index out of range");
  const int flat = k + 1;  // skip II
  return {flat / 4, flat % 4};
}

/// The measured system state fed to the agent.
///   1 qubit : values = (<X>, <Y>, <Z>, leakage)                -> dim 4
///   2 qubits: values = 15 Pauli strings + 2 leakages           -> dim 17
struct Observation {
  int qubits = 1;
  Eigen::VectorXd values;

  static int dim_for(int qubits) { return qubits == 1 ? 4 : 17; }

  double x() const { return values(0); }
  double y() const { return values(1); }
  double z() const { return values(2); }

  double pauli_string(int k) const { return values(k); }

  double leakage(int qubit = 0) const {
    return qubits == 1 ? values(3) : values(kTwoQubitStrings + qubit);
  }
};

/// Exact expectations of a known pure computational-space state (2 or 4 dim);
/// leakage entries are zero. Used for the pre-pulse observation s_0, where
/// the prepared state is known by construction.
inline Observation observation_of_state(const StateVector& psi) {
  Observation obs;
  if (psi.size() == 2) {
    obs.qubits = 1;
    obs.values.resize(4);
    const Operator rho = psi * psi.adjoint();
    obs.values(0) = (rho * pauli_x()).trace().real();
    obs.values(1) = (rho * pauli_y()).trace().real();
    obs.values(2) = (rho * pauli_z()).trace().real();
    obs.values(3) = 0.0;
  } else if (psi.size() == 4) {
    obs.qubits = 2;
    obs.values.resize(17);
    const Operator rho = psi * psi.adjoint();
    for (int k = 0; k < kTwoQubitStrings; ++k) {
      const auto [a, b] = pauli_string_labels(k);
      obs.values(k) = (rho * kron(pauli(a), pauli(b))).trace().real();
    }
    obs.values(15) = 0.0;
    obs.values(16) = 0.0;
  } else {
    throw std::invalid_argument("observation_of_state: state must be 2 or 4 dim");
  }
  return obs;
}

}  // namespace pulseforge
