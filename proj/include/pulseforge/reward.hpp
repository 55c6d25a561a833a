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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pulseforge/linalg.hpp"
#include "pulseforge/observation.hpp"

namespace pulseforge {

/// How an episodic reward is assembled: which preparations to test, how many
/// times the candidate gate is repeated per fidelity circuit, and the weight
/// of each repetition count. Heavier repetitions amplify coherent error above
/// the SPAM floor.
struct RewardSpec {
  std::vector<std::string> initial_states;
  std::vector<int> repetitions;
  std::vector<double> weights;
  int shots_final = 1024;
  int shots_intermediate = 256;

  void validate() const {
    if (initial_states.empty())
      throw std::invalid_argument("reward spec: no initial states");
    if (repetitions.empty() || repetitions.size() != weights.size())
      throw std::invalid_argument(
          "reward spec: repetitions and weights must be equal-length and nonempty");
    double sum = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("reward spec: negative weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("reward spec: weights must sum to 1");
    for (int r : repetitions)
      if (r < 1) throw std::invalid_argument("reward spec: repetitions must be >= 1");
    if (shots_final < 1 || shots_intermediate < 1)
      throw std::invalid_argument("reward spec: shots must be >= 1");
  }
};

inline RewardSpec reward_spec_from_json(const nlohmann::json& j) {
  RewardSpec spec;
  spec.initial_states = j.at("initial_states").get<std::vector<std::string>>();
  spec.repetitions = j.at("repetitions").get<std::vector<int>>();
  spec.weights = j.at("weights").get<std::vector<double>>();
  spec.shots_final = j.value("shots_final", 1024);
  spec.shots_intermediate = j.value("shots_intermediate", 256);
  spec.validate();
  return spec;
}

inline nlohmann::json reward_spec_to_json(const RewardSpec& s) {
  return {{"initial_states", s.initial_states},
          {"repetitions", s.repetitions},
          {"weights", s.weights},
          {"shots_final", s.shots_final},
          {"shots_intermediate", s.shots_intermediate}};
}

/// 1 - |Tr(U^+ T)|^2 / D^2, invariant under a global phase of either
/// argument. Also accepts the computational-subspace block of a leaky
/// propagator, in which case the lost norm shows up as infidelity.
inline double gate_infidelity(const Operator& u, const Operator& target) {
  if (u.rows() != target.rows() || u.cols() != target.cols() ||
      u.rows() != u.cols())
    throw std::invalid_argument("gate_infidelity: dimension mismatch");
  const double d = static_cast<double>(u.rows());
  const double overlap = std::norm((u.adjoint() * target).trace());
  return clamp01(1.0 - overlap / (d * d));
}

/// Linear-inversion state reconstruction from Pauli expectations, projected
/// to the nearest physical state by eigenvalue clipping.
inline DensityMatrix reconstruct_state(const Observation& obs) {
  DensityMatrix rho;
  if (obs.qubits == 1) {
    rho = 0.5 * (pauli_i() + obs.x() * pauli_x() + obs.y() * pauli_y() +
                 obs.z() * pauli_z());
  } else {
    rho = 0.25 * Operator::Identity(4, 4);
    for (int k = 0; k < kTwoQubitStrings; ++k) {
      const auto [a, b] = pauli_string_labels(k);
      rho += 0.25 * obs.pauli_string(k) * kron(pauli(a), pauli(b));
    }
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho);
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  const double tr = lam.sum();
  if (tr <= 0.0) {
    return DensityMatrix::Identity(rho.rows(), rho.cols()) /
           static_cast<double>(rho.rows());
  }
  lam /= tr;
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

/// <psi_target| rho |psi_target> of the reconstructed state, clipped to [0, 1].
inline double state_fidelity(const Observation& obs, const StateVector& target) {
  const int dim = obs.qubits == 1 ? 2 : 4;
  if (target.size() != dim)
    throw std::invalid_argument("state_fidelity: target dimension mismatch");
  const DensityMatrix rho = reconstruct_state(obs);
  return clamp01((target.adjoint() * rho * target)(0, 0).real());
}

/// Computational-space fidelity discounted by leakage population:
/// f / (1 + l^2).
inline double leakage_rescale(double f_qubit, double leakage) {
  if (f_qubit < 0.0 || f_qubit > 1.0)
    throw std::invalid_argument("leakage_rescale: fidelity outside [0, 1]");
  if (leakage < 0.0 || leakage > 1.0)
    throw std::invalid_argument("leakage_rescale: leakage outside [0, 1]");
  return f_qubit / (1.0 + leakage * leakage);
}

/// Keys are (initial-state index, repetition count).
using FidelityTable = std::map<std::pair<int, int>, double>;

/// Mean over initial states, then the weighted sum over repetition counts.
inline double episode_reward(const FidelityTable& fidelities,
                             const RewardSpec& spec) {
  spec.validate();
  double reward = 0.0;
  for (std::size_t ri = 0; ri < spec.repetitions.size(); ++ri) {
    double mean = 0.0;
    for (std::size_t si = 0; si < spec.initial_states.size(); ++si) {
      const auto it = fidelities.find({static_cast<int>(si), spec.repetitions[ri]});
      if (it == fidelities.end())
        throw std::invalid_argument("episode_reward: missing (state, repetition) entry");
      mean += it->second;
    }
    mean /= static_cast<double>(spec.initial_states.size());
    reward += spec.weights[ri] * mean;
  }
  return reward;
}

}  // namespace pulseforge
