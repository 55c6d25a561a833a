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

#include <array>
#include <cstdint>
#include <vector>

#include "pulseforge/linalg.hpp"
#include "pulseforge/pulse.hpp"

namespace pulseforge {

// Single-qubit Clifford gates as Z(q_n) X90 ... X90 Z(q_0) with quarter-turn
// Z angles; rightmost factor acts first. The fixed 24-entry table uses 28
// physical X90 pulses in total (7/6 per Clifford); everything else is
// virtual-Z bookkeeping.
namespace clifford1q {

inline constexpr int kCount = 24;

inline constexpr std::int8_t kZQuarterTurns[kCount][3] = {
    {0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {1, 2, 0}, {2, 1, 0}, {2, 0, 0},
    {0, 0, 0}, {1, 3, 0}, {2, 2, 0}, {0, 3, 2}, {3, 0, 0}, {0, 1, 0},
    {0, 0, 0}, {1, 0, 0}, {2, 3, 0}, {0, 3, 3}, {0, 2, 0}, {0, 0, 1},
    {0, 0, 3}, {2, 0, 0}, {0, 3, 0}, {0, 3, 1}, {0, 3, 0}, {0, 0, 2},
};

inline constexpr std::int8_t kPulseCount[kCount] = {
    0, 1, 0, 1, 1, 0, 1, 1, 1, 2, 0, 1,
    2, 1, 1, 2, 1, 2, 2, 1, 2, 2, 1, 2,
};

inline int total_pulses() {
  int n = 0;
  for (int i = 0; i < kCount; ++i) n += kPulseCount[i];
  return n;
}

/// 2x2 matrix of Clifford `index`, built from its Z/X90 decomposition.
inline const Operator& matrix(int index) {
  if (index < 0 || index >= kCount)
    throw std::invalid_argument("clifford1q: index out of range");
  static const std::array<Operator, kCount> mats = [] {
    std::array<Operator, kCount> out;
    const Operator x90 = rx_gate(kPi / 2);
    for (int i = 0; i < kCount; ++i) {
      Operator u = rz_gate(kZQuarterTurns[i][0] * kPi / 2);
      for (int p = 0; p < kPulseCount[i]; ++p)
        u = rz_gate(kZQuarterTurns[i][p + 1] * kPi / 2) * x90 * u;
      out[i] = phase_canonical(u);
    }
    return out;
  }();
  return mats[index];
}

inline int find_index(const Operator& u) {
  for (int i = 0; i < kCount; ++i)
    if (equal_mod_phase(u, matrix(i))) return i;
  return -1;
}

/// product_index(i, j) is the group element of matrix(i) * matrix(j).
inline int product_index(int i, int j) {
  static const std::array<std::array<std::int8_t, kCount>, kCount> table = [] {
    std::array<std::array<std::int8_t, kCount>, kCount> t{};
    for (int a = 0; a < kCount; ++a)
      for (int b = 0; b < kCount; ++b) {
        const int k = find_index(matrix(a) * matrix(b));
        if (k < 0) throw std::logic_error("clifford1q: group not closed");
        t[a][b] = static_cast<std::int8_t>(k);
      }
    return t;
  }();
  return table.at(i).at(j);
}

inline int inverse_index(int i) {
  for (int j = 0; j < kCount; ++j)
    if (product_index(i, j) == 0) return j;
  throw std::logic_error("clifford1q: no inverse found");
}

}  // namespace clifford1q

/// A Clifford lowered to hardware terms: phases for its physical X90 pulses
/// (already folded with the incoming virtual frame) plus the updated frame.
struct CompiledClifford {
  std::vector<double> pulse_phases;
  VirtualFrame frame;
};

/// Compiles Clifford `index` against an accumulated virtual-Z frame. Each
/// physical pulse is an X90 played at the returned phase; Z rotations only
/// advance the frame.
inline CompiledClifford compile_clifford(int index, const VirtualFrame& frame,
                                         int qubit = 0) {
  if (index < 0 || index >= clifford1q::kCount)
    throw std::invalid_argument("compile_clifford: index out of range");
  CompiledClifford out;
  out.frame = frame;
  double phi = frame.phase.at(qubit);
  const auto& zq = clifford1q::kZQuarterTurns[index];
  const int pulses = clifford1q::kPulseCount[index];
  for (int p = 0; p <= pulses; ++p) {
    phi += zq[p] * kPi / 2;
    if (p < pulses) out.pulse_phases.push_back(wrap_phase(-phi));
  }
  out.frame.phase.at(qubit) = wrap_phase(phi);
  return out;
}

}  // namespace pulseforge
