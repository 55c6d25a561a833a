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

#include "pulseforge/common.hpp"

namespace pulseforge {

// Dense complex matrices throughout; Hilbert dimensions never exceed 9
// (two coupled 3-level transmons).
using Operator = Eigen::MatrixXcd;
using DensityMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline bool is_hermitian(const Operator& m, double tol = 1e-12) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unitary(const Operator& m, double tol = 1e-10) {
  if (m.rows() != m.cols()) return false;
  const Operator g = m.adjoint() * m;
  return (g - Operator::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

inline Operator dagger(const Operator& m) { return m.adjoint(); }

inline Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline Operator pauli_i() { return Operator::Identity(2, 2); }

inline Operator pauli_x() {
  Operator m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Operator pauli_y() {
  Operator m(2, 2);
  m << 0, Cx(0, -1), Cx(0, 1), 0;
  return m;
}

inline Operator pauli_z() {
  Operator m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Operator pauli(int k) {
  switch (k) {
    case 0: return pauli_i();
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw std::invalid_argument("pauli: index out of range");
  }
}

/// exp(-i theta sigma_x / 2)
inline Operator rx_gate(double theta) {
  Operator m(2, 2);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, Cx(0, -s), Cx(0, -s), c;
  return m;
}

inline Operator ry_gate(double theta) {
  Operator m(2, 2);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

inline Operator rz_gate(double theta) {
  Operator m(2, 2);
  m << std::exp(Cx(0, -theta / 2)), 0, 0, std::exp(Cx(0, theta / 2));
  return m;
}

inline Operator hadamard() {
  Operator m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

inline Operator s_gate() {
  Operator m(2, 2);
  m << 1, 0, 0, kI;
  return m;
}

/// Annihilation operator on an n-level ladder.
inline Operator lowering(int levels) {
  Operator a = Operator::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

inline Operator number_op(int levels) {
  Operator n = Operator::Zero(levels, levels);
  for (int k = 0; k < levels; ++k) n(k, k) = double(k);
  return n;
}

inline StateVector basis_state(int dim, int k) {
  StateVector v = StateVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

/// True when a == e^{i phi} b for some phi.
inline bool equal_mod_phase(const Operator& a, const Operator& b,
                            double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index pi = 0, pj = 0;
  double best = 0.0;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (std::abs(b(i, j)) > best) { best = std::abs(b(i, j)); pi = i; pj = j; }
  if (best < tol) return a.cwiseAbs().maxCoeff() < tol;
  if (std::abs(a(pi, pj)) < tol) return false;
  const Cx phase = a(pi, pj) / b(pi, pj);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

/// Normalizes the overall phase so the largest-magnitude entry is real
/// positive; makes Clifford matrices directly comparable.
inline Operator phase_canonical(const Operator& m, double tol = 1e-12) {
  Eigen::Index pi = 0, pj = 0;
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > best) { best = std::abs(m(i, j)); pi = i; pj = j; }
  if (best < tol) return m;
  return m * (std::abs(m(pi, pj)) / m(pi, pj));
}

inline Operator matrix_power(const Operator& m, int n) {
  if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
  Operator acc = Operator::Identity(m.rows(), m.cols());
  Operator base = m;
  int k = n;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace pulseforge
