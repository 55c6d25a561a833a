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

#include <utility>
#include <vector>

#include "pulseforge/linalg.hpp"

namespace pulseforge {

/// One dissipation channel of the master equation: collapse operator L with
/// rate gamma in 1/s.
struct CollapseChannel {
  Operator op;
  double rate = 0.0;
};

/// One piecewise-constant segment: a Hamiltonian held for a duration.
using HamiltonianSegment = std::pair<Operator, double>;

/// exp(-i h dt) through Hermitian eigendecomposition. Dimensions here are
/// tiny (<= 9), so accuracy wins over scaling-and-squaring tricks.
inline Operator propagator(const Operator& h, double dt) {
  if (!is_hermitian(h, 1e-12))
    throw std::invalid_argument("propagator: Hamiltonian is not Hermitian");
  if (!(dt > 0.0)) throw std::invalid_argument("propagator: dt must be > 0");
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const Eigen::VectorXd& lam = es.eigenvalues();
  Eigen::VectorXcd phases(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    phases(k) = std::exp(Cx(0.0, -lam(k) * dt));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Ordered product U = U_N ... U_2 U_1; segment 0 acts first.
inline Operator evolve_pwc_unitary(const std::vector<HamiltonianSegment>& segments) {
  if (segments.empty())
    throw std::invalid_argument("evolve_pwc_unitary: empty segment list");
  Operator u = Operator::Identity(segments.front().first.rows(),
                                  segments.front().first.cols());
  for (const auto& [h, dt] : segments) u = propagator(h, dt) * u;
  return u;
}

namespace detail {

inline DensityMatrix lindblad_rhs(const DensityMatrix& rho, const Operator& h,
                                  const std::vector<CollapseChannel>& channels,
                                  const std::vector<Operator>& ldl) {
  DensityMatrix d = Cx(0, -1) * (h * rho - rho * h);
  for (std::size_t c = 0; c < channels.size(); ++c) {
    const auto& ch = channels[c];
    if (ch.rate == 0.0) continue;
    d += ch.rate * (ch.op * rho * ch.op.adjoint()
                    - 0.5 * (ldl[c] * rho + rho * ldl[c]));
  }
  return d;
}

}  // namespace detail

/// Fixed-step RK4 integration of
///   drho/dt = -i[H, rho] + sum_c gamma_c (L rho L^+ - {L^+L, rho}/2)
/// with `substeps` steps per segment. The output is re-hermitized and trace
/// normalized; a significantly negative eigenvalue aborts with a hint that
/// substeps is too small. At zero rates this reproduces unitary conjugation
/// to better than 1e-8 for well-scaled segments.
inline DensityMatrix evolve_lindblad(const DensityMatrix& rho,
                                     const std::vector<HamiltonianSegment>& segments,
                                     const std::vector<CollapseChannel>& channels,
                                     int substeps = 32) {
  if (substeps < 1) throw std::invalid_argument("evolve_lindblad: substeps < 1");
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("evolve_lindblad: density matrix not square");
  if (!is_hermitian(rho, 1e-8) || std::abs(rho.trace().real() - 1.0) > 1e-8)
    throw std::invalid_argument("evolve_lindblad: invalid density matrix");
  for (const auto& ch : channels) {
    if (ch.rate < 0.0)
      throw std::invalid_argument("evolve_lindblad: negative collapse rate");
    if (ch.op.rows() != rho.rows() || ch.op.cols() != rho.cols())
      throw std::invalid_argument("evolve_lindblad: channel dimension mismatch");
  }
  std::vector<Operator> ldl;
  ldl.reserve(channels.size());
  for (const auto& ch : channels) ldl.push_back(ch.op.adjoint() * ch.op);

  DensityMatrix r = rho;
  for (const auto& [h, dt] : segments) {
    if (!is_hermitian(h, 1e-12))
      throw std::invalid_argument("evolve_lindblad: Hamiltonian is not Hermitian");
    const double step = dt / substeps;
    for (int s = 0; s < substeps; ++s) {
      const DensityMatrix k1 = detail::lindblad_rhs(r, h, channels, ldl);
      const DensityMatrix k2 =
          detail::lindblad_rhs(r + 0.5 * step * k1, h, channels, ldl);
      const DensityMatrix k3 =
          detail::lindblad_rhs(r + 0.5 * step * k2, h, channels, ldl);
      const DensityMatrix k4 =
          detail::lindblad_rhs(r + step * k3, h, channels, ldl);
      r += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }

  r = 0.5 * (r + r.adjoint()).eval();
  const double tr = r.trace().real();
  if (!(tr > 0.0))
    throw std::runtime_error("evolve_lindblad: non-positive trace after integration");
  r /= tr;
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(r);
  if (es.eigenvalues().minCoeff() < -1e-6)
    throw std::runtime_error(
        "evolve_lindblad: state left the physical cone; increase substeps");
  return r;
}

/// Tr(rho obs); the imaginary residue (< 1e-10 for Hermitian inputs) is
/// discarded.
inline double expectation(const DensityMatrix& rho, const Operator& obs) {
  if (rho.rows() != obs.rows() || rho.cols() != obs.cols())
    throw std::invalid_argument("expectation: dimension mismatch");
  if (!is_hermitian(obs, 1e-10))
    throw std::invalid_argument("expectation: observable is not Hermitian");
  return (rho * obs).trace().real();
}

}  // namespace pulseforge
