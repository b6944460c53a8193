// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "dicke/error.hpp"
#include "dicke/gate_spec.hpp"
#include "dicke/noise.hpp"
#include "dicke/parallel.hpp"
#include "dicke/spin_ops.hpp"
#include "dicke/state.hpp"

namespace dicke {

/// Generator G of a gate on one spin-j block; the gate is exp(-i theta G).
///
///   RX, RY, RZ         J_a
///   RN(theta, phi)     -(J_x sin phi - J_y cos phi)
///   R_PLUS, R_MINUS    J_+, J_-  (non-Hermitian)
///   RX2, RY2, RZ2      J_a^2
///   OAT(a)             J_a^2
///   TAT(ab)            J_a^2 - J_b^2
///   TNT(ab, Lambda)    J_a^2 - (N / Lambda) J_b
///   GMS(theta, phi)    (J_x cos phi + J_y sin phi)^2
template <typename Real = double>
ComplexMatrix<Real> block_generator(const GateSpec& spec, HalfInt j, int n_particles) {
  auto s = [&](SpinComponent c) { return spin_matrix<Real>(c, j); };
  switch (spec.kind) {
    case GateKind::RX: return s(SpinComponent::X);
    case GateKind::RY: return s(SpinComponent::Y);
    case GateKind::RZ: return s(SpinComponent::Z);
    case GateKind::RN: {
      const Real phi = spec.params.at(1);
      return -(std::sin(phi) * s(SpinComponent::X) - std::cos(phi) * s(SpinComponent::Y));
    }
    case GateKind::R_PLUS: return s(SpinComponent::Plus);
    case GateKind::R_MINUS: return s(SpinComponent::Minus);
    case GateKind::RX2: { auto a = s(SpinComponent::X); return a * a; }
    case GateKind::RY2: { auto a = s(SpinComponent::Y); return a * a; }
    case GateKind::RZ2: { auto a = s(SpinComponent::Z); return a * a; }
    case GateKind::OAT: {
      auto a = s(parse_axes(spec.axes.value()).at(0));
      return a * a;
    }
    case GateKind::TAT: {
      const auto ax = parse_axes(spec.axes.value());
      auto a = s(ax.at(0));
      auto b = s(ax.at(1));
      return a * a - b * b;
    }
    case GateKind::TNT: {
      const Real lambda = spec.params.at(1);
      if (lambda == Real(0)) throw DomainError("TNT: Lambda must be nonzero");
      const auto ax = parse_axes(spec.axes.value());
      auto a = s(ax.at(0));
      return a * a - (Real(n_particles) / lambda) * s(ax.at(1));
    }
    case GateKind::GMS: {
      const Real phi = spec.params.at(1);
      ComplexMatrix<Real> a = std::cos(phi) * s(SpinComponent::X) + std::sin(phi) * s(SpinComponent::Y);
      return a * a;
    }
  }
  throw DomainError("unknown gate kind");
}

/// True when the generator of the gate is Hermitian for every block.
inline bool is_unitary_gate(const GateSpec& spec) {
  if (spec.kind == GateKind::R_PLUS || spec.kind == GateKind::R_MINUS) return false;
  if (spec.axes) {
    for (SpinComponent c : parse_axes(*spec.axes))
      if (!is_hermitian_component(c)) return false;
  }
  return true;
}

/// Collective generator and rotation angle of a gate.
template <typename Real = double>
std::pair<CollectiveOperator<Real>, Real> generator(const GateSpec& spec, const LedgerPtr& ledger) {
  spec.validate();
  std::vector<ComplexMatrix<Real>> blocks;
  blocks.reserve(ledger->size());
  for (const auto& blk : ledger->blocks())
    blocks.push_back(block_generator<Real>(spec, blk.j, ledger->n_particles()));
  return {CollectiveOperator<Real>(ledger, std::move(blocks), is_unitary_gate(spec)),
          Real(spec.angle())};
}

namespace detail {

template <typename Real>
bool is_diagonal(const ComplexMatrix<Real>& g) {
  for (Eigen::Index c = 0; c < g.cols(); ++c)
    for (Eigen::Index r = 0; r < g.rows(); ++r)
      if (r != c && g(r, c) != std::complex<Real>(0)) return false;
  return true;
}

/// exp(-i angle G) for one block. Hermitian generators go through an
/// eigendecomposition (real-symmetric when G has no imaginary part); other
/// generators use a Pade matrix exponential.
template <typename Real>
ComplexMatrix<Real> exp_block(const ComplexMatrix<Real>& g, Real angle, bool hermitian) {
  using Complex = std::complex<Real>;
  using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index d = g.rows();
  const Complex minus_i(0, -1);
  if (d == 0) return g;
  if (!hermitian) {
    const ComplexMatrix<Real> a = (minus_i * angle) * g;
    ComplexMatrix<Real> k = a.exp();
    if (!k.allFinite()) throw NumericError("matrix exponential overflowed");
    return k;
  }
  if (is_diagonal(g)) {
    ComplexMatrix<Real> k = ComplexMatrix<Real>::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) k(i, i) = std::exp(minus_i * angle * g(i, i).real());
    return k;
  }
  if (g.imag().cwiseAbs().maxCoeff() == Real(0)) {
    const RealMatrix gr = g.real();
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(gr);
    if (es.info() != Eigen::Success) throw NumericError("eigensolver failed on a gate generator");
    ComplexVector<Real> phase(d);
    for (Eigen::Index i = 0; i < d; ++i) phase(i) = std::exp(minus_i * angle * es.eigenvalues()(i));
    const ComplexMatrix<Real> v = es.eigenvectors().template cast<Complex>();
    return v * phase.asDiagonal() * v.transpose();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(g);
  if (es.info() != Eigen::Success) throw NumericError("eigensolver failed on a gate generator");
  ComplexVector<Real> phase(d);
  for (Eigen::Index i = 0; i < d; ++i) phase(i) = std::exp(minus_i * angle * es.eigenvalues()(i));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

/// Blockwise exp(-i angle G).
template <typename Real>
std::vector<ComplexMatrix<Real>> exponentiate(const CollectiveOperator<Real>& g, Real angle) {
  std::vector<ComplexMatrix<Real>> out(g.size());
  parallel_for(g.size(), [&](std::size_t b) {
    out[b] = detail::exp_block<Real>(g.block(b), angle, g.hermitian());
  });
  return out;
}

/// rho -> K rho K^dagger on every active block, with K = exp(-i theta G).
///
/// Non-unitary gates renormalize by the total trace and mark the state as
/// conditioned. A gate with noise eps is followed by depolarize(., eps).
template <typename Real>
[[nodiscard]] CollectiveState<Real> apply_gate(const CollectiveState<Real>& state, const GateSpec& spec) {
  spec.validate();
  const auto& ledger = state.ledger();
  const bool unitary = is_unitary_gate(spec);
  const Real angle = Real(spec.angle());
  const auto active = state.active_blocks();

  std::vector<std::optional<ComplexMatrix<Real>>> blocks(state.size());
  parallel_for(active.size(), [&](std::size_t i) {
    const std::size_t b = active[i];
    const auto g = block_generator<Real>(spec, ledger[b].j, ledger.n_particles());
    const auto k = detail::exp_block<Real>(g, angle, unitary);
    blocks[b] = k * state.block(b) * k.adjoint();
  });

  bool conditioned = state.conditioned();
  if (!unitary) {
    std::complex<Real> tr(0);
    for (const auto& blk : blocks)
      if (blk) tr += blk->trace();
    if (!std::isfinite(tr.real()) || !(tr.real() > 0)) {
      throw NumericError(std::string(to_string(spec.kind)) +
                         ": state annihilated, cannot renormalize");
    }
    for (auto& blk : blocks)
      if (blk) *blk /= tr.real();
    conditioned = true;
  }

  CollectiveState<Real> out(state.ledger_ptr(), std::move(blocks), conditioned);
  if (spec.noise && *spec.noise > 0) return depolarize(out, Real(*spec.noise));
  return out;
}

/// Applies the instructions in order. The state must belong to circuit.n_particles.
template <typename Real>
[[nodiscard]] CollectiveState<Real> apply_circuit(CollectiveState<Real> state, const Circuit& circuit) {
  if (state.n_particles() != circuit.n_particles) {
    throw DomainError("circuit is for N=" + std::to_string(circuit.n_particles) +
                      " but the state has N=" + std::to_string(state.n_particles()));
  }
  for (const auto& g : circuit.instructions) state = apply_gate(state, g);
  return state;
}

}  // namespace dicke
