// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "dicke/gate_spec.hpp"
#include "dicke/half_int.hpp"
#include "dicke/operator.hpp"
#include "dicke/summary.hpp"

/// Brute-force simulation in the 2^N product space. Slow and literal; used as
/// ground truth for the collective engine.
namespace dicke::oracle {

inline constexpr int kMaxParticles = 8;

using Matrix = ComplexMatrix<double>;
using Vector = ComplexVector<double>;

/// Qubit n is bit n of the basis index; bit value 0 is spin up.
struct FullOps {
  int n_particles = 0;
  Matrix jx, jy, jz, jplus, jminus;
};

/// J_a = sum_n I x ... x (sigma_a / 2) x ... x I. Throws ResourceError above the cap.
FullOps full_collective_ops(int n_particles);

/// Single-particle spin-1/2 operator on qubit `site`.
Matrix single_site(const Eigen::Matrix2cd& op, int site, int n_particles);

struct JmProjector {
  HalfInt j;
  HalfInt m;
  Matrix proj;
};

/// Joint eigenprojectors of (J^2, J_z), ordered j descending then m descending.
struct JmProjectorSet {
  int n_particles = 0;
  std::vector<JmProjector> projectors;
};

/// Clusters J^2 eigenvalues onto j(j+1) with tolerance 1e-8; a stray
/// eigenvalue raises NumericError.
JmProjectorSet jm_projectors(int n_particles);

struct FullState {
  int n_particles = 0;
  Matrix rho;
};

FullState full_ground(int n_particles);

/// Product state with every qubit cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>.
FullState full_product_css(int n_particles, double theta, double phi);

/// exp(-i theta G) with G rebuilt from full-space operators; non-unitary gates
/// renormalize. Noise, if set, follows.
FullState full_apply(const FullState& state, const GateSpec& spec);

/// (1 - eps) rho + eps' sum_n sum_a J_a^(n) rho J_a^(n), eps' fixed by unit trace.
FullState full_depolarize(const FullState& state, double eps);

/// Runs the circuit from the all-down state.
FullState full_run(const Circuit& circuit);

/// P(j,m) = tr(rho Pi_jm), first and second moments, and squeezing parameters
/// from the 2x2 transverse covariance.
CollectiveSummary extract_collective(const FullState& state);

}  // namespace dicke::oracle
