// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "dicke/state.hpp"

namespace dicke {

/// Spin-j coherent-state amplitudes in the m = j, ..., -j basis:
///
///   <j,m|theta,phi> = sqrt(C(2j, j+m)) cos(theta/2)^(j+m) (sin(theta/2) e^{i phi})^(j-m)
///
/// The state points along (sin t cos p, sin t sin p, cos t). Binomials are
/// evaluated in log space so large j neither overflows nor loses precision.
template <typename Real = double>
ComplexVector<Real> coherent_amplitudes(HalfInt j, Real theta, Real phi) {
  const int two_j = j.twice();
  const Real c = std::cos(theta / 2);
  const Real s = std::sin(theta / 2);
  const Real log_c = std::log(std::abs(c));
  const Real log_s = std::log(std::abs(s));
  const Real log_fact = std::lgamma(Real(two_j + 1));
  ComplexVector<Real> out(two_j + 1);
  for (int k = 0; k <= two_j; ++k) {
    const int up = two_j - k;  // j + m
    const int down = k;        // j - m
    Real mag;
    if ((up > 0 && c == Real(0)) || (down > 0 && s == Real(0))) {
      mag = 0;
    } else {
      Real log_mag = (log_fact - std::lgamma(Real(up + 1)) - std::lgamma(Real(down + 1))) / 2;
      if (up > 0) log_mag += up * log_c;
      if (down > 0) log_mag += down * log_s;
      mag = std::exp(log_mag);
      // cos/sin of a half angle in [0, pi/2] are nonnegative; keep signs for other inputs.
      if (up % 2 == 1 && c < 0) mag = -mag;
      if (down % 2 == 1 && s < 0) mag = -mag;
    }
    out(k) = std::polar(mag, Real(down) * phi);
  }
  return out;
}

/// |N/2, -N/2>: all spins down.
template <typename Real = double>
CollectiveState<Real> ground_state(int n_particles) {
  const auto ledger = build_ledger(n_particles);
  ComplexVector<Real> psi = ComplexVector<Real>::Zero(n_particles + 1);
  psi(n_particles) = 1;
  return pure_block_state<Real>(ledger, 0, psi);
}

/// |N/2, N/2>: all spins up.
template <typename Real = double>
CollectiveState<Real> excited_state(int n_particles) {
  const auto ledger = build_ledger(n_particles);
  ComplexVector<Real> psi = ComplexVector<Real>::Zero(n_particles + 1);
  psi(0) = 1;
  return pure_block_state<Real>(ledger, 0, psi);
}

/// (|N/2, N/2> + |N/2, -N/2>) / sqrt(2).
template <typename Real = double>
CollectiveState<Real> ghz_state(int n_particles) {
  const auto ledger = build_ledger(n_particles);
  ComplexVector<Real> psi = ComplexVector<Real>::Zero(n_particles + 1);
  psi(0) = Real(1) / std::sqrt(Real(2));
  psi(n_particles) = Real(1) / std::sqrt(Real(2));
  return pure_block_state<Real>(ledger, 0, psi);
}

/// Coherent spin state of N particles pointing along (theta, phi).
/// Requires 0 <= theta <= pi and 0 <= phi < 2 pi.
template <typename Real = double>
CollectiveState<Real> css_state(int n_particles, Real theta, Real phi) {
  const Real pi = std::numbers::pi_v<Real>;
  if (!(theta >= 0 && theta <= pi) || !(phi >= 0 && phi < 2 * pi)) {
    throw DomainError("css_state: angles out of range (theta=" + std::to_string(double(theta)) +
                      ", phi=" + std::to_string(double(phi)) + ")");
  }
  const auto ledger = build_ledger(n_particles);
  return pure_block_state<Real>(
      ledger, 0, coherent_amplitudes<Real>(HalfInt::from_twice(n_particles), theta, phi));
}

}  // namespace dicke
