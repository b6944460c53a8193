// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "dicke/error.hpp"
#include "dicke/state.hpp"

namespace dicke {

template <typename Real>
using Vec3 = Eigen::Matrix<Real, 3, 1>;

/// First and second moments of (J_x, J_y, J_z).
template <typename Real = double>
struct SpinMoments {
  Vec3<Real> mean = Vec3<Real>::Zero();
  Eigen::Matrix<Real, 3, 3> second = Eigen::Matrix<Real, 3, 3>::Zero();  // Re <J_a J_b>
};

/// Moments in O(dim^2) per block, using that J_+, J_-, J_z are at most bidiagonal.
template <typename Real>
SpinMoments<Real> spin_moments(const CollectiveState<Real>& state) {
  using Complex = std::complex<Real>;
  using Matrix = ComplexMatrix<Real>;
  const Complex I(0, 1);
  Eigen::Matrix<Complex, 3, 1> mean = Eigen::Matrix<Complex, 3, 1>::Zero();
  Eigen::Matrix<Complex, 3, 3> prod = Eigen::Matrix<Complex, 3, 3>::Zero();

  for (std::size_t b : state.active_blocks()) {
    const Matrix& rho = state.block(b);
    const int d = static_cast<int>(rho.rows());
    const Real j = Real(state.ledger()[b].j.twice()) / 2;
    Eigen::Matrix<Real, Eigen::Dynamic, 1> u(d), m(d);  // u_k = <m_k + 1|J_+|m_k>
    for (int k = 0; k < d; ++k) {
      m(k) = j - k;
      u(k) = k == 0 ? Real(0) : std::sqrt((j - m(k)) * (j + m(k) + 1));
    }
    // B_a = rho J_a
    Matrix bp = Matrix::Zero(d, d), bm = Matrix::Zero(d, d);
    for (int k = 1; k < d; ++k) {
      bp.col(k) = rho.col(k - 1) * u(k);
      bm.col(k - 1) = rho.col(k) * u(k);
    }
    const Matrix bz = rho * m.asDiagonal();
    const Matrix bx = (bp + bm) / Real(2);
    const Matrix by = (bp - bm) * (-I / Real(2));
    // tr(B J_+), tr(B J_-), tr(B J_z)
    auto tr_plus = [&](const Matrix& bb) {
      Complex s(0);
      for (int k = 1; k < d; ++k) s += bb(k, k - 1) * u(k);
      return s;
    };
    auto tr_minus = [&](const Matrix& bb) {
      Complex s(0);
      for (int k = 1; k < d; ++k) s += bb(k - 1, k) * u(k);
      return s;
    };
    auto tr_z = [&](const Matrix& bb) { return (bb.diagonal().array() * m.array()).sum(); };

    const Matrix* bs[3] = {&bx, &by, &bz};
    for (int a = 0; a < 3; ++a) {
      const Complex tp = tr_plus(*bs[a]);
      const Complex tm = tr_minus(*bs[a]);
      prod(a, 0) += (tp + tm) / Real(2);
      prod(a, 1) += (tp - tm) * (-I / Real(2));
      prod(a, 2) += tr_z(*bs[a]);
      mean(a) += bs[a]->trace();
    }
  }
  SpinMoments<Real> out;
  out.mean = mean.real();
  out.second = prod.real();
  return out;
}

/// Mean-spin direction n1 and the transverse pair (n2, n3).
template <typename Real = double>
struct MeanSpinFrame {
  Real theta = 0;
  Real phi = 0;
  Real norm = 0;  // |<J>|
  Vec3<Real> n1, n2, n3;
};

/// Throws DegenerateFrameError when |<J>| < 1e-12. On the z axis phi is 0.
template <typename Real>
MeanSpinFrame<Real> mean_spin_frame(const Vec3<Real>& mean) {
  const Real pi = std::numbers::pi_v<Real>;
  MeanSpinFrame<Real> f;
  f.norm = mean.norm();
  if (!(f.norm >= Real(1e-12))) throw DegenerateFrameError("mean spin vanishes; frame undefined");
  f.theta = std::acos(std::clamp(mean(2) / f.norm, Real(-1), Real(1)));
  const Real rxy = std::hypot(mean(0), mean(1));
  if (rxy <= Real(1e-12) * f.norm) {
    f.phi = 0;
  } else {
    const Real c = std::acos(std::clamp(mean(0) / rxy, Real(-1), Real(1)));
    f.phi = mean(1) >= 0 ? c : 2 * pi - c;
    if (f.phi >= 2 * pi) f.phi -= 2 * pi;
  }
  const Real st = std::sin(f.theta), ct = std::cos(f.theta);
  const Real sp = std::sin(f.phi), cp = std::cos(f.phi);
  f.n1 << st * cp, st * sp, ct;
  f.n2 << -sp, cp, 0;
  f.n3 << ct * cp, ct * sp, -st;
  return f;
}

template <typename Real>
MeanSpinFrame<Real> mean_spin_frame(const CollectiveState<Real>& state) {
  return mean_spin_frame(spin_moments(state).mean);
}

template <typename Real = double>
struct SqueezingResult {
  Real xi2_s = 0;   // (2/N) [A + B - sqrt((A - B)^2 + 4 C^2)]
  Real anti = 0;    // same with + sqrt(...)
  Real xi2_r = 0;   // (N / (2 |<J>|))^2 xi2_s
  MeanSpinFrame<Real> frame;
};

template <typename Real>
SqueezingResult<Real> squeezing(const SpinMoments<Real>& mom, int n_particles) {
  SqueezingResult<Real> r;
  r.frame = mean_spin_frame(mom.mean);
  const auto& n2 = r.frame.n2;
  const auto& n3 = r.frame.n3;
  const Real a = n2.dot(mom.second * n2);
  const Real b = n3.dot(mom.second * n3);
  // second is the real part of <J_a J_b>, whose symmetric part is <{J_a, J_b}>/2.
  const Eigen::Matrix<Real, 3, 3> sym = (mom.second + mom.second.transpose()) / Real(2);
  const Real cov = n2.dot(sym * n3) - n2.dot(mom.mean) * n3.dot(mom.mean);
  const Real root = std::sqrt((a - b) * (a - b) + 4 * cov * cov);
  const Real n = Real(n_particles);
  r.xi2_s = 2 / n * (a + b - root);
  r.anti = 2 / n * (a + b + root);
  const Real scale = n / (2 * r.frame.norm);
  r.xi2_r = scale * scale * r.xi2_s;
  return r;
}

template <typename Real>
SqueezingResult<Real> squeezing(const CollectiveState<Real>& state) {
  return squeezing(spin_moments(state), state.n_particles());
}

template <typename Real>
Real xi2_S(const CollectiveState<Real>& state) { return squeezing(state).xi2_s; }

template <typename Real>
Real xi2_R(const CollectiveState<Real>& state) { return squeezing(state).xi2_r; }

template <typename Real>
Real get_xi_2_S(const CollectiveState<Real>& state) { return xi2_S(state); }

template <typename Real>
Real get_xi_2_R(const CollectiveState<Real>& state) { return xi2_R(state); }

}  // namespace dicke
