// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dicke/oracle.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "dicke/error.hpp"
#include "dicke/ledger.hpp"

namespace dicke::oracle {
namespace {

using Complex = std::complex<double>;

void check_cap(int n) {
  if (n < 1) throw DomainError("oracle: N must be positive");
  if (n > kMaxParticles) {
    throw ResourceError("oracle: N=" + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxParticles));
  }
}

Eigen::Matrix2cd pauli_half(char a) {
  Eigen::Matrix2cd s;
  switch (a) {
    case 'x': s << 0, 0.5, 0.5, 0; break;
    case 'y': s << 0, Complex(0, -0.5), Complex(0, 0.5), 0; break;
    case 'z': s << 0.5, 0, 0, -0.5; break;
    case '+': s << 0, 1, 0, 0; break;   // |up><down|
    case '-': s << 0, 0, 1, 0; break;
    default: throw DomainError("oracle: bad single-site operator");
  }
  return s;
}

const Matrix& pick(const FullOps& ops, SpinComponent c) {
  switch (c) {
    case SpinComponent::X: return ops.jx;
    case SpinComponent::Y: return ops.jy;
    case SpinComponent::Z: return ops.jz;
    case SpinComponent::Plus: return ops.jplus;
    case SpinComponent::Minus: return ops.jminus;
  }
  throw DomainError("oracle: bad component");
}

Matrix full_generator(const GateSpec& spec, const FullOps& ops) {
  const int n = ops.n_particles;
  auto sq = [](const Matrix& a) { return Matrix(a * a); };
  switch (spec.kind) {
    case GateKind::RX: return ops.jx;
    case GateKind::RY: return ops.jy;
    case GateKind::RZ: return ops.jz;
    case GateKind::RN: {
      const double phi = spec.params[1];
      return -(std::sin(phi) * ops.jx - std::cos(phi) * ops.jy);
    }
    case GateKind::R_PLUS: return ops.jplus;
    case GateKind::R_MINUS: return ops.jminus;
    case GateKind::RX2: return sq(ops.jx);
    case GateKind::RY2: return sq(ops.jy);
    case GateKind::RZ2: return sq(ops.jz);
    case GateKind::OAT: return sq(pick(ops, parse_axes(*spec.axes)[0]));
    case GateKind::TAT: {
      const auto ax = parse_axes(*spec.axes);
      return sq(pick(ops, ax[0])) - sq(pick(ops, ax[1]));
    }
    case GateKind::TNT: {
      const auto ax = parse_axes(*spec.axes);
      return sq(pick(ops, ax[0])) - (double(n) / spec.params[1]) * pick(ops, ax[1]);
    }
    case GateKind::GMS: {
      const double phi = spec.params[1];
      return sq(std::cos(phi) * ops.jx + std::sin(phi) * ops.jy);
    }
  }
  throw DomainError("oracle: unknown gate");
}

std::shared_ptr<const JmProjectorSet> cached_projectors(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const JmProjectorSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto set = std::make_shared<const JmProjectorSet>(jm_projectors(n));
  cache.emplace(n, set);
  return set;
}

std::shared_ptr<const FullOps> cached_ops(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FullOps>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ops = std::make_shared<const FullOps>(full_collective_ops(n));
  cache.emplace(n, ops);
  return ops;
}

}  // namespace

Matrix single_site(const Eigen::Matrix2cd& op, int site, int n_particles) {
  const int dim = 1 << n_particles;
  const int bit = 1 << site;
  Matrix out = Matrix::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) {
    const int bc = (c & bit) ? 1 : 0;
    for (int br = 0; br < 2; ++br) {
      const Complex v = op(br, bc);
      if (v == Complex(0)) continue;
      const int r = br ? (c | bit) : (c & ~bit);
      out(r, c) += v;
    }
  }
  return out;
}

FullOps full_collective_ops(int n_particles) {
  check_cap(n_particles);
  const int dim = 1 << n_particles;
  FullOps ops;
  ops.n_particles = n_particles;
  ops.jx = ops.jy = ops.jz = ops.jplus = ops.jminus = Matrix::Zero(dim, dim);
  for (int s = 0; s < n_particles; ++s) {
    ops.jx += single_site(pauli_half('x'), s, n_particles);
    ops.jy += single_site(pauli_half('y'), s, n_particles);
    ops.jz += single_site(pauli_half('z'), s, n_particles);
    ops.jplus += single_site(pauli_half('+'), s, n_particles);
    ops.jminus += single_site(pauli_half('-'), s, n_particles);
  }
  return ops;
}

JmProjectorSet jm_projectors(int n_particles) {
  const FullOps ops = full_collective_ops(n_particles);
  const int dim = 1 << n_particles;
  const Matrix j2 = ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz;
  Eigen::SelfAdjointEigenSolver<Matrix> es(j2);
  if (es.info() != Eigen::Success) throw NumericError("oracle: J^2 diagonalization failed");

  // Group eigenvectors by twice_j.
  std::map<int, std::vector<int>, std::greater<>> groups;
  for (int i = 0; i < dim; ++i) {
    const double lam = es.eigenvalues()(i);
    const double j = (-1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * lam))) / 2.0;
    const int two_j = static_cast<int>(std::lround(2 * j));
    const double jj = two_j / 2.0;
    if (std::abs(lam - jj * (jj + 1)) > 1e-8 || two_j > n_particles ||
        (n_particles - two_j) % 2 != 0) {
      throw NumericError("oracle: J^2 eigenvalue " + std::to_string(lam) + " matches no j");
    }
    groups[two_j].push_back(i);
  }

  JmProjectorSet set;
  set.n_particles = n_particles;
  for (const auto& [two_j, idx] : groups) {
    Matrix v(dim, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) v.col(k) = es.eigenvectors().col(idx[k]);
    const Matrix pj = v * v.adjoint();
    for (int two_m = two_j; two_m >= -two_j; two_m -= 2) {
      Matrix proj = Matrix::Zero(dim, dim);
      // J_z is diagonal: m = (N - 2 * #down) / 2.
      for (int r = 0; r < dim; ++r) {
        if (n_particles - 2 * std::popcount(static_cast<unsigned>(r)) != two_m) continue;
        for (int c = 0; c < dim; ++c) {
          if (n_particles - 2 * std::popcount(static_cast<unsigned>(c)) != two_m) continue;
          proj(r, c) = pj(r, c);
        }
      }
      set.projectors.push_back({HalfInt::from_twice(two_j), HalfInt::from_twice(two_m), proj});
    }
  }
  return set;
}

FullState full_ground(int n_particles) {
  check_cap(n_particles);
  const int dim = 1 << n_particles;
  FullState s{n_particles, Matrix::Zero(dim, dim)};
  s.rho(dim - 1, dim - 1) = 1;
  return s;
}

FullState full_product_css(int n_particles, double theta, double phi) {
  check_cap(n_particles);
  const int dim = 1 << n_particles;
  const Complex up = std::cos(theta / 2);
  const Complex down = std::polar(std::sin(theta / 2), phi);
  Vector psi(dim);
  for (int i = 0; i < dim; ++i) {
    Complex a = 1;
    for (int s = 0; s < n_particles; ++s) a *= (i >> s) & 1 ? down : up;
    psi(i) = a;
  }
  return {n_particles, psi * psi.adjoint()};
}

FullState full_apply(const FullState& state, const GateSpec& spec) {
  spec.validate();
  const auto ops = cached_ops(state.n_particles);
  const Matrix g = full_generator(spec, *ops);
  const double theta = spec.params[0];
  const Complex minus_i(0, -1);
  Matrix k;
  const bool hermitian = (g - g.adjoint()).cwiseAbs().maxCoeff() < 1e-12;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    if (es.info() != Eigen::Success) throw NumericError("oracle: generator diagonalization failed");
    Vector phase(g.rows());
    for (Eigen::Index i = 0; i < g.rows(); ++i) phase(i) = std::exp(minus_i * theta * es.eigenvalues()(i));
    k = es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
  } else {
    const Matrix a = (minus_i * theta) * g;
    k = a.exp();
  }
  FullState out{state.n_particles, k * state.rho * k.adjoint()};
  if (!hermitian) {
    const double tr = out.rho.trace().real();
    if (!(tr > 0) || !std::isfinite(tr)) throw NumericError("oracle: state annihilated");
    out.rho /= tr;
  }
  if (spec.noise && *spec.noise > 0) out = full_depolarize(out, *spec.noise);
  return out;
}

FullState full_depolarize(const FullState& state, double eps) {
  if (!(eps >= 0 && eps <= 1)) throw DomainError("oracle: eps must lie in [0, 1]");
  if (eps == 0) return state;
  const int n = state.n_particles;
  Matrix sum = Matrix::Zero(state.rho.rows(), state.rho.cols());
  for (int s = 0; s < n; ++s) {
    for (char a : {'x', 'y', 'z'}) {
      const Matrix op = single_site(pauli_half(a), s, n);
      sum += op * state.rho * op.adjoint();
    }
  }
  const double tr = sum.trace().real();
  if (!(tr > 0)) throw NumericError("oracle: depolarizing image has zero trace");
  return {n, (1 - eps) * state.rho + (eps / tr) * sum};
}

FullState full_run(const Circuit& circuit) {
  FullState s = full_ground(circuit.n_particles);
  for (const auto& g : circuit.instructions) s = full_apply(s, g);
  return s;
}

CollectiveSummary extract_collective(const FullState& state) {
  const int n = state.n_particles;
  const auto ops = cached_ops(n);
  const auto projectors = cached_projectors(n);
  auto ev = [&](const Matrix& op) { return (state.rho * op).trace(); };

  CollectiveSummary out;
  out.n_particles = n;
  for (const auto& p : projectors->projectors) {
    const double prob = ev(p.proj).real();
    if (prob != 0) out.probs.entries.push_back({p.j, p.m, prob});
  }
  const Matrix* j[3] = {&ops->jx, &ops->jy, &ops->jz};
  Eigen::Vector3d mean;
  for (int a = 0; a < 3; ++a) {
    mean(a) = ev(*j[a]).real();
    out.mean[a] = mean(a);
    out.square[a] = ev(*j[a] * *j[a]).real();
  }
  out.mean_norm = mean.norm();
  if (out.mean_norm < 1e-12) return out;

  // Transverse basis by Gram-Schmidt against the coordinate axis least aligned with <J>.
  const Eigen::Vector3d n1 = mean / out.mean_norm;
  Eigen::Index axis;
  n1.cwiseAbs().minCoeff(&axis);
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  e(axis) = 1;
  const Eigen::Vector3d u = (e - e.dot(n1) * n1).normalized();
  const Eigen::Vector3d w = n1.cross(u);
  const Matrix ju = u(0) * ops->jx + u(1) * ops->jy + u(2) * ops->jz;
  const Matrix jw = w(0) * ops->jx + w(1) * ops->jy + w(2) * ops->jz;
  const double mu = ev(ju).real(), mw = ev(jw).real();
  Eigen::Matrix2d cov;
  cov(0, 0) = ev(ju * ju).real() - mu * mu;
  cov(1, 1) = ev(jw * jw).real() - mw * mw;
  cov(0, 1) = cov(1, 0) = 0.5 * ev(ju * jw + jw * ju).real() - mu * mw;
  const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(cov).eigenvalues()(0);
  out.xi2_s = 4.0 / n * lmin;
  const double scale = n / (2 * out.mean_norm);
  out.xi2_r = scale * scale * *out.xi2_s;
  return out;
}

}  // namespace dicke::oracle
