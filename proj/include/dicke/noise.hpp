// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "dicke/error.hpp"
#include "dicke/parallel.hpp"
#include "dicke/spin_ops.hpp"
#include "dicke/state.hpp"

namespace dicke {

/// Transition coefficients of the collective image of sum_i sigma_q^(i) (.) sigma_q^(i)
/// for q in {+, -, z}, acting on normalized block elements.
///
/// A term |j,m><j,m'| feeds |j',m+q><j',m'+q| with j' in {j-1, j, j+1} and weight
/// rate(j, j') * ladder(q, j, j', m) * ladder(q, j, j', m').
template <typename Real = double>
struct TransitionTable {
  int n_particles = 1;

  /// j -> j + dj block-to-block factor.
  Real rate(HalfInt j, int dj) const {
    const Real jv = j.value();
    const Real half_n = Real(n_particles) / 2;
    const Real down = j.twice() == 0 ? Real(0) : (half_n + jv + 1) / (2 * jv * (2 * jv + 1));
    const Real up = (half_n - jv) / (2 * (jv + 1) * (2 * jv + 1));
    if (dj < 0) return down;
    if (dj > 0) return j.value() + 1 > half_n ? Real(0) : up;
    return down + up;
  }

  /// Per-index factor. Only the z same-block factor (m) can be negative.
  static Real ladder(SpinComponent q, HalfInt j, int dj, Real m) {
    const Real jv = j.value();
    auto root = [](Real a, Real b) { return std::sqrt(std::max(Real(0), a * b)); };
    switch (q) {
      case SpinComponent::Z:
        if (dj == 0) return m;
        if (dj < 0) return root(jv + m, jv - m);
        return root(jv + m + 1, jv - m + 1);
      case SpinComponent::Plus:
        if (dj == 0) return root(jv - m, jv + m + 1);
        if (dj < 0) return root(jv - m, jv - m - 1);
        return root(jv + m + 1, jv + m + 2);
      case SpinComponent::Minus:
        if (dj == 0) return root(jv + m, jv - m + 1);
        if (dj < 0) return root(jv + m, jv + m - 1);
        return root(jv - m + 1, jv - m + 2);
      default:
        throw DomainError("TransitionTable: channel must be plus, minus or z");
    }
  }

  /// Shift of m under channel q.
  static int shift(SpinComponent q) {
    return q == SpinComponent::Plus ? 1 : (q == SpinComponent::Minus ? -1 : 0);
  }

  /// Weight of the channel in rho' = (S_+ + S_-)/2 + S_z.
  static Real channel_weight(SpinComponent q) { return q == SpinComponent::Z ? Real(1) : Real(0.5); }
};

/// Unnormalized image rho' = sum_i sum_{q in x,y,z} sigma_q^(i) rho sigma_q^(i) / 4, written
/// as (S_+ + S_-)/2 + S_z. Its trace is 3N/4 times the trace of the input.
///
/// Each destination block gathers from its (up to three) source neighbours, so
/// workers never share output.
template <typename Real>
std::vector<std::optional<ComplexMatrix<Real>>> rho_prime(const CollectiveState<Real>& state) {
  using Matrix = ComplexMatrix<Real>;
  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  const auto& ledger = state.ledger();
  const std::size_t nb = ledger.size();
  const TransitionTable<Real> table{ledger.n_particles()};

  std::vector<std::optional<Matrix>> out(nb);
  std::vector<std::size_t> targets;
  for (std::size_t b = 0; b < nb; ++b) {
    const bool fed = state.is_active(b) || (b > 0 && state.is_active(b - 1)) ||
                     (b + 1 < nb && state.is_active(b + 1));
    if (fed) targets.push_back(b);
  }

  constexpr SpinComponent channels[] = {SpinComponent::Plus, SpinComponent::Minus,
                                        SpinComponent::Z};
  parallel_for(targets.size(), [&](std::size_t t) {
    const std::size_t bd = targets[t];
    const int d_dst = ledger[bd].dim;
    Matrix acc = Matrix::Zero(d_dst, d_dst);
    // Larger block index means smaller j: source bd - 1 has j' = j - 1, i.e. dj = -1.
    for (int db = -1; db <= 1; ++db) {
      const std::ptrdiff_t bs = static_cast<std::ptrdiff_t>(bd) + db;
      if (bs < 0 || bs >= static_cast<std::ptrdiff_t>(nb) || !state.is_active(bs)) continue;
      const int dj = db;  // j_dst - j_src
      const HalfInt j = ledger[bs].j;
      const int d_src = ledger[bs].dim;
      const Real rate = table.rate(j, dj);
      if (rate == Real(0)) continue;
      const Matrix& src = state.block(bs);
      for (SpinComponent q : channels) {
        const int shift = TransitionTable<Real>::shift(q);
        // Row k (m = j - k) lands on row k + offset of the destination.
        const int offset = (ledger[bd].j.twice() - j.twice()) / 2 - shift;
        const int k0 = std::max(0, -offset);
        const int k1 = std::min(d_src, d_dst - offset);
        if (k1 <= k0) continue;
        const int len = k1 - k0;
        Vector f(len);
        for (int i = 0; i < len; ++i) {
          const Real m = j.value() - (k0 + i);
          f(i) = TransitionTable<Real>::ladder(q, j, dj, m);
        }
        const Real w = TransitionTable<Real>::channel_weight(q) * rate;
        const Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> coeff = w * f * f.transpose();
        acc.block(k0 + offset, k0 + offset, len, len) +=
            src.block(k0, k0, len, len).cwiseProduct(coeff.template cast<std::complex<Real>>());
      }
    }
    out[bd] = std::move(acc);
  });
  return out;
}

/// rho -> (1 - eps) rho + eps rho' / tr rho'. eps = 0 returns the input unchanged.
template <typename Real>
[[nodiscard]] CollectiveState<Real> depolarize(const CollectiveState<Real>& state, Real eps) {
  if (!(eps >= 0 && eps <= 1)) throw DomainError("depolarize: eps must lie in [0, 1]");
  if (eps == Real(0)) return state;
  auto prime = rho_prime(state);
  std::complex<Real> tr(0);
  for (const auto& blk : prime)
    if (blk) tr += blk->trace();
  if (!(std::isfinite(tr.real())) || tr.real() <= 0) {
    throw NumericError("depolarize: rho' has non-positive trace");
  }
  const Real scale = eps / tr.real();
  std::vector<std::optional<ComplexMatrix<Real>>> blocks(state.size());
  for (std::size_t b = 0; b < state.size(); ++b) {
    if (!state.is_active(b) && !prime[b]) continue;
    ComplexMatrix<Real> m = ComplexMatrix<Real>::Zero(state.ledger()[b].dim, state.ledger()[b].dim);
    if (state.is_active(b)) m += (1 - eps) * state.block(b);
    if (prime[b]) m += scale * *prime[b];
    blocks[b] = std::move(m);
  }
  return CollectiveState<Real>(state.ledger_ptr(), std::move(blocks), state.conditioned());
}

}  // namespace dicke
