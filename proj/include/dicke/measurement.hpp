// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dicke/error.hpp"
#include "dicke/half_int.hpp"
#include "dicke/parallel.hpp"
#include "dicke/spin_ops.hpp"
#include "dicke/state.hpp"
#include "dicke/states.hpp"

namespace dicke {

struct ProbEntry {
  HalfInt j;
  HalfInt m;
  double p = 0;
};

/// P(j, m) in ledger order: j descending, then m descending.
struct ProbTable {
  std::vector<ProbEntry> entries;

  /// P(j, m), zero when absent.
  double at(HalfInt j, HalfInt m) const {
    for (const auto& e : entries)
      if (e.j == j && e.m == m) return e.p;
    return 0;
  }

  double total() const {
    double s = 0;
    for (const auto& e : entries) s += e.p;
    return s;
  }
};

/// Nonzero diagonal entries of the active blocks. Values in [-1e-12, 0) are
/// clamped to 0 (and so dropped); anything more negative is a NumericError.
template <typename Real>
ProbTable probabilities(const CollectiveState<Real>& state) {
  ProbTable table;
  const auto& ledger = state.ledger();
  table.entries.reserve(ledger.collective_dim());
  for (std::size_t b : state.active_blocks()) {
    const HalfInt j = ledger[b].j;
    for (int k = 0; k < ledger[b].dim; ++k) {
      const HalfInt m = HalfInt::from_twice(j.twice() - 2 * k);
      double p = static_cast<double>(state.block(b)(k, k).real());
      if (p < 0) {
        if (p < -1e-12) {
          throw NumericError("negative probability " + std::to_string(p) + " at j=" + j.str() +
                             ", m=" + m.str());
        }
        p = 0;
      }
      if (p != 0) table.entries.push_back({j, m, p});
    }
  }
  return table;
}

struct ShotEntry {
  HalfInt j;
  HalfInt m;
  std::uint64_t count = 0;
};

struct ShotCounts {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<ShotEntry> entries;  // same order as ProbTable
};

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Draws `shots` outcomes by inverse CDF over the ledger-ordered table.
/// The same seed always gives the same counts.
inline ShotCounts sample(const ProbTable& table, std::uint64_t shots, std::uint64_t seed) {
  ShotCounts out;
  out.shots = shots;
  out.seed = seed;
  out.entries.reserve(table.entries.size());
  std::vector<double> cdf;
  cdf.reserve(table.entries.size());
  double acc = 0;
  for (const auto& e : table.entries) {
    acc += e.p;
    cdf.push_back(acc);
    out.entries.push_back({e.j, e.m, 0});
  }
  if (table.entries.empty() || !(acc > 0)) throw NumericError("sample: probabilities sum to zero");
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = unit_uniform(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) it = std::prev(cdf.end());
    ++out.entries[static_cast<std::size_t>(it - cdf.begin())].count;
  }
  return out;
}

template <typename Real>
ShotCounts sample(const CollectiveState<Real>& state, std::uint64_t shots, std::uint64_t seed) {
  return sample(probabilities(state), shots, seed);
}

enum class Observable { Jx, Jy, Jz, JPlus, JMinus, Jx2, Jy2, Jz2, JPlus2, JMinus2 };

inline std::string_view to_string(Observable o) {
  switch (o) {
    case Observable::Jx: return "Jx";
    case Observable::Jy: return "Jy";
    case Observable::Jz: return "Jz";
    case Observable::JPlus: return "J_plus";
    case Observable::JMinus: return "J_minus";
    case Observable::Jx2: return "Jx2";
    case Observable::Jy2: return "Jy2";
    case Observable::Jz2: return "Jz2";
    case Observable::JPlus2: return "J_plus2";
    case Observable::JMinus2: return "J_minus2";
  }
  return "?";
}

inline std::optional<Observable> parse_observable(std::string_view name) {
  for (Observable o : {Observable::Jx, Observable::Jy, Observable::Jz, Observable::JPlus,
                       Observable::JMinus, Observable::Jx2, Observable::Jy2, Observable::Jz2,
                       Observable::JPlus2, Observable::JMinus2}) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

inline bool is_hermitian(Observable o) {
  return o != Observable::JPlus && o != Observable::JMinus && o != Observable::JPlus2 &&
         o != Observable::JMinus2;
}

template <typename Real>
ComplexMatrix<Real> observable_block(Observable o, HalfInt j) {
  auto s = [&](SpinComponent c) { return spin_matrix<Real>(c, j); };
  auto sq = [&](SpinComponent c) {
    const auto a = s(c);
    return ComplexMatrix<Real>(a * a);
  };
  switch (o) {
    case Observable::Jx: return s(SpinComponent::X);
    case Observable::Jy: return s(SpinComponent::Y);
    case Observable::Jz: return s(SpinComponent::Z);
    case Observable::JPlus: return s(SpinComponent::Plus);
    case Observable::JMinus: return s(SpinComponent::Minus);
    case Observable::Jx2: return sq(SpinComponent::X);
    case Observable::Jy2: return sq(SpinComponent::Y);
    case Observable::Jz2: return sq(SpinComponent::Z);
    case Observable::JPlus2: return sq(SpinComponent::Plus);
    case Observable::JMinus2: return sq(SpinComponent::Minus);
  }
  throw DomainError("unknown observable");
}

/// tr(rho O) for an arbitrary block-diagonal operator.
template <typename Real>
std::complex<Real> expectation(const CollectiveState<Real>& state, const CollectiveOperator<Real>& op) {
  if (!(state.ledger() == op.ledger())) throw DomainError("expectation: ledgers differ");
  std::complex<Real> acc(0);
  for (std::size_t b : state.active_blocks())
    acc += state.block(b).cwiseProduct(op.block(b).transpose()).sum();
  return acc;
}

/// <O>. Hermitian observables must come out real to within 1e-10.
template <typename Real>
std::complex<Real> expval(const CollectiveState<Real>& state, Observable o) {
  std::complex<Real> acc(0);
  for (std::size_t b : state.active_blocks()) {
    const auto ob = observable_block<Real>(o, state.ledger()[b].j);
    acc += state.block(b).cwiseProduct(ob.transpose()).sum();
  }
  if (is_hermitian(o) && std::abs(acc.imag()) >= Real(1e-10)) {
    throw NumericError("expval(" + std::string(to_string(o)) + ") has imaginary part " +
                       std::to_string(double(acc.imag())));
  }
  return acc;
}

struct HusimiPoint {
  double theta = 0;
  double phi = 0;
  double q = 0;
};

/// Q(theta, phi) = sum_j <theta,phi; j| rho_j |theta,phi; j> on a theta-major grid.
template <typename Real>
std::vector<HusimiPoint> husimi_grid(const CollectiveState<Real>& state,
                                     const std::vector<Real>& thetas, const std::vector<Real>& phis) {
  std::vector<HusimiPoint> out(thetas.size() * phis.size());
  const auto active = state.active_blocks();
  parallel_for(thetas.size(), [&](std::size_t it) {
    for (std::size_t ip = 0; ip < phis.size(); ++ip) {
      Real q = 0;
      for (std::size_t b : active) {
        const auto a = coherent_amplitudes<Real>(state.ledger()[b].j, thetas[it], phis[ip]);
        q += (a.adjoint() * state.block(b) * a)(0, 0).real();
      }
      out[it * phis.size() + ip] = {double(thetas[it]), double(phis[ip]), double(q)};
    }
  });
  return out;
}

}  // namespace dicke
