// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "dicke/error.hpp"
#include "dicke/measurement.hpp"
#include "dicke/squeezing.hpp"

namespace dicke {

/// Quantities compared between the collective engine and the full-space oracle.
struct CollectiveSummary {
  int n_particles = 0;
  ProbTable probs;
  std::array<double, 3> mean{};    // <J_x>, <J_y>, <J_z>
  std::array<double, 3> square{};  // <J_x^2>, <J_y^2>, <J_z^2>
  double mean_norm = 0;            // |<J>|
  std::optional<double> xi2_s;     // absent when the frame is degenerate
  std::optional<double> xi2_r;
};

/// Fills xi2 fields from moments; leaves them empty on a degenerate frame.
inline void fill_squeezing(CollectiveSummary& s, const SpinMoments<double>& mom) {
  for (int a = 0; a < 3; ++a) {
    s.mean[a] = mom.mean(a);
    s.square[a] = mom.second(a, a);
  }
  s.mean_norm = mom.mean.norm();
  try {
    const auto r = squeezing(mom, s.n_particles);
    s.xi2_s = r.xi2_s;
    s.xi2_r = r.xi2_r;
  } catch (const DegenerateFrameError&) {
    s.xi2_s.reset();
    s.xi2_r.reset();
  }
}

inline CollectiveSummary summarize(const CollectiveState<double>& state) {
  CollectiveSummary s;
  s.n_particles = state.n_particles();
  s.probs = probabilities(state);
  fill_squeezing(s, spin_moments(state));
  return s;
}

/// Largest absolute difference over P(j,m) (union of keys), the first and
/// second moments, and xi2_S. xi2_S enters only when both sides define it and
/// |<J>| >= min_norm on both, since the frame is ill-conditioned near |<J>| = 0.
inline double max_deviation(const CollectiveSummary& a, const CollectiveSummary& b,
                            double min_norm = 1e-3) {
  double d = 0;
  for (const auto& e : a.probs.entries) d = std::max(d, std::abs(e.p - b.probs.at(e.j, e.m)));
  for (const auto& e : b.probs.entries) d = std::max(d, std::abs(e.p - a.probs.at(e.j, e.m)));
  for (int i = 0; i < 3; ++i) {
    d = std::max(d, std::abs(a.mean[i] - b.mean[i]));
    d = std::max(d, std::abs(a.square[i] - b.square[i]));
  }
  if (a.xi2_s && b.xi2_s && a.mean_norm >= min_norm && b.mean_norm >= min_norm)
    d = std::max(d, std::abs(*a.xi2_s - *b.xi2_s));
  return d;
}

}  // namespace dicke
