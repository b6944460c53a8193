// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "dicke/gates.hpp"
#include "dicke/measurement.hpp"
#include "dicke/oracle.hpp"
#include "dicke/squeezing.hpp"
#include "dicke/states.hpp"
#include "dicke/summary.hpp"
#include "test_util.hpp"

using namespace dicke;
using dicke::testing::kPi;

TEST(Frame, EquatorialCoherentState) {
  const auto f = mean_spin_frame(css_state<double>(10, kPi / 2, 0.0));
  EXPECT_NEAR(f.theta, kPi / 2, 1e-12);
  EXPECT_NEAR(f.phi, 0.0, 1e-12);
  EXPECT_LT((f.n2 - Vec3<double>(0, 1, 0)).norm(), 1e-12);
  EXPECT_LT((f.n3 - Vec3<double>(0, 0, -1)).norm(), 1e-12);
  EXPECT_NEAR(f.norm, 5.0, 1e-12);
}

TEST(Frame, PolesUseZeroAzimuth) {
  const auto f = mean_spin_frame(excited_state<double>(6));
  EXPECT_NEAR(f.theta, 0.0, 1e-12);
  EXPECT_EQ(f.phi, 0.0);
  const auto g = mean_spin_frame(ground_state<double>(6));
  EXPECT_NEAR(g.theta, kPi, 1e-12);
  EXPECT_EQ(g.phi, 0.0);
}

TEST(Frame, AzimuthBranches) {
  for (double phi : {0.3, 1.7, 3.5, 5.9}) {
    const auto f = mean_spin_frame(css_state<double>(8, 1.0, phi));
    EXPECT_NEAR(f.phi, phi, 1e-10);
    EXPECT_NEAR(f.theta, 1.0, 1e-10);
  }
}

TEST(Frame, Orthonormal) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = apply_circuit(ground_state<double>(9), dicke::testing::random_circuit(9, 4, rng));
    MeanSpinFrame<double> f;
    try {
      f = mean_spin_frame(s);
    } catch (const DegenerateFrameError&) {
      continue;
    }
    EXPECT_NEAR(f.n1.dot(f.n2), 0.0, 1e-10);
    EXPECT_NEAR(f.n1.dot(f.n3), 0.0, 1e-10);
    EXPECT_NEAR(f.n2.dot(f.n3), 0.0, 1e-10);
    for (const auto* v : {&f.n1, &f.n2, &f.n3}) EXPECT_NEAR(v->norm(), 1.0, 1e-10);
  }
}

TEST(Frame, GhzIsDegenerate) {
  EXPECT_THROW(mean_spin_frame(ghz_state<double>(6)), DegenerateFrameError);
  EXPECT_THROW(xi2_S(ghz_state<double>(6)), DegenerateFrameError);
  EXPECT_THROW(xi2_R(ghz_state<double>(6)), DegenerateFrameError);
}

TEST(Squeezing, CoherentStatesAreUnsqueezed) {
  for (int n : {1, 2, 5, 40}) {
    for (double theta : {0.0, 0.4, kPi / 2, 2.5, kPi}) {
      const auto s = css_state<double>(n, theta, 1.1);
      EXPECT_NEAR(xi2_S(s), 1.0, 1e-8) << n << " " << theta;
      EXPECT_NEAR(xi2_R(s), 1.0, 1e-8) << n << " " << theta;
    }
  }
  EXPECT_NEAR(get_xi_2_S(ground_state<double>(12)), 1.0, 1e-12);
}

TEST(Squeezing, MomentsMatchDenseProducts) {
  std::mt19937_64 rng(21);
  const auto s = apply_circuit(ground_state<double>(7), dicke::testing::random_circuit(7, 5, rng, 0.2));
  const auto mom = spin_moments(s);
  const auto l = s.ledger_ptr();
  const CollectiveOperator<double> ops[3] = {op_jx(l), op_jy(l), op_jz(l)};
  for (int a = 0; a < 3; ++a) {
    EXPECT_NEAR(mom.mean(a), expectation(s, ops[a]).real(), 1e-12);
    for (int b = 0; b < 3; ++b) EXPECT_NEAR(mom.second(a, b), expectation(s, ops[a] * ops[b]).real(), 1e-12);
  }
}

TEST(Squeezing, OatSweepAtHundred) {
  const auto css = apply_gate(ground_state<double>(100), gate::rn(kPi / 2, 0.0));
  double best = 1e9;
  for (int i = 0; i <= 50; ++i) {
    const double theta = 0.5 * i / 50;
    const auto r = squeezing(apply_gate(css, gate::oat(theta, "z")));
    best = std::min(best, 10 * std::log10(r.xi2_s));
    EXPECT_GE(r.xi2_r, r.xi2_s * (1 - 1e-12));
    EXPECT_GE(r.anti, r.xi2_s);
  }
  EXPECT_LT(best, -10.0);
}

TEST(Squeezing, InvariantUnderZRotation) {
  const auto s = apply_gate(apply_gate(ground_state<double>(30), gate::rn(kPi / 2, 0.0)), gate::oat(0.05, "z"));
  const double ref = xi2_S(s);
  for (double a : {0.4, 1.9, 3.3, 5.0}) EXPECT_NEAR(xi2_S(apply_gate(s, gate::rz(a))), ref, 1e-8);
  // A pole-aligned squeezed state: rotating about z must not change xi2_S either.
  const auto pole = apply_gate(excited_state<double>(20), gate::tat(0.05, "xy"));
  const double ref_pole = xi2_S(pole);
  for (double a : {0.4, 1.9}) EXPECT_NEAR(xi2_S(apply_gate(pole, gate::rz(a))), ref_pole, 1e-8);
}

TEST(Squeezing, PositiveAndOrdered) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = apply_circuit(ground_state<double>(8), dicke::testing::random_circuit(8, 3, rng, 0.05));
    try {
      const auto r = squeezing(s);
      EXPECT_GT(r.xi2_s, 0.0);
      EXPECT_GE(r.xi2_r, r.xi2_s * (1 - 1e-12));
    } catch (const DegenerateFrameError&) {
    }
  }
}

TEST(Squeezing, MatchesOracleRoute) {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Circuit c = dicke::testing::random_circuit(n, 4, rng, trial % 2 ? 0.05 : 0.0);
      const auto a = summarize(apply_circuit(ground_state<double>(n), c));
      const auto b = oracle::extract_collective(oracle::full_run(c));
      if (!a.xi2_s || !b.xi2_s || a.mean_norm < 1e-3) continue;
      EXPECT_NEAR(*a.xi2_s, *b.xi2_s, 1e-8) << n;
      EXPECT_NEAR(*a.xi2_r, *b.xi2_r, 1e-8 * std::max(1.0, *b.xi2_r)) << n;
    }
  }
}
