// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "dicke/measurement.hpp"
#include "dicke/oracle.hpp"
#include "dicke/states.hpp"
#include "test_util.hpp"

using namespace dicke;
using dicke::testing::kPi;

TEST(States, GroundExcitedGhz) {
  const auto g = ground_state<double>(2);
  EXPECT_EQ(g.active_blocks(), std::vector<std::size_t>{0});
  EXPECT_EQ(g.block(0)(2, 2), std::complex<double>(1));
  EXPECT_EQ(g.block(0).cwiseAbs().sum(), 1.0);

  const auto e = excited_state<double>(7);
  EXPECT_NEAR(expval(e, Observable::Jz).real(), 3.5, 1e-15);

  const auto ghz = ghz_state<double>(4);
  EXPECT_NEAR(ghz.block(0)(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(ghz.block(0)(4, 4).real(), 0.5, 1e-15);
  EXPECT_NEAR(ghz.block(0)(0, 4).real(), 0.5, 1e-15);
  EXPECT_EQ(ghz.active_blocks().size(), 1u);

  for (const auto& s : {g, e, ghz}) EXPECT_TRUE(check_invariants(s).ok());
}

TEST(States, CoherentPoles) {
  const auto up = css_state<double>(50, 0.0, 1.3);
  EXPECT_NEAR(std::abs(up.block(0)(0, 0)), 1.0, 1e-14);
  const auto down = css_state<double>(50, kPi, 2.0);
  EXPECT_NEAR(probabilities(down).at(HalfInt::from_int(25), HalfInt::from_int(-25)), 1.0, 1e-12);
}

TEST(States, CoherentEquatorIsBinomial) {
  const auto s = css_state<double>(50, kPi / 2, 0.0);
  const auto p = probabilities(s);
  for (int m = -25; m <= 25; ++m) {
    const double expect = dicke::testing::binomial(50, 25 + m) / std::pow(2.0, 50);
    ASSERT_NEAR(p.at(HalfInt::from_int(25), HalfInt::from_int(m)), expect, 1e-14) << m;
  }
}

TEST(States, CoherentMatchesProductState) {
  // The collective amplitudes must reproduce the product state of N identical qubits.
  for (int n : {1, 3, 4}) {
    for (double theta : {0.3, 1.1, 2.7}) {
      for (double phi : {0.0, 0.9, 4.0}) {
        const auto s = css_state<double>(n, theta, phi);
        const auto full = oracle::full_product_css(n, theta, phi);
        const double dev = max_deviation(summarize(s), oracle::extract_collective(full));
        EXPECT_LT(dev, 1e-12) << n << " " << theta << " " << phi;
        EXPECT_NEAR(expval(s, Observable::Jz).real(), n / 2.0 * std::cos(theta), 1e-12);
      }
    }
  }
}

TEST(States, CoherentLargeNStaysNormalized) {
  const auto s = css_state<double>(1000, 1.0, 0.5);
  EXPECT_TRUE(s.block(0).allFinite());
  EXPECT_NEAR(s.trace().real(), 1.0, 1e-12);
  EXPECT_NEAR(expval(s, Observable::Jz).real(), 500 * std::cos(1.0), 1e-9);
}

TEST(States, CoherentRejectsOutOfRangeAngles) {
  EXPECT_THROW(css_state<double>(4, -0.1, 0.0), DomainError);
  EXPECT_THROW(css_state<double>(4, 3.2, 0.0), DomainError);
  EXPECT_THROW(css_state<double>(4, 1.0, 2 * kPi), DomainError);
  EXPECT_THROW(css_state<double>(4, 1.0, -0.5), DomainError);
}

TEST(States, InvariantsHoldForCoherentStates) {
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(check_invariants(css_state<double>(n, 0.7, 5.1)).ok());
}

TEST(States, DenseExport) {
  const auto g = ground_state<double>(3);
  const auto d = g.dense();
  ASSERT_EQ(d.rows(), 6);
  EXPECT_EQ(d(3, 3), std::complex<double>(1));
  EXPECT_EQ(d.cwiseAbs().sum(), 1.0);
}
