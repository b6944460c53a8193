// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dicke/ledger.hpp"

#include <string>

#include "dicke/error.hpp"

namespace dicke {

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this line
  }
  return result;
}

}  // namespace

BigInt degeneracy(int n_particles, HalfInt j) {
  if (n_particles < 1 || j.twice() < 0 || j.twice() > n_particles ||
      (n_particles - j.twice()) % 2 != 0) {
    throw DomainError("degeneracy: invalid pair N=" + std::to_string(n_particles) +
                      ", j=" + j.str());
  }
  // N!(2j+1)/((N/2-j)!(N/2+j+1)!) = C(N, N/2-j) (2j+1) / (N/2+j+1)
  const int lower = (n_particles - j.twice()) / 2;
  const int upper = (n_particles + j.twice()) / 2 + 1;
  BigInt d = binomial(n_particles, lower) * (j.twice() + 1);
  return d / upper;
}

BlockLedger::BlockLedger(int n_particles) : n_(n_particles) {
  if (n_particles < 1) {
    throw DomainError("build_ledger: need at least one particle, got " +
                      std::to_string(n_particles));
  }
  int offset = 0;
  for (int two_j = n_particles; two_j >= 0; two_j -= 2) {
    Block block;
    block.j = HalfInt::from_twice(two_j);
    block.dim = two_j + 1;
    block.degeneracy = degeneracy(n_particles, block.j);
    block.offset = offset;
    offset += block.dim;
    blocks_.push_back(std::move(block));
  }
  collective_dim_ = offset;
}

std::optional<std::size_t> BlockLedger::index_of(HalfInt j) const {
  const int diff = n_ - j.twice();
  if (j.twice() < 0 || diff < 0 || diff % 2 != 0) return std::nullopt;
  return static_cast<std::size_t>(diff / 2);
}

LedgerPtr build_ledger(int n_particles) {
  return std::make_shared<const BlockLedger>(n_particles);
}

}  // namespace dicke
