// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dicke/half_int.hpp"

namespace dicke {

using BigInt = boost::multiprecision::cpp_int;

/// Number of inequivalent spin-j irreps in the product of N spin-1/2 particles,
/// N!(2j+1) / ((N/2-j)! (N/2+j+1)!), in exact integer arithmetic.
/// Throws DomainError unless 0 <= j <= N/2 and N/2 - j is an integer.
BigInt degeneracy(int n_particles, HalfInt j);

/// One irrep block of the collective space.
struct Block {
  HalfInt j;
  int dim = 0;         // 2j + 1
  BigInt degeneracy;   // d_N^j
  int offset = 0;      // first index in the concatenated basis
};

/// j-block structure of the collective Hilbert space for N particles.
///
/// Blocks run from j = N/2 down to j_min (0 for even N, 1/2 for odd N). Inside
/// a block the basis is ordered m = j, j-1, ..., -j, so block index b has
/// j = N/2 - b and row k of that block has m = j - k.
class BlockLedger {
 public:
  explicit BlockLedger(int n_particles);

  int n_particles() const { return n_; }
  std::size_t size() const { return blocks_.size(); }
  std::span<const Block> blocks() const { return blocks_; }
  const Block& operator[](std::size_t b) const { return blocks_[b]; }

  /// Sum of block dimensions, (N+2)^2/4 for even N and (N+3)(N+1)/4 for odd N.
  int collective_dim() const { return collective_dim_; }

  HalfInt j_max() const { return blocks_.front().j; }
  HalfInt j_min() const { return blocks_.back().j; }

  /// Block index holding spin j, if j belongs to this ledger.
  std::optional<std::size_t> index_of(HalfInt j) const;

  bool operator==(const BlockLedger& other) const { return n_ == other.n_; }

 private:
  int n_;
  int collective_dim_ = 0;
  std::vector<Block> blocks_;
};

using LedgerPtr = std::shared_ptr<const BlockLedger>;

/// Throws DomainError for N < 1.
LedgerPtr build_ledger(int n_particles);

}  // namespace dicke
