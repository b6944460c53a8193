// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <string_view>
#include <vector>

#include "dicke/half_int.hpp"
#include "dicke/operator.hpp"

namespace dicke {

enum class SpinComponent { X, Y, Z, Plus, Minus };

inline bool is_hermitian_component(SpinComponent c) {
  return c != SpinComponent::Plus && c != SpinComponent::Minus;
}

inline std::string_view to_string(SpinComponent c) {
  switch (c) {
    case SpinComponent::X: return "x";
    case SpinComponent::Y: return "y";
    case SpinComponent::Z: return "z";
    case SpinComponent::Plus: return "plus";
    case SpinComponent::Minus: return "minus";
  }
  return "?";
}

/// Spin-j matrix of one component in the m = j, ..., -j basis.
///
///   J_z |j,m>  = m |j,m>
///   J_+ |j,m>  = sqrt((j-m)(j+m+1)) |j,m+1>
///   J_- |j,m>  = sqrt((j+m)(j-m+1)) |j,m-1>
///   J_x = (J_+ + J_-)/2,  J_y = -i (J_+ - J_-)/2
template <typename Real = double>
ComplexMatrix<Real> spin_matrix(SpinComponent c, HalfInt j) {
  using Scalar = std::complex<Real>;
  const int dim = j.twice() + 1;
  const Real jv = Real(j.twice()) / 2;
  ComplexMatrix<Real> out = ComplexMatrix<Real>::Zero(dim, dim);
  if (c == SpinComponent::Z) {
    for (int k = 0; k < dim; ++k) out(k, k) = Scalar(jv - k);
    return out;
  }
  // Row k-1 <- column k is the raising element <m+1|J_+|m> with m = j - k.
  for (int k = 1; k < dim; ++k) {
    const Real m = jv - k;
    const Real up = std::sqrt((jv - m) * (jv + m + 1));
    switch (c) {
      case SpinComponent::Plus: out(k - 1, k) = Scalar(up); break;
      case SpinComponent::Minus: out(k, k - 1) = Scalar(up); break;
      case SpinComponent::X:
        out(k - 1, k) = Scalar(up / 2);
        out(k, k - 1) = Scalar(up / 2);
        break;
      case SpinComponent::Y:
        out(k - 1, k) = Scalar(0, -up / 2);
        out(k, k - 1) = Scalar(0, up / 2);
        break;
      case SpinComponent::Z: break;
    }
  }
  return out;
}

template <typename Real = double>
CollectiveOperator<Real> collective_spin(SpinComponent c, const LedgerPtr& ledger) {
  std::vector<ComplexMatrix<Real>> blocks;
  blocks.reserve(ledger->size());
  for (const auto& block : ledger->blocks()) blocks.push_back(spin_matrix<Real>(c, block.j));
  return CollectiveOperator<Real>(ledger, std::move(blocks), is_hermitian_component(c));
}

template <typename Real = double>
CollectiveOperator<Real> op_jx(const LedgerPtr& l) { return collective_spin<Real>(SpinComponent::X, l); }
template <typename Real = double>
CollectiveOperator<Real> op_jy(const LedgerPtr& l) { return collective_spin<Real>(SpinComponent::Y, l); }
template <typename Real = double>
CollectiveOperator<Real> op_jz(const LedgerPtr& l) { return collective_spin<Real>(SpinComponent::Z, l); }
template <typename Real = double>
CollectiveOperator<Real> op_jplus(const LedgerPtr& l) { return collective_spin<Real>(SpinComponent::Plus, l); }
template <typename Real = double>
CollectiveOperator<Real> op_jminus(const LedgerPtr& l) { return collective_spin<Real>(SpinComponent::Minus, l); }

}  // namespace dicke
