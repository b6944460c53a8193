// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dicke/error.hpp"
#include "dicke/ledger.hpp"

namespace dicke {

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

/// Block-diagonal operator O = (+)_j O_j over every block of a ledger.
template <typename Real = double>
class CollectiveOperator {
 public:
  using Scalar = std::complex<Real>;
  using Matrix = ComplexMatrix<Real>;

  CollectiveOperator(LedgerPtr ledger, std::vector<Matrix> blocks, bool hermitian)
      : ledger_(std::move(ledger)), blocks_(std::move(blocks)), hermitian_(hermitian) {
    if (blocks_.size() != ledger_->size()) {
      throw DomainError("CollectiveOperator: block count does not match ledger");
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const int dim = (*ledger_)[b].dim;
      if (blocks_[b].rows() != dim || blocks_[b].cols() != dim) {
        throw DomainError("CollectiveOperator: block " + std::to_string(b) +
                          " has wrong dimension");
      }
    }
  }

  const BlockLedger& ledger() const { return *ledger_; }
  const LedgerPtr& ledger_ptr() const { return ledger_; }
  std::size_t size() const { return blocks_.size(); }
  const Matrix& block(std::size_t b) const { return blocks_[b]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  bool hermitian() const { return hermitian_; }

  CollectiveOperator adjoint() const {
    std::vector<Matrix> out;
    out.reserve(blocks_.size());
    for (const auto& m : blocks_) out.push_back(m.adjoint());
    return CollectiveOperator(ledger_, std::move(out), hermitian_);
  }

  /// Largest |O_j - O_j^dagger| entry over all blocks.
  Real hermiticity_error() const {
    Real err = 0;
    for (const auto& m : blocks_) {
      if (m.size() > 0) err = std::max(err, (m - m.adjoint()).cwiseAbs().maxCoeff());
    }
    return err;
  }

 private:
  LedgerPtr ledger_;
  std::vector<Matrix> blocks_;
  bool hermitian_;
};

namespace detail {

template <typename Real, typename F>
CollectiveOperator<Real> blockwise(const CollectiveOperator<Real>& a,
                                   const CollectiveOperator<Real>& b, bool hermitian, F f) {
  if (!(a.ledger() == b.ledger())) throw DomainError("operator ledgers differ");
  std::vector<ComplexMatrix<Real>> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(f(a.block(k), b.block(k)));
  return CollectiveOperator<Real>(a.ledger_ptr(), std::move(out), hermitian);
}

}  // namespace detail

template <typename Real>
CollectiveOperator<Real> operator+(const CollectiveOperator<Real>& a,
                                   const CollectiveOperator<Real>& b) {
  return detail::blockwise(a, b, a.hermitian() && b.hermitian(),
                           [](const auto& x, const auto& y) { return (x + y).eval(); });
}

template <typename Real>
CollectiveOperator<Real> operator-(const CollectiveOperator<Real>& a,
                                   const CollectiveOperator<Real>& b) {
  return detail::blockwise(a, b, a.hermitian() && b.hermitian(),
                           [](const auto& x, const auto& y) { return (x - y).eval(); });
}

/// Blockwise product. The result is flagged non-Hermitian; use square() for A*A.
template <typename Real>
CollectiveOperator<Real> operator*(const CollectiveOperator<Real>& a,
                                   const CollectiveOperator<Real>& b) {
  return detail::blockwise(a, b, false,
                           [](const auto& x, const auto& y) { return (x * y).eval(); });
}

template <typename Real>
CollectiveOperator<Real> operator*(Real s, const CollectiveOperator<Real>& a) {
  std::vector<ComplexMatrix<Real>> out;
  out.reserve(a.size());
  for (const auto& m : a.blocks()) out.push_back(s * m);
  return CollectiveOperator<Real>(a.ledger_ptr(), std::move(out), a.hermitian());
}

template <typename Real>
CollectiveOperator<Real> operator*(std::complex<Real> s, const CollectiveOperator<Real>& a) {
  std::vector<ComplexMatrix<Real>> out;
  out.reserve(a.size());
  for (const auto& m : a.blocks()) out.push_back(s * m);
  const bool herm = a.hermitian() && s.imag() == Real(0);
  return CollectiveOperator<Real>(a.ledger_ptr(), std::move(out), herm);
}

/// A*A, keeping the Hermitian flag of A.
template <typename Real>
CollectiveOperator<Real> square(const CollectiveOperator<Real>& a) {
  std::vector<ComplexMatrix<Real>> out;
  out.reserve(a.size());
  for (const auto& m : a.blocks()) out.push_back(m * m);
  return CollectiveOperator<Real>(a.ledger_ptr(), std::move(out), a.hermitian());
}

template <typename Real>
CollectiveOperator<Real> commutator(const CollectiveOperator<Real>& a,
                                    const CollectiveOperator<Real>& b) {
  return a * b - b * a;
}

}  // namespace dicke
