// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "dicke/error.hpp"
#include "dicke/operator.hpp"

namespace dicke {

/// Collective density matrix rho_C = (+)_j rho_j in the Dicke basis.
///
/// Blocks are activated lazily: a block that no process has populated is absent
/// and counts as exactly zero. Element (k, k') of block b is rho_{j m m'} with
/// j = N/2 - b, m = j - k, m' = j - k'.
template <typename Real = double>
class CollectiveState {
 public:
  using Scalar = std::complex<Real>;
  using Matrix = ComplexMatrix<Real>;

  CollectiveState(LedgerPtr ledger, std::vector<std::optional<Matrix>> blocks,
                  bool conditioned = false)
      : ledger_(std::move(ledger)), blocks_(std::move(blocks)), conditioned_(conditioned) {
    if (blocks_.size() != ledger_->size()) {
      throw DomainError("CollectiveState: block count does not match ledger");
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!blocks_[b]) continue;
      const int dim = (*ledger_)[b].dim;
      if (blocks_[b]->rows() != dim || blocks_[b]->cols() != dim) {
        throw DomainError("CollectiveState: block " + std::to_string(b) + " has wrong dimension");
      }
    }
  }

  const BlockLedger& ledger() const { return *ledger_; }
  const LedgerPtr& ledger_ptr() const { return ledger_; }
  int n_particles() const { return ledger_->n_particles(); }
  std::size_t size() const { return blocks_.size(); }

  bool is_active(std::size_t b) const { return b < blocks_.size() && blocks_[b].has_value(); }
  const Matrix& block(std::size_t b) const {
    if (!is_active(b)) throw DomainError("CollectiveState: block " + std::to_string(b) + " is inactive");
    return *blocks_[b];
  }
  const std::vector<std::optional<Matrix>>& blocks() const { return blocks_; }

  std::vector<std::size_t> active_blocks() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      if (blocks_[b]) out.push_back(b);
    return out;
  }

  /// True after a non-unitary (R_PLUS / R_MINUS type) gate followed by renormalization.
  bool conditioned() const { return conditioned_; }

  Scalar trace() const {
    Scalar t(0);
    for (const auto& blk : blocks_)
      if (blk) t += blk->trace();
    return t;
  }

  /// Dense matrix over the whole collective space, block after block.
  Matrix dense() const {
    const int dim = ledger_->collective_dim();
    Matrix out = Matrix::Zero(dim, dim);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!blocks_[b]) continue;
      const auto& blk = (*ledger_)[b];
      out.block(blk.offset, blk.offset, blk.dim, blk.dim) = *blocks_[b];
    }
    return out;
  }

 private:
  LedgerPtr ledger_;
  std::vector<std::optional<Matrix>> blocks_;
  bool conditioned_ = false;
};

/// Deviation of a state from a valid density matrix.
struct InvariantReport {
  double trace_error = 0;        // |tr rho - 1|
  double hermiticity_error = 0;  // max |rho_j - rho_j^dagger|
  double min_eigenvalue = 0;     // smallest eigenvalue over active blocks

  bool ok(double trace_tol = 1e-12, double herm_tol = 1e-12, double psd_tol = 1e-10) const {
    return trace_error <= trace_tol && hermiticity_error <= herm_tol &&
           min_eigenvalue >= -psd_tol;
  }
};

template <typename Real>
InvariantReport check_invariants(const CollectiveState<Real>& state) {
  InvariantReport report;
  report.trace_error = static_cast<double>(std::abs(state.trace() - std::complex<Real>(1)));
  double min_eig = 1;
  for (std::size_t b : state.active_blocks()) {
    const auto& m = state.block(b);
    report.hermiticity_error = std::max(
        report.hermiticity_error, static_cast<double>((m - m.adjoint()).cwiseAbs().maxCoeff()));
    const ComplexMatrix<Real> herm = (m + m.adjoint()) / Real(2);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(herm, Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, static_cast<double>(es.eigenvalues().minCoeff()));
  }
  report.min_eigenvalue = min_eig;
  return report;
}

/// Pure state vector psi placed in block b as |psi><psi|.
template <typename Real>
CollectiveState<Real> pure_block_state(const LedgerPtr& ledger, std::size_t b,
                                       const ComplexVector<Real>& psi) {
  std::vector<std::optional<ComplexMatrix<Real>>> blocks(ledger->size());
  blocks[b] = psi * psi.adjoint();
  return CollectiveState<Real>(ledger, std::move(blocks));
}

}  // namespace dicke
