/* Copyright (c) 2026 The monet Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <iostream>

#include "monet/error.hpp"
#include "monet/types.hpp"

namespace monet {

/// Orthonormal basis of a metadata-embedding column span, with the
/// relaxation weight that scales the projection it induces.
struct ProjectionBasis {
  Matrix basis;            // n x rank, orthonormal columns
  int rank = 0;
  double tolerance = 1e-8; // relative singular-value cutoff used
  double lambda = 1.0;     // 0 = no projection, 1 = full rejection
  // Rows of `basis` that can be nonzero, ascending. Empty means dense.
  // Zero rows of Z force zero basis rows (every column-span vector inherits
  // them), so sparse metadata yields a sparse projector.
  std::vector<NodeId> support;

  bool sparse() const { return !support.empty(); }
};

/// Basis of span(Z) from a thin SVD. Directions with singular value
/// <= rank_tol * sigma_max are dropped; an all-zero Z yields rank 0
/// (the induced projection degrades to the identity) with a warning.
template <class Derived>
ProjectionBasis orthonormal_basis(const Eigen::MatrixBase<Derived>& Z,
                                  double rank_tol = 1e-8, double lambda = 1.0,
                                  bool warn_rank0 = true) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw ConfigError("projection lambda must lie in [0, 1]");
  if (!Z.allFinite())
    throw NumericalError("orthonormal_basis: non-finite metadata embedding");

  ProjectionBasis out;
  out.tolerance = rank_tol;
  out.lambda = lambda;

  if (Z.cols() == 1) {
    // One-column fast path; the SVD of a vector is its normalization.
    const double norm = Z.norm();
    if (norm > 0.0) {
      out.rank = 1;
      out.basis = Z / norm;
    }
  } else if (Z.cols() > 1) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Z, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? rank_tol * sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) > cutoff && sv(k) > 0.0) ++rank;
    out.rank = rank;
    out.basis = svd.matrixU().leftCols(rank);
  }

  if (out.rank == 0) {
    if (warn_rank0) {
      std::cerr << "warning: metadata embedding has rank 0; "
                   "projection degrades to the identity\n";
    }
    return out;
  }

  // Record the sparsity pattern when it pays off. Zero rows of Z span
  // nothing, so the corresponding basis rows are zeroed outright (the SVD
  // may leave denormal residue there).
  Eigen::Index nonzero = 0;
  for (Eigen::Index i = 0; i < Z.rows(); ++i)
    if (!Z.row(i).isZero(0.0)) ++nonzero;
  if (nonzero * 4 <= Z.rows()) {
    out.support.reserve(static_cast<size_t>(nonzero));
    for (Eigen::Index i = 0; i < Z.rows(); ++i) {
      if (Z.row(i).isZero(0.0)) {
        out.basis.row(i).setZero();
      } else {
        out.support.push_back(static_cast<NodeId>(i));
      }
    }
  }
  return out;
}

/// Relaxed rejection W - lambda * Q (Q^T W). The n x n projector is never
/// formed; cost is O(n * rank * cols). lambda = 0 (or rank 0) returns W
/// unchanged, bit for bit.
template <class Derived>
Matrix project(const Eigen::MatrixBase<Derived>& W,
               const ProjectionBasis& basis) {
  if (basis.rank == 0 || basis.lambda == 0.0) return W;
  if (W.rows() != basis.basis.rows())
    throw DimensionError("project: row count mismatch with basis");
  return W - basis.lambda * (basis.basis * (basis.basis.transpose() * W));
}

/// In-place variant for the training loop; touches only the basis support
/// when it is sparse.
inline void project_in_place(Matrix& W, const ProjectionBasis& basis) {
  if (basis.rank == 0 || basis.lambda == 0.0) return;
  if (W.rows() != basis.basis.rows())
    throw DimensionError("project: row count mismatch with basis");
  if (!basis.sparse()) {
    W.noalias() -= basis.lambda *
                   (basis.basis * (basis.basis.transpose() * W)).eval();
    return;
  }
  Matrix span = Matrix::Zero(basis.rank, W.cols());
  for (NodeId i : basis.support)
    span.noalias() += basis.basis.row(i).transpose() * W.row(i);
  span *= basis.lambda;
  for (NodeId i : basis.support) W.row(i).noalias() -= basis.basis.row(i) * span;
}

/// Squared Frobenius norm of Z^T W: zero iff every topology dimension is
/// linearly uncorrelated with every metadata dimension.
template <class DerivedZ, class DerivedW>
double metadata_leakage(const Eigen::MatrixBase<DerivedZ>& Z,
                        const Eigen::MatrixBase<DerivedW>& W) {
  if (Z.rows() != W.rows())
    throw DimensionError("metadata_leakage: row count mismatch");
  return (Z.transpose() * W).squaredNorm();
}

/// leakage / (|Z|_F |W|_F)^2, the scale-free form used by invariant checks.
/// Returns 0 when either factor is zero.
template <class DerivedZ, class DerivedW>
double relative_leakage(const Eigen::MatrixBase<DerivedZ>& Z,
                        const Eigen::MatrixBase<DerivedW>& W) {
  const double denom = Z.squaredNorm() * W.squaredNorm();
  if (denom == 0.0) return 0.0;
  return metadata_leakage(Z, W) / denom;
}

}  // namespace monet
