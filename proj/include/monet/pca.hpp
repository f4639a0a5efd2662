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

#include "monet/error.hpp"
#include "monet/types.hpp"

namespace monet {

/// Rows centered, projected onto the top-2 principal directions. Each
/// direction's largest-magnitude entry is made positive so repeated runs
/// (and plots built from them) are identical.
template <class Derived>
Matrix pca_2d(const Eigen::MatrixBase<Derived>& W) {
  if (W.rows() < 2) throw DimensionError("pca_2d: need at least 2 rows");
  if (W.cols() < 2) throw DimensionError("pca_2d: need at least 2 columns");

  Eigen::MatrixXd centered = W;
  centered.rowwise() -= centered.colwise().mean();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  Eigen::MatrixXd directions = svd.matrixV().leftCols(2);
  for (Eigen::Index c = 0; c < 2; ++c) {
    Eigen::Index imax = 0;
    directions.col(c).cwiseAbs().maxCoeff(&imax);
    if (directions(imax, c) < 0.0) directions.col(c) = -directions.col(c);
  }
  return centered * directions;
}

}  // namespace monet
