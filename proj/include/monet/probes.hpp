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

#include <cstdint>
#include <utility>
#include <vector>

#include "monet/types.hpp"

namespace monet {

/// Disjoint cover of [0, n): round-half-up(p * n) train ids, rest test.
std::pair<std::vector<NodeId>, std::vector<NodeId>> split_nodes(
    NodeId n, double p, std::uint64_t seed);

/// As above, but resampled (with a warning) until the train side contains
/// at least two classes and the test side is non-empty; throws after 100
/// attempts.
std::pair<std::vector<NodeId>, std::vector<NodeId>> split_nodes_stratified(
    const std::vector<int>& labels, double p, std::uint64_t seed);

/// L2-regularized logistic classifier fit by gradient descent (with
/// backtracking line search) to gradient norm < 1e-6 or the iteration cap.
/// Stands in for the linear max-margin probe.
class LinearProbe {
 public:
  LinearProbe(const Matrix& features, const std::vector<int>& labels,
              double reg = 1e-2, int max_iters = 500);
  int predict(const Eigen::Ref<const Eigen::RowVectorXd>& x) const;
  double accuracy(const Matrix& features, const std::vector<int>& labels) const;

 private:
  Vector weights_;
  double intercept_ = 0.0;
  int positive_label_ = 1;
  Eigen::RowVectorXd feature_mean_;
  Eigen::RowVectorXd feature_scale_;
};

/// RBF-kernel ridge classifier on +-1 labels with a sign readout; the
/// nonlinear counterpart of LinearProbe. gamma <= 0 selects 1/d.
class KernelProbe {
 public:
  KernelProbe(const Matrix& features, const std::vector<int>& labels,
              double gamma = 0.0, double reg = 1e-3);
  int predict(const Eigen::Ref<const Eigen::RowVectorXd>& x) const;
  double accuracy(const Matrix& features, const std::vector<int>& labels) const;

 private:
  Matrix support_;
  Vector alpha_;
  double gamma_ = 0.0;
  int positive_label_ = 1;
  Eigen::RowVectorXd feature_mean_;
  Eigen::RowVectorXd feature_scale_;
};

/// Train-on-split / score-on-rest accuracy for one probe family.
enum class ProbeKind { linear, nonlinear };

double probe_split_accuracy(const Matrix& embedding,
                            const std::vector<int>& labels, double p,
                            std::uint64_t seed, ProbeKind kind);

}  // namespace monet
