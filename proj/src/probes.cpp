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

#include "monet/probes.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>

#include "monet/error.hpp"
#include "monet/rng.hpp"

namespace monet {

namespace {

std::vector<NodeId> shuffled_ids(NodeId n, Rng& rng) {
  std::vector<NodeId> ids(static_cast<size_t>(n));
  for (NodeId i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
  for (size_t k = ids.size(); k > 1; --k)
    std::swap(ids[k - 1], ids[rng.bounded(k)]);
  return ids;
}

// Labels are arbitrary ints; probes train on the +-1 encoding of the two
// classes present.
std::pair<int, int> two_classes(const std::vector<int>& labels) {
  std::set<int> classes(labels.begin(), labels.end());
  if (classes.size() < 2)
    throw ConfigError("probe needs at least two classes in training labels");
  if (classes.size() > 2)
    throw ConfigError("probes support binary labels only");
  auto it = classes.begin();
  const int a = *it++;
  return {a, *it};
}

Vector signed_labels(const std::vector<int>& labels, int positive) {
  Vector y(static_cast<Eigen::Index>(labels.size()));
  for (size_t i = 0; i < labels.size(); ++i)
    y(static_cast<Eigen::Index>(i)) = labels[i] == positive ? 1.0 : -1.0;
  return y;
}

// Train-set standardization; constant columns get unit scale.
void standardize_stats(const Matrix& x, Eigen::RowVectorXd& mean,
                       Eigen::RowVectorXd& scale) {
  mean = x.colwise().mean();
  Eigen::RowVectorXd var =
      (x.rowwise() - mean).array().square().colwise().mean();
  scale = var.array().sqrt();
  for (Eigen::Index j = 0; j < scale.size(); ++j)
    if (scale(j) <= 0.0) scale(j) = 1.0;
}

Matrix apply_standardize(const Matrix& x, const Eigen::RowVectorXd& mean,
                         const Eigen::RowVectorXd& scale) {
  Matrix out = x.rowwise() - mean;
  out.array().rowwise() /= scale.array();
  return out;
}

}  // namespace

std::pair<std::vector<NodeId>, std::vector<NodeId>> split_nodes(
    NodeId n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("split fraction must be in (0,1)");
  Rng rng(derive_seed(seed, 0x59717));
  std::vector<NodeId> ids = shuffled_ids(n, rng);
  const auto train_size =
      static_cast<size_t>(std::floor(p * static_cast<double>(n) + 0.5));
  std::vector<NodeId> train(ids.begin(), ids.begin() + static_cast<long>(train_size));
  std::vector<NodeId> test(ids.begin() + static_cast<long>(train_size), ids.end());
  return {std::move(train), std::move(test)};
}

std::pair<std::vector<NodeId>, std::vector<NodeId>> split_nodes_stratified(
    const std::vector<int>& labels, double p, std::uint64_t seed) {
  const NodeId n = static_cast<NodeId>(labels.size());
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto split = split_nodes(n, p, derive_seed(seed, 0x5a, attempt));
    std::set<int> train_classes;
    for (NodeId id : split.first) train_classes.insert(labels[static_cast<size_t>(id)]);
    if (train_classes.size() >= 2 && !split.second.empty()) return split;
    std::cerr << "warning: degenerate split (attempt " << attempt
              << "), resampling\n";
  }
  throw NumericalError("split_nodes: no valid split after 100 attempts");
}

LinearProbe::LinearProbe(const Matrix& features, const std::vector<int>& labels,
                         double reg, int max_iters) {
  if (static_cast<size_t>(features.rows()) != labels.size())
    throw DimensionError("probe: features/labels size mismatch");
  const auto [neg, pos] = two_classes(labels);
  (void)neg;
  positive_label_ = pos;
  standardize_stats(features, feature_mean_, feature_scale_);
  const Matrix x = apply_standardize(features, feature_mean_, feature_scale_);
  const Vector y = signed_labels(labels, pos);

  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  weights_ = Vector::Zero(d);
  intercept_ = 0.0;

  auto objective = [&](const Vector& w, double b) {
    // mean log(1 + exp(-y f)) + reg/2 |w|^2, in a softplus form that is
    // stable for large margins.
    const Vector f = x * w + Vector::Constant(n, b);
    double obj = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double margin = -y(i) * f(i);
      obj += margin > 30.0 ? margin : std::log1p(std::exp(margin));
    }
    return obj / static_cast<double>(n) + 0.5 * reg * w.squaredNorm();
  };

  double step = 1.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    const Vector f = x * weights_ + Vector::Constant(n, intercept_);
    // sigma(-y f) = 1 / (1 + exp(y f))
    Vector s(n);
    for (Eigen::Index i = 0; i < n; ++i)
      s(i) = 1.0 / (1.0 + std::exp(y(i) * f(i)));
    const Vector grad_w =
        (x.transpose() * (-(y.array() * s.array())).matrix()) /
            static_cast<double>(n) +
        reg * weights_;
    const double grad_b =
        (-(y.array() * s.array())).sum() / static_cast<double>(n);

    const double grad_norm =
        std::sqrt(grad_w.squaredNorm() + grad_b * grad_b);
    if (grad_norm < 1e-6) break;

    const double f0 = objective(weights_, intercept_);
    step = std::min(step * 2.0, 1e4);
    while (step > 1e-12) {
      const Vector wt = weights_ - step * grad_w;
      const double bt = intercept_ - step * grad_b;
      if (objective(wt, bt) <= f0 - 0.5 * step * grad_norm * grad_norm) {
        weights_ = wt;
        intercept_ = bt;
        break;
      }
      step *= 0.5;
    }
    if (step <= 1e-12) break;
  }
}

int LinearProbe::predict(const Eigen::Ref<const Eigen::RowVectorXd>& x) const {
  const Eigen::RowVectorXd z =
      (x - feature_mean_).array() / feature_scale_.array();
  const double f = (z * weights_)(0) + intercept_;
  return f >= 0.0 ? 1 : -1;
}

double LinearProbe::accuracy(const Matrix& features,
                             const std::vector<int>& labels) const {
  size_t correct = 0;
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    const int truth = labels[static_cast<size_t>(i)] == positive_label_ ? 1 : -1;
    if (predict(features.row(i)) == truth) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(features.rows());
}

KernelProbe::KernelProbe(const Matrix& features, const std::vector<int>& labels,
                         double gamma, double reg) {
  if (static_cast<size_t>(features.rows()) != labels.size())
    throw DimensionError("probe: features/labels size mismatch");
  const auto [neg, pos] = two_classes(labels);
  (void)neg;
  positive_label_ = pos;
  standardize_stats(features, feature_mean_, feature_scale_);
  support_ = apply_standardize(features, feature_mean_, feature_scale_);
  gamma_ = gamma > 0.0 ? gamma : 1.0 / static_cast<double>(features.cols());

  const Eigen::Index n = support_.rows();
  const Vector sq = support_.rowwise().squaredNorm();
  Matrix kernel = -2.0 * (support_ * support_.transpose());
  kernel.colwise() += sq;
  kernel.rowwise() += sq.transpose();
  kernel = (-gamma_ * kernel.array()).exp();
  kernel.diagonal().array() += reg;

  const Vector y = signed_labels(labels, pos);
  alpha_ = Eigen::LDLT<Eigen::MatrixXd>(kernel).solve(y);
}

int KernelProbe::predict(const Eigen::Ref<const Eigen::RowVectorXd>& x) const {
  const Eigen::RowVectorXd z =
      (x - feature_mean_).array() / feature_scale_.array();
  const Vector dist =
      (support_.rowwise() - z).rowwise().squaredNorm();
  const double f = ((-gamma_ * dist.array()).exp() * alpha_.array()).sum();
  return f >= 0.0 ? 1 : -1;
}

double KernelProbe::accuracy(const Matrix& features,
                             const std::vector<int>& labels) const {
  size_t correct = 0;
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    const int truth = labels[static_cast<size_t>(i)] == positive_label_ ? 1 : -1;
    if (predict(features.row(i)) == truth) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(features.rows());
}

namespace {

// Validation-selected ridge strength for the linear probe. On embeddings
// with no linear class signal the cross-validated choice collapses the
// probe toward the majority rule instead of letting it chase split noise.
double cv_linear_accuracy(const Matrix& xtr, const std::vector<int>& ytr,
                          const Matrix& xte, const std::vector<int>& yte) {
  static const double kGrid[] = {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0};
  const Eigen::Index n = xtr.rows();
  const int folds = 3;

  double best_reg = kGrid[0];
  double best_score = -1.0;
  for (double reg : kGrid) {
    double score = 0.0;
    int scored = 0;
    for (int f = 0; f < folds; ++f) {
      std::vector<int> ytrain, yval;
      std::vector<Eigen::Index> itrain, ival;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (i % folds == f) {
          ival.push_back(i);
          yval.push_back(ytr[static_cast<size_t>(i)]);
        } else {
          itrain.push_back(i);
          ytrain.push_back(ytr[static_cast<size_t>(i)]);
        }
      }
      if (std::set<int>(ytrain.begin(), ytrain.end()).size() < 2 ||
          ival.empty())
        continue;
      Matrix xa(static_cast<Eigen::Index>(itrain.size()), xtr.cols());
      for (size_t k = 0; k < itrain.size(); ++k)
        xa.row(static_cast<Eigen::Index>(k)) = xtr.row(itrain[k]);
      Matrix xv(static_cast<Eigen::Index>(ival.size()), xtr.cols());
      for (size_t k = 0; k < ival.size(); ++k)
        xv.row(static_cast<Eigen::Index>(k)) = xtr.row(ival[k]);
      LinearProbe probe(xa, ytrain, reg);
      score += probe.accuracy(xv, yval);
      ++scored;
    }
    if (scored == 0) continue;
    score /= scored;
    // Ties go to the stronger ridge (the simpler probe).
    if (score > best_score + 1e-9) {
      best_score = score;
      best_reg = reg;
    }
  }
  LinearProbe probe(xtr, ytr, best_reg);
  return probe.accuracy(xte, yte);
}

}  // namespace

double probe_split_accuracy(const Matrix& embedding,
                            const std::vector<int>& labels, double p,
                            std::uint64_t seed, ProbeKind kind) {
  auto [train_ids, test_ids] = split_nodes_stratified(labels, p, seed);
  auto gather = [&](const std::vector<NodeId>& ids) {
    Matrix x(static_cast<Eigen::Index>(ids.size()), embedding.cols());
    std::vector<int> y(ids.size());
    for (size_t k = 0; k < ids.size(); ++k) {
      x.row(static_cast<Eigen::Index>(k)) = embedding.row(ids[k]);
      y[k] = labels[static_cast<size_t>(ids[k])];
    }
    return std::pair<Matrix, std::vector<int>>(std::move(x), std::move(y));
  };
  auto [xtr, ytr] = gather(train_ids);
  auto [xte, yte] = gather(test_ids);
  // A single-class test side is possible at extreme p; score what is there.
  if (std::set<int>(yte.begin(), yte.end()).size() < 2) {
    std::cerr << "warning: test split has a single class\n";
  }
  if (kind == ProbeKind::linear) {
    return cv_linear_accuracy(xtr, ytr, xte, yte);
  }
  KernelProbe probe(xtr, ytr);
  return probe.accuracy(xte, yte);
}

}  // namespace monet
