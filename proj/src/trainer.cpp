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

#include "monet/trainer.hpp"

#include <chrono>
#include <iostream>

#include "monet/error.hpp"
#include "monet/rng.hpp"

namespace monet {

namespace {

// Plain sparse adaptive-gradient application: only touched rows move.
void apply_rows(Matrix& param, Matrix& accum,
                const std::vector<std::pair<NodeId, Vector>>& rows,
                double lr) {
  for (const auto& [id, grad] : rows) {
    auto a = accum.row(id).array();
    a += grad.transpose().array().square();
    param.row(id).array() -= lr * grad.transpose().array() * a.rsqrt();
  }
}

void apply_bias(Vector& param, Vector& accum,
                const std::vector<std::pair<NodeId, double>>& slots,
                double lr) {
  for (const auto& [id, grad] : slots) {
    accum(id) += grad * grad;
    param(id) -= lr * grad / std::sqrt(accum(id));
  }
}

void apply_dense(Matrix& param, Matrix& accum, const Matrix& grad, double lr) {
  if (param.size() == 0) return;
  accum.array() += grad.array().square();
  param.array() -= lr * grad.array() * accum.array().rsqrt();
}

// Projected adaptive-gradient application for one topology matrix.
// The rejected gradient  g' = g - lambda Q (Q^T g)  spreads over the basis
// support even for a sparse batch gradient, and the accumulators absorb g'
// (the motion actually applied). With a dense basis the whole matrix is
// processed in vector form; a sparse basis confines the work to the union
// of touched rows and the support.
void apply_projected_rows(Matrix& param, Matrix& accum,
                          const std::vector<std::pair<NodeId, Vector>>& rows,
                          const ProjectionBasis& basis, double lr) {
  const Eigen::Index n = param.rows();
  const Eigen::Index d = param.cols();

  Matrix corr(basis.rank, d);
  corr.setZero();
  for (const auto& [id, grad] : rows)
    corr.noalias() += basis.basis.row(id).transpose() * grad.transpose();
  corr *= basis.lambda;

  if (!basis.sparse()) {
    Matrix projected(n, d);
    projected.noalias() = basis.basis * (-corr);
    for (const auto& [id, grad] : rows)
      projected.row(id) += grad.transpose();
    accum.array() += projected.array().square();
    param.array() -= lr * projected.array() * accum.array().rsqrt();
    return;
  }

  // Merge the sorted touched-row and support lists; rows outside both keep
  // an exactly zero projected gradient and do not move.
  Eigen::RowVectorXd gperp(d);
  size_t pr = 0, ps = 0;
  while (pr < rows.size() || ps < basis.support.size()) {
    NodeId id;
    bool in_rows = false, in_support = false;
    if (pr < rows.size() &&
        (ps >= basis.support.size() || rows[pr].first <= basis.support[ps])) {
      id = rows[pr].first;
      in_rows = true;
      in_support = ps < basis.support.size() && basis.support[ps] == id;
    } else {
      id = basis.support[ps];
      in_support = true;
    }
    gperp.setZero();
    if (in_rows) gperp = rows[pr].second.transpose();
    if (in_support) gperp.noalias() -= basis.basis.row(id) * corr;
    auto a = accum.row(id).array();
    a += gperp.array().square();
    param.row(id).array() -= lr * gperp.array() * a.rsqrt();
    if (in_rows) ++pr;
    if (in_support) ++ps;
  }
}

}  // namespace

double train_step(ModelState& state, const std::vector<CoocExample>& batch,
                  const TrainConfig& config, ProjectionBasis* cached_basis) {
  BatchGradients grads = batch_gradients(state, batch, config);
  if (!grads.all_finite()) {
    throw NumericalError(
        "train_step: non-finite gradient (variant " + to_string(state.variant) +
        ", batch of " + std::to_string(batch.size()) +
        ", loss=" + std::to_string(grads.loss) + "); lower the learning rate");
  }

  const double lr = config.learning_rate;
  const bool orthogonalize = state.variant == Variant::monet &&
                             state.lambda > 0.0 && state.meta_dim() > 0;

  ProjectionBasis basis;
  if (orthogonalize) {
    if (cached_basis && cached_basis->basis.rows() == state.center.rows())
      basis = std::move(*cached_basis);
    else
      basis = orthonormal_basis(state.metadata_embedding(), config.rank_tol,
                                state.lambda, /*warn_rank0=*/false);
  }

  // Metadata transforms and biases take raw gradients in every variant.
  apply_bias(state.center_bias, state.center_bias_accum, grads.center_bias, lr);
  apply_bias(state.context_bias, state.context_bias_accum, grads.context_bias,
             lr);
  const double meta_lr = lr * config.meta_lr_scale;
  apply_dense(state.meta_center, state.meta_center_accum, grads.meta_center,
              meta_lr);
  apply_dense(state.meta_context, state.meta_context_accum, grads.meta_context,
              meta_lr);

  if (orthogonalize && basis.rank > 0) {
    apply_projected_rows(state.center, state.center_accum, grads.center_rows,
                         basis, lr);
    apply_projected_rows(state.context, state.context_accum,
                         grads.context_rows, basis, lr);
    // The transform update above moved Z; one projection against the fresh
    // basis restores exact post-step orthogonality. With a single scalar
    // transform the direction span(M * t) cannot drift, so the basis is
    // reused as long as the transform sum stays nonzero.
    const bool direction_fixed =
        state.meta_dim() == 1 && state.metadata.cols() == 1 &&
        state.meta_center(0, 0) + state.meta_context(0, 0) != 0.0;
    if (direction_fixed) {
      project_in_place(state.center, basis);
      project_in_place(state.context, basis);
      if (cached_basis) *cached_basis = std::move(basis);
    } else {
      ProjectionBasis post =
          orthonormal_basis(state.metadata_embedding(), config.rank_tol,
                            state.lambda, /*warn_rank0=*/false);
      project_in_place(state.center, post);
      project_in_place(state.context, post);
      if (cached_basis) *cached_basis = std::move(post);
    }
  } else {
    apply_rows(state.center, state.center_accum, grads.center_rows, lr);
    apply_rows(state.context, state.context_accum, grads.context_rows, lr);
    if (orthogonalize && cached_basis) {
      // A rank-0 basis can gain rank once the transforms move; refresh so
      // the cache never wedges the projection off.
      *cached_basis =
          orthonormal_basis(state.metadata_embedding(), config.rank_tol,
                            state.lambda, /*warn_rank0=*/false);
    }
  }
  return grads.loss;
}

std::vector<CoocExample> cooccurrence_examples(const CooccurrenceStore& cooc) {
  std::vector<CoocExample> examples;
  examples.reserve(cooc.pair_count() * 2);
  for (const auto& e : cooc.entries()) {
    examples.push_back({e.i, e.j, e.weight});
    examples.push_back({e.j, e.i, e.weight});
  }
  return examples;
}

ModelState train(const CooccurrenceStore& cooc, const Matrix* metadata,
                 const TrainConfig& config, NodeId node_count,
                 const TrainOptions& options) {
  config.validate();
  const bool meta = config.variant != Variant::glove;
  if (meta && (metadata == nullptr || metadata->size() == 0))
    throw ConfigError("variant " + to_string(config.variant) +
                      " requires a metadata matrix");
  if (cooc.empty()) throw ConfigError("co-occurrence store is empty");

  NodeId n = node_count;
  if (n == 0)
    n = meta ? static_cast<NodeId>(metadata->rows()) : cooc.max_node() + 1;
  if (cooc.max_node() >= n)
    throw DimensionError("co-occurrence references node " +
                         std::to_string(cooc.max_node()) + " but n = " +
                         std::to_string(n));
  if (meta && metadata->rows() != n)
    throw DimensionError("metadata rows != node count");

  const int m = meta ? static_cast<int>(metadata->cols()) : 0;
  ModelState state =
      init_model(n, config.dim, m, meta ? config.meta_dim : 0, config);
  if (meta) state.metadata = *metadata;

  std::vector<CoocExample> examples = cooccurrence_examples(cooc);
  const size_t batch_size = static_cast<size_t>(config.batch_size);

  ProjectionBasis cache;
  ProjectionBasis* cache_ptr = nullptr;
  const bool orthogonalize =
      state.variant == Variant::monet && state.lambda > 0.0 && meta;
  if (orthogonalize && config.epochs > 0) {
    // Training maintains the projected state from the very first batch.
    cache = orthonormal_basis(state.metadata_embedding(), config.rank_tol,
                              state.lambda);
    project_in_place(state.center, cache);
    project_in_place(state.context, cache);
    cache_ptr = &cache;
  }

  int step_index = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng shuffle_rng(derive_seed(config.seed, 0xe90c,
                                static_cast<std::uint64_t>(epoch)));
    for (size_t k = examples.size(); k > 1; --k)
      std::swap(examples[k - 1], examples[shuffle_rng.bounded(k)]);

    double epoch_loss = 0.0;
    std::vector<CoocExample> batch;
    batch.reserve(batch_size);
    for (size_t pos = 0; pos < examples.size(); pos += batch_size) {
      const size_t end = std::min(pos + batch_size, examples.size());
      batch.assign(examples.begin() + static_cast<long>(pos),
                   examples.begin() + static_cast<long>(end));
      epoch_loss += train_step(state, batch, config, cache_ptr);
      if (options.step_observer) options.step_observer(step_index, state);
      ++step_index;
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (options.epoch_logger)
      options.epoch_logger({epoch, epoch_loss, seconds});
    if (options.verbose) {
      std::cerr << "epoch " << epoch << " loss " << epoch_loss << " ("
                << seconds << "s)\n";
    }
  }
  return state;
}

}  // namespace monet
