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

struct TrainConfig {
  Variant variant = Variant::glove;
  int dim = 16;             // topology embedding width
  int meta_dim = 0;         // metadata embedding width (0 for plain glove)
  double learning_rate = 0.05;
  int batch_size = 100;
  int epochs = 20;
  double x_max = 100.0;     // loss smoothing cap
  double alpha = 0.75;      // loss smoothing exponent
  double init_scale = 0.1;  // uniform [-s, s] parameter init
  // Transform init half-width; < 0 means follow init_scale. Starting the
  // transforms near zero delays their mutual growth so the topology factors
  // and biases fit the co-occurrence level structure first.
  double meta_init_scale = -1.0;
  // Learning-rate factor for the metadata transforms. Their batch gradients
  // aggregate every pair in the batch onto m x d_z coordinates, so 1/batch
  // puts their effective step on the same per-example footing as the
  // embedding rows (mean reduction over the batch for the dense layers).
  double meta_lr_scale = 1.0;
  double lambda = 1.0;      // projection relaxation
  double rank_tol = 1e-8;   // basis rank cutoff
  double accum_init = 1e-8; // starting value of the gradient accumulators
  std::uint64_t seed = 1;

  void validate() const;
};

/// One training example: ordered pair (i, j) with its co-occurrence weight.
struct CoocExample {
  NodeId i;
  NodeId j;
  double count;
};

/// All learned parameters plus their adaptive-gradient accumulators.
/// Center/context topology embeddings follow the usual factorization
/// convention; the metadata transforms map node attributes into the
/// partitioned metadata-embedding space.
struct ModelState {
  Variant variant = Variant::glove;
  double lambda = 0.0;

  Matrix center;          // n x d
  Matrix context;         // n x d
  Vector center_bias;     // n
  Vector context_bias;    // n
  Matrix meta_center;     // m x d_z transform (center side)
  Matrix meta_context;    // m x d_z transform (context side)

  Matrix center_accum;
  Matrix context_accum;
  Vector center_bias_accum;
  Vector context_bias_accum;
  Matrix meta_center_accum;
  Matrix meta_context_accum;

  // Node attributes the metadata transforms act on; not persisted in
  // checkpoints (re-attached from the metadata file on load).
  Matrix metadata;        // n x m, empty for plain glove

  bool has_metadata() const { return variant != Variant::glove; }
  NodeId node_count() const { return static_cast<NodeId>(center.rows()); }
  int dim() const { return static_cast<int>(center.cols()); }
  int meta_dim() const { return static_cast<int>(meta_center.cols()); }

  /// Summed metadata embedding M (T1 + T2); empty for plain glove.
  Matrix metadata_embedding() const;
};

ModelState init_model(NodeId n, int d, int m, int d_z,
                      const TrainConfig& config);

/// GloVe loss smoothing: (c / x_max)^alpha below the cap, 1 at or above it.
double smoothing(double count, double x_max, double alpha);

/// Weighted squared residual of one ordered pair under the joint loss.
double pair_loss(const ModelState& state, NodeId i, NodeId j, double count,
                 const TrainConfig& config);

/// Analytic gradients of a batch of pair losses. Topology rows are kept
/// sparse (only touched rows appear, sorted by id); metadata-transform
/// gradients are dense but small.
struct BatchGradients {
  std::vector<std::pair<NodeId, Vector>> center_rows;
  std::vector<std::pair<NodeId, Vector>> context_rows;
  std::vector<std::pair<NodeId, double>> center_bias;
  std::vector<std::pair<NodeId, double>> context_bias;
  Matrix meta_center;   // m x d_z
  Matrix meta_context;  // m x d_z
  double loss = 0.0;

  bool all_finite() const;
};

BatchGradients batch_gradients(const ModelState& state,
                               const std::vector<CoocExample>& batch,
                               const TrainConfig& config);

/// (W, Z): summed topology embedding and, when present, summed metadata
/// embedding (Z has zero columns for plain glove).
std::pair<Matrix, Matrix> combined_embedding(const ModelState& state);

/// T1 T2^T, the learned pairwise effect of metadata dimensions on log
/// co-occurrence.
Matrix metadata_importance(const ModelState& state);

/// Seeded i.i.d. standard-normal embedding, the reference baseline.
Matrix random_embedding(NodeId n, int d, std::uint64_t seed);

}  // namespace monet
