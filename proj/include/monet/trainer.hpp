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

#include <functional>
#include <vector>

#include "monet/cooccurrence.hpp"
#include "monet/model.hpp"
#include "monet/projection.hpp"

namespace monet {

/// One adaptive-gradient step over a batch of co-occurrence pairs.
///
/// For the monet variant the step runs the orthogonal training unit:
/// the basis of the current summed metadata embedding is refreshed, the
/// topology gradients are pushed through the relaxed rejection before the
/// adaptive-gradient rule consumes them (accumulators see the projected
/// gradients), and after all parameters move the center/context embeddings
/// are re-projected against the basis of the post-step metadata embedding,
/// so `relative_leakage(Z, U + V)` is at rounding error after every
/// completed step at lambda = 1. Metadata-transform and bias gradients are
/// never projected.
///
/// `cached_basis`, when non-null, is used as the pre-step basis (the caller
/// guarantees it matches the current metadata embedding) and receives the
/// post-step basis, saving one factorization per step inside epoch loops.
///
/// Returns the summed weighted pair loss of the batch at the pre-step
/// parameters.
double train_step(ModelState& state, const std::vector<CoocExample>& batch,
                  const TrainConfig& config,
                  ProjectionBasis* cached_basis = nullptr);

struct EpochLog {
  int epoch = 0;
  double loss = 0.0;
  double seconds = 0.0;
};

struct TrainOptions {
  // Called after every completed step with the global step index.
  std::function<void(int, const ModelState&)> step_observer;
  std::function<void(const EpochLog&)> epoch_logger;
  bool verbose = false;
};

/// Expand a symmetric store into ordered training examples (both
/// directions of every stored pair).
std::vector<CoocExample> cooccurrence_examples(const CooccurrenceStore& cooc);

/// Full training run: seeded epoch shuffles over the ordered nonzero pairs,
/// batched through train_step. `metadata` must be non-null for the
/// glove_meta and monet variants. `node_count` 0 means infer from the
/// inputs (metadata rows, else max co-occurring node + 1).
ModelState train(const CooccurrenceStore& cooc, const Matrix* metadata,
                 const TrainConfig& config, NodeId node_count = 0,
                 const TrainOptions& options = {});

}  // namespace monet
