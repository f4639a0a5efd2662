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

#include "monet/model.hpp"

#include <algorithm>
#include <cmath>

#include "monet/error.hpp"
#include "monet/rng.hpp"

namespace monet {

namespace {

void fill_uniform(Matrix& m, Rng& rng, double scale) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rng.uniform(-scale, scale);
}

void fill_uniform(Vector& v, Rng& rng, double scale) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = rng.uniform(-scale, scale);
}
}  // namespace

void TrainConfig::validate() const {
  if (learning_rate <= 0.0) throw ConfigError("learning_rate must be > 0");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw ConfigError("lambda must lie in [0, 1]");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ConfigError("alpha must lie in (0, 1]");
  if (x_max <= 0.0) throw ConfigError("x_max must be > 0");
  if (accum_init <= 0.0) throw ConfigError("accum_init must be > 0");
  if (batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (epochs < 0) throw ConfigError("epochs must be >= 0");
  if (dim < 1) throw ConfigError("dim must be >= 1");
  if (variant != Variant::glove && meta_dim < 1)
    throw ConfigError("metadata variants need meta_dim >= 1");
}

Matrix ModelState::metadata_embedding() const {
  if (!has_metadata() || metadata.size() == 0) return Matrix(center.rows(), 0);
  return metadata * (meta_center + meta_context);
}

ModelState init_model(NodeId n, int d, int m, int d_z,
                      const TrainConfig& config) {
  if (n < 1 || d < 1) throw ConfigError("init_model: n and d must be >= 1");
  const bool meta = config.variant != Variant::glove;
  if (meta && (m < 1 || d_z < 1))
    throw ConfigError("init_model: metadata variants need m, d_z >= 1");

  ModelState s;
  s.variant = config.variant;
  s.lambda = config.lambda;

  Rng rng(derive_seed(config.seed, 0x1417));
  s.center.resize(n, d);
  s.context.resize(n, d);
  s.center_bias.resize(n);
  s.context_bias.resize(n);
  fill_uniform(s.center, rng, config.init_scale);
  fill_uniform(s.context, rng, config.init_scale);
  fill_uniform(s.center_bias, rng, config.init_scale);
  fill_uniform(s.context_bias, rng, config.init_scale);

  const int mm = meta ? m : 0;
  const int zz = meta ? d_z : 0;
  s.meta_center.resize(mm, zz);
  s.meta_context.resize(mm, zz);
  if (meta) {
    const double scale = config.meta_init_scale >= 0.0
                             ? config.meta_init_scale
                             : config.init_scale;
    fill_uniform(s.meta_center, rng, scale);
    fill_uniform(s.meta_context, rng, scale);
  }

  s.center_accum = Matrix::Constant(n, d, config.accum_init);
  s.context_accum = Matrix::Constant(n, d, config.accum_init);
  s.center_bias_accum = Vector::Constant(n, config.accum_init);
  s.context_bias_accum = Vector::Constant(n, config.accum_init);
  s.meta_center_accum = Matrix::Constant(mm, zz, config.accum_init);
  s.meta_context_accum = Matrix::Constant(mm, zz, config.accum_init);
  return s;
}

double smoothing(double count, double x_max, double alpha) {
  if (count >= x_max) return 1.0;
  return std::pow(count / x_max, alpha);
}

namespace {

// Residual of one ordered pair at the current parameters.
inline double pair_residual(const ModelState& s, NodeId i, NodeId j,
                            double count) {
  double r = s.center_bias(i) + s.context_bias(j) +
             s.center.row(i).dot(s.context.row(j)) - std::log(count);
  if (s.has_metadata() && s.metadata.size() != 0) {
    // X_i . Y_j with X = M T1, Y = M T2.
    r += (s.metadata.row(i) * s.meta_center)
             .dot(s.metadata.row(j) * s.meta_context);
  }
  return r;
}

}  // namespace

double pair_loss(const ModelState& state, NodeId i, NodeId j, double count,
                 const TrainConfig& config) {
  if (!(count > 0.0)) throw ConfigError("pair_loss: count must be positive");
  const double e = pair_residual(state, i, j, count);
  return smoothing(count, config.x_max, config.alpha) * e * e;
}

bool BatchGradients::all_finite() const {
  auto rows_ok = [](const std::vector<std::pair<NodeId, Vector>>& rows) {
    for (const auto& [id, g] : rows) {
      (void)id;
      if (!g.allFinite()) return false;
    }
    return true;
  };
  for (const auto& [id, g] : center_bias) {
    (void)id;
    if (!std::isfinite(g)) return false;
  }
  for (const auto& [id, g] : context_bias) {
    (void)id;
    if (!std::isfinite(g)) return false;
  }
  return rows_ok(center_rows) && rows_ok(context_rows) &&
         meta_center.allFinite() && meta_context.allFinite() &&
         std::isfinite(loss);
}

BatchGradients batch_gradients(const ModelState& state,
                               const std::vector<CoocExample>& batch,
                               const TrainConfig& config) {
  if (batch.empty()) throw ConfigError("batch_gradients: empty batch");
  const bool meta = state.has_metadata() && state.metadata.size() != 0;
  const int d = state.dim();
  const int dz = state.meta_dim();
  const int m = static_cast<int>(state.meta_center.rows());

  BatchGradients g;
  g.meta_center = Matrix::Zero(m, dz);
  g.meta_context = Matrix::Zero(m, dz);

  // Row gradients accumulate into slots, merged per touched row.
  std::vector<std::pair<NodeId, Vector>> crow, xrow;
  std::vector<std::pair<NodeId, double>> cbias, xbias;
  auto slot = [](std::vector<std::pair<NodeId, Vector>>& rows, NodeId id,
                 int width) -> Vector& {
    for (auto& [rid, v] : rows)
      if (rid == id) return v;
    rows.emplace_back(id, Vector::Zero(width));
    return rows.back().second;
  };
  auto bias_slot = [](std::vector<std::pair<NodeId, double>>& slots,
                      NodeId id) -> double& {
    for (auto& [rid, v] : slots)
      if (rid == id) return v;
    slots.emplace_back(id, 0.0);
    return slots.back().second;
  };

  for (const auto& ex : batch) {
    if (!(ex.count > 0.0))
      throw ConfigError("batch_gradients: count must be positive");
    const double w = smoothing(ex.count, config.x_max, config.alpha);
    const double e = pair_residual(state, ex.i, ex.j, ex.count);
    const double common = 2.0 * w * e;
    g.loss += w * e * e;

    slot(crow, ex.i, d).noalias() += common * state.context.row(ex.j).transpose();
    slot(xrow, ex.j, d).noalias() += common * state.center.row(ex.i).transpose();
    bias_slot(cbias, ex.i) += common;
    bias_slot(xbias, ex.j) += common;

    if (meta) {
      // d(X_i . Y_j)/dT1 = M_i (T2^T M_j)^T and symmetrically for T2.
      const Eigen::RowVectorXd yi = state.metadata.row(ex.j) * state.meta_context;
      const Eigen::RowVectorXd xi = state.metadata.row(ex.i) * state.meta_center;
      g.meta_center.noalias() +=
          common * state.metadata.row(ex.i).transpose() * yi;
      g.meta_context.noalias() +=
          common * state.metadata.row(ex.j).transpose() * xi;
    }
  }

  auto by_id = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(crow.begin(), crow.end(), by_id);
  std::sort(xrow.begin(), xrow.end(), by_id);
  std::sort(cbias.begin(), cbias.end(), by_id);
  std::sort(xbias.begin(), xbias.end(), by_id);
  g.center_rows = std::move(crow);
  g.context_rows = std::move(xrow);
  g.center_bias = std::move(cbias);
  g.context_bias = std::move(xbias);
  return g;
}

std::pair<Matrix, Matrix> combined_embedding(const ModelState& state) {
  Matrix w = state.center + state.context;
  return {std::move(w), state.metadata_embedding()};
}

Matrix metadata_importance(const ModelState& state) {
  if (!state.has_metadata())
    throw ConfigError("metadata_importance: variant has no metadata");
  return state.meta_center * state.meta_context.transpose();
}

Matrix random_embedding(NodeId n, int d, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x7a2d01));
  Matrix m(n, d);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.normal();
  return m;
}

}  // namespace monet
