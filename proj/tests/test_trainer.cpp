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

#include <doctest.h>

#include <cmath>

#include "monet/error.hpp"
#include "monet/trainer.hpp"
#include "test_util.hpp"

using namespace monet;

namespace {

struct Fixture {
  Graph graph = testutil::toy_sbm(20, 0.35, 0.05, 8);
  Matrix metadata = testutil::one_hot_labels(20);
  CooccurrenceStore cooc;

  Fixture() {
    const WalkCorpus corpus = generate_walks(graph, 6, 12, 44);
    cooc = build_cooccurrence(corpus, 5);
  }

  TrainConfig config(Variant v, double lambda) const {
    TrainConfig c;
    c.variant = v;
    c.dim = 6;
    c.meta_dim = v == Variant::glove ? 0 : 2;
    c.epochs = 3;
    c.batch_size = 32;
    c.seed = 17;
    c.lambda = lambda;
    return c;
  }
};

bool states_identical(const ModelState& a, const ModelState& b) {
  return (a.center.array() == b.center.array()).all() &&
         (a.context.array() == b.context.array()).all() &&
         (a.center_bias.array() == b.center_bias.array()).all() &&
         (a.context_bias.array() == b.context_bias.array()).all() &&
         (a.meta_center.array() == b.meta_center.array()).all() &&
         (a.meta_context.array() == b.meta_context.array()).all() &&
         (a.center_accum.array() == b.center_accum.array()).all() &&
         (a.context_accum.array() == b.context_accum.array()).all();
}

}  // namespace

TEST_CASE("zero epochs returns the initialized state") {
  Fixture f;
  TrainConfig c = f.config(Variant::monet, 1.0);
  c.epochs = 0;
  const ModelState trained = train(f.cooc, &f.metadata, c, f.graph.node_count);
  ModelState fresh = init_model(f.graph.node_count, c.dim, 2, 2, c);
  fresh.metadata = f.metadata;
  CHECK(states_identical(trained, fresh));
}

TEST_CASE("metadata variants require a metadata matrix") {
  Fixture f;
  CHECK_THROWS_AS(
      train(f.cooc, nullptr, f.config(Variant::monet, 1.0), f.graph.node_count),
      ConfigError);
  CHECK_THROWS_AS(train(f.cooc, nullptr, f.config(Variant::glove_meta, 0.0),
                        f.graph.node_count),
                  ConfigError);
}

TEST_CASE("empty store is rejected") {
  Fixture f;
  CooccurrenceStore empty;
  CHECK_THROWS_AS(
      train(empty, nullptr, f.config(Variant::glove, 0.0), f.graph.node_count),
      ConfigError);
}

TEST_CASE("training is deterministic for a fixed seed") {
  Fixture f;
  const TrainConfig c = f.config(Variant::glove, 0.0);
  const ModelState a = train(f.cooc, nullptr, c, f.graph.node_count);
  const ModelState b = train(f.cooc, nullptr, c, f.graph.node_count);
  CHECK(states_identical(a, b));
}

TEST_CASE("monet at lambda 0 reproduces glove_meta bit for bit") {
  Fixture f;
  const ModelState meta = train(f.cooc, &f.metadata,
                                f.config(Variant::glove_meta, 0.0),
                                f.graph.node_count);
  const ModelState relaxed = train(f.cooc, &f.metadata,
                                   f.config(Variant::monet, 0.0),
                                   f.graph.node_count);
  CHECK(states_identical(meta, relaxed));
}

TEST_CASE("glove step without metadata is the plain adaptive-gradient step") {
  Fixture f;
  TrainConfig c = f.config(Variant::glove, 0.0);
  ModelState s = init_model(f.graph.node_count, c.dim, 0, 0, c);
  ModelState expect = s;
  const std::vector<CoocExample> batch = {{0, 1, 2.0}, {3, 2, 1.5}};
  const BatchGradients g = batch_gradients(expect, batch, c);
  train_step(s, batch, c);

  for (const auto& [id, grad] : g.center_rows) {
    for (int col = 0; col < c.dim; ++col) {
      const double accum = 1e-8 + grad(col) * grad(col);
      const double want = expect.center(id, col) -
                          c.learning_rate * grad(col) / std::sqrt(accum);
      CHECK(s.center(id, col) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  // Untouched rows do not move.
  CHECK((s.center.row(10).array() == expect.center.row(10).array()).all());
}

TEST_CASE("monet lambda 1 keeps post-step leakage at rounding error") {
  Fixture f;
  TrainConfig c = f.config(Variant::monet, 1.0);
  c.epochs = 2;
  int checked = 0;
  TrainOptions opts;
  opts.step_observer = [&](int, const ModelState& s) {
    const Matrix z = s.metadata_embedding();
    const Matrix w = s.center + s.context;
    const double rel = std::sqrt(relative_leakage(z, w));
    CHECK(rel <= 1e-6);
    ++checked;
  };
  train(f.cooc, &f.metadata, c, f.graph.node_count, opts);
  CHECK(checked > 10);
}

TEST_CASE("transform updates ignore the relaxation level") {
  Fixture f;
  TrainConfig c1 = f.config(Variant::monet, 1.0);
  TrainConfig c0 = f.config(Variant::monet, 0.0);
  ModelState a = init_model(f.graph.node_count, c1.dim, 2, 2, c1);
  a.metadata = f.metadata;
  a.lambda = 1.0;
  ModelState b = init_model(f.graph.node_count, c0.dim, 2, 2, c0);
  b.metadata = f.metadata;
  b.lambda = 0.0;

  const std::vector<CoocExample> batch = {{0, 25, 2.0}, {3, 12, 0.5},
                                          {7, 30, 4.0}};
  train_step(a, batch, c1);
  train_step(b, batch, c0);
  CHECK((a.meta_center.array() == b.meta_center.array()).all());
  CHECK((a.meta_context.array() == b.meta_context.array()).all());
  CHECK((a.center_bias.array() == b.center_bias.array()).all());
}

TEST_CASE("epoch losses trend downward for glove") {
  Fixture f;
  TrainConfig c = f.config(Variant::glove, 0.0);
  c.epochs = 12;
  std::vector<double> losses;
  TrainOptions opts;
  opts.epoch_logger = [&](const EpochLog& log) { losses.push_back(log.loss); };
  train(f.cooc, nullptr, c, f.graph.node_count, opts);
  REQUIRE(losses.size() == 12);
  auto median3 = [](double a, double b, double cc) {
    return std::max(std::min(a, b), std::min(std::max(a, b), cc));
  };
  const double early = median3(losses[0], losses[1], losses[2]);
  const double late = median3(losses[9], losses[10], losses[11]);
  CHECK(late < early);
}

TEST_CASE("non-finite gradients abort with diagnostics") {
  Fixture f;
  TrainConfig c = f.config(Variant::glove, 0.0);
  ModelState s = init_model(f.graph.node_count, c.dim, 0, 0, c);
  s.center(0, 0) = std::numeric_limits<double>::infinity();
  const std::vector<CoocExample> batch = {{0, 1, 2.0}};
  CHECK_THROWS_AS(train_step(s, batch, c), NumericalError);
}

TEST_CASE("monet training needs the projected state to stay finite") {
  // End-to-end smoke: a full monet run leaves every parameter finite and
  // the combined embedding orthogonal to the metadata embedding.
  Fixture f;
  const ModelState s = train(f.cooc, &f.metadata,
                             f.config(Variant::monet, 1.0),
                             f.graph.node_count);
  CHECK(s.center.allFinite());
  CHECK(s.context.allFinite());
  auto [w, z] = combined_embedding(s);
  CHECK(std::sqrt(relative_leakage(z, w)) <= 1e-6);
}

TEST_CASE("single-column metadata keeps the invariant through training") {
  // The scalar-transform fast path (fixed projection direction) must hold
  // the post-step invariant exactly like the general path.
  Fixture f;
  Matrix column = Matrix::Zero(f.graph.node_count, 1);
  for (int k = 0; k < 6; ++k) column(3 * k, 0) = 2.0 + k;  // sparse support
  TrainConfig c = f.config(Variant::monet, 1.0);
  c.meta_dim = 1;
  c.epochs = 2;
  int checked = 0;
  TrainOptions opts;
  opts.step_observer = [&](int, const ModelState& s) {
    CHECK(std::sqrt(relative_leakage(s.metadata_embedding(),
                                     s.center + s.context)) <= 1e-6);
    ++checked;
  };
  const ModelState s = train(f.cooc, &column, c, f.graph.node_count, opts);
  CHECK(checked > 10);
  // Rows outside the metadata support keep training normally.
  CHECK(s.center.allFinite());
  auto [w, z] = combined_embedding(s);
  CHECK(std::sqrt(relative_leakage(z, w)) <= 1e-6);
}
