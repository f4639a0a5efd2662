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

#include <set>

#include "monet/error.hpp"
#include "monet/model.hpp"
#include "monet/probes.hpp"
#include "monet/rng.hpp"

using namespace monet;

namespace {

// Balanced two-cluster Gaussian data, linearly separable when the gap is
// large.
std::pair<Matrix, std::vector<int>> two_clusters(int per_class, double gap,
                                                 std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0xc1a5));
  Matrix x(2 * per_class, 4);
  std::vector<int> y(static_cast<size_t>(2 * per_class));
  for (int i = 0; i < 2 * per_class; ++i) {
    const int label = i < per_class ? 0 : 1;
    y[static_cast<size_t>(i)] = label;
    for (int j = 0; j < 4; ++j)
      x(i, j) = rng.normal() + (label == 0 ? -gap : gap) * (j == 0 ? 1.0 : 0.0);
  }
  return {std::move(x), std::move(y)};
}

std::pair<Matrix, std::vector<int>> xor_pattern(int per_quadrant,
                                                std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x0e0e));
  const int n = 4 * per_quadrant;
  Matrix x(n, 2);
  std::vector<int> y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int quadrant = i % 4;
    const double sx = quadrant % 2 == 0 ? 1.0 : -1.0;
    const double sy = quadrant / 2 == 0 ? 1.0 : -1.0;
    x(i, 0) = sx * (1.0 + 0.2 * rng.normal());
    x(i, 1) = sy * (1.0 + 0.2 * rng.normal());
    y[static_cast<size_t>(i)] = (sx * sy > 0) ? 1 : 0;
  }
  return {std::move(x), std::move(y)};
}

}  // namespace

TEST_CASE("split sizes use round-half-up") {
  const auto [train, test] = split_nodes(1107, 0.5, 3);
  CHECK(train.size() == 554);
  CHECK(test.size() == 553);
  std::set<NodeId> all(train.begin(), train.end());
  all.insert(test.begin(), test.end());
  CHECK(all.size() == 1107);
}

TEST_CASE("the p grid produces nine distinct splits") {
  for (int k = 1; k <= 9; ++k) {
    const double p = k / 10.0;
    const auto [train, test] = split_nodes(200, p, 7);
    CHECK(train.size() ==
          static_cast<size_t>(std::floor(p * 200.0 + 0.5)));
    CHECK(train.size() + test.size() == 200);
  }
}

TEST_CASE("splits are reproducible from the seed") {
  const auto a = split_nodes(50, 0.3, 12);
  const auto b = split_nodes(50, 0.3, 12);
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
}

TEST_CASE("degenerate fractions are rejected") {
  CHECK_THROWS_AS(split_nodes(10, 0.0, 1), ConfigError);
  CHECK_THROWS_AS(split_nodes(10, 1.0, 1), ConfigError);
}

TEST_CASE("linear probe separates well-separated clusters") {
  const auto [x, y] = two_clusters(60, 6.0, 5);
  LinearProbe probe(x, y);
  CHECK(probe.accuracy(x, y) == doctest::Approx(1.0));
}

TEST_CASE("probes refuse single-class training labels") {
  const Matrix x = random_embedding(10, 3, 2);
  const std::vector<int> y(10, 1);
  CHECK_THROWS_AS(LinearProbe(x, y), ConfigError);
  CHECK_THROWS_AS(KernelProbe(x, y), ConfigError);
}

TEST_CASE("permuted labels score near chance for both probes") {
  // Labels are independent of the features, so accuracy concentrates at
  // 1/2 on the balanced test side.
  const int n = 1200;
  Matrix x = random_embedding(n, 8, 41);
  std::vector<int> y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) y[static_cast<size_t>(i)] = i % 2;
  const double lin =
      probe_split_accuracy(x, y, 0.5, 1234, ProbeKind::linear);
  CHECK(std::abs(lin - 0.5) <= 0.06);
  const double ker =
      probe_split_accuracy(x, y, 0.5, 1234, ProbeKind::nonlinear);
  CHECK(std::abs(ker - 0.5) <= 0.06);
}

TEST_CASE("xor pattern defeats the linear probe but not the kernel probe") {
  const auto [x, y] = xor_pattern(60, 9);
  const double lin = probe_split_accuracy(x, y, 0.5, 77, ProbeKind::linear);
  const double ker = probe_split_accuracy(x, y, 0.5, 77, ProbeKind::nonlinear);
  CHECK(lin <= 0.6);
  CHECK(ker >= 0.95);
}

TEST_CASE("stratified splits retry until both classes appear") {
  // 2 of 40 samples in class 1 and p = 0.1 makes single-class splits likely.
  std::vector<int> labels(40, 0);
  labels[0] = 1;
  labels[1] = 1;
  auto [train, test] = split_nodes_stratified(labels, 0.1, 3);
  std::set<int> classes;
  for (NodeId id : train) classes.insert(labels[static_cast<size_t>(id)]);
  CHECK(classes.size() == 2);
  CHECK_FALSE(test.empty());
}
