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

#include "monet/cooccurrence.hpp"

#include <algorithm>
#include <cmath>

#include "monet/error.hpp"

namespace monet {

void CooccurrenceStore::add(NodeId i, NodeId j, double w) {
  if (i == j) throw ConfigError("co-occurrence store rejects i == j");
  if (!(w > 0.0)) throw ConfigError("co-occurrence weights must be positive");
  if (i > j) std::swap(i, j);
  weights_[key(i, j)] += w;
  max_node_ = std::max(max_node_, j);
}

double CooccurrenceStore::at(NodeId i, NodeId j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  auto it = weights_.find(key(i, j));
  return it == weights_.end() ? 0.0 : it->second;
}

std::vector<CoocEntry> CooccurrenceStore::entries() const {
  std::vector<CoocEntry> out;
  out.reserve(weights_.size());
  for (const auto& [k, w] : weights_) {
    out.push_back({static_cast<NodeId>(k >> 32),
                   static_cast<NodeId>(k & 0xffffffffULL), w});
  }
  std::sort(out.begin(), out.end(), [](const CoocEntry& a, const CoocEntry& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return out;
}

double CooccurrenceStore::total_mass() const {
  double mass = 0.0;
  for (const auto& [k, w] : weights_) {
    (void)k;
    mass += 2.0 * w;
  }
  return mass;
}

CooccurrenceStore CooccurrenceStore::from_entries(
    const std::vector<CoocEntry>& entries) {
  CooccurrenceStore store;
  for (const auto& e : entries) store.add(e.i, e.j, e.weight);
  return store;
}

namespace {

// Walks over small id spaces accumulate into a dense upper triangle, which
// avoids hashing in the hot loop; large spaces fall back to the map.
constexpr NodeId kDenseLimit = 4096;

NodeId corpus_max_node(const WalkCorpus& corpus) {
  NodeId m = -1;
  for (const auto& walk : corpus.walks)
    for (NodeId v : walk) m = std::max(m, v);
  return m;
}

}  // namespace

CooccurrenceStore build_cooccurrence(const WalkCorpus& corpus, int window) {
  if (window < 1) throw ConfigError("window must be at least 1");

  CooccurrenceStore store;
  const NodeId max_node = corpus_max_node(corpus);
  if (max_node < 0) return store;

  const NodeId n = max_node + 1;
  if (n <= kDenseLimit) {
    const size_t nn = static_cast<size_t>(n);
    std::vector<double> dense(nn * (nn + 1) / 2, 0.0);
    auto tri = [nn](size_t i, size_t j) {
      // i <= j; row-start offsets of the packed upper triangle.
      return i * nn - i * (i - 1) / 2 + (j - i);
    };
    std::vector<double> inv_k(static_cast<size_t>(window) + 1, 0.0);
    for (int k = 1; k <= window; ++k) inv_k[static_cast<size_t>(k)] = 1.0 / k;

    for (const auto& walk : corpus.walks) {
      const size_t len = walk.size();
      for (size_t p = 0; p < len; ++p) {
        const size_t kmax = std::min(static_cast<size_t>(window), len - 1 - p);
        for (size_t k = 1; k <= kmax; ++k) {
          const NodeId a = walk[p];
          const NodeId b = walk[p + k];
          if (a == b) continue;
          const size_t i = static_cast<size_t>(std::min(a, b));
          const size_t j = static_cast<size_t>(std::max(a, b));
          dense[tri(i, j)] += inv_k[k];
        }
      }
    }
    for (size_t i = 0; i < nn; ++i) {
      for (size_t j = i + 1; j < nn; ++j) {
        const double w = dense[tri(i, j)];
        if (w > 0.0)
          store.add(static_cast<NodeId>(i), static_cast<NodeId>(j), w);
      }
    }
    return store;
  }

  for (const auto& walk : corpus.walks) {
    const size_t len = walk.size();
    for (size_t p = 0; p < len; ++p) {
      const size_t kmax = std::min(static_cast<size_t>(window), len - 1 - p);
      for (size_t k = 1; k <= kmax; ++k) {
        if (walk[p] == walk[p + k]) continue;
        store.add(walk[p], walk[p + k], 1.0 / static_cast<double>(k));
      }
    }
  }
  return store;
}

}  // namespace monet
