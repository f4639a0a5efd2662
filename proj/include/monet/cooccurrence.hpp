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
#include <unordered_map>
#include <vector>

#include "monet/walks.hpp"

namespace monet {

struct CoocEntry {
  NodeId i;
  NodeId j;
  double weight;
};

/// Sparse symmetric positive weights. Only the upper triangle (i < j) is
/// stored; lookups mirror the missing half.
class CooccurrenceStore {
 public:
  void add(NodeId i, NodeId j, double w);
  double at(NodeId i, NodeId j) const;
  size_t pair_count() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  NodeId max_node() const { return max_node_; }

  /// Upper-triangle entries sorted by (i, j); deterministic for a given
  /// insertion history.
  std::vector<CoocEntry> entries() const;

  /// Both mirror halves of every stored weight (sum = 2x upper triangle).
  double total_mass() const;

  static CooccurrenceStore from_entries(const std::vector<CoocEntry>& entries);

 private:
  static std::uint64_t key(NodeId i, NodeId j) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
  }
  std::unordered_map<std::uint64_t, double> weights_;
  NodeId max_node_ = -1;
};

/// GloVe-style context counting: every ordered pair at distance k <= window
/// inside a walk contributes 1/k, accumulated symmetrically. Pairs with
/// i == j are skipped.
CooccurrenceStore build_cooccurrence(const WalkCorpus& corpus, int window);

}  // namespace monet
