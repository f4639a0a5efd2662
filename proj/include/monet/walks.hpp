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
#include <functional>
#include <vector>

#include "monet/graph.hpp"

namespace monet {

struct WalkCorpus {
  std::vector<std::vector<NodeId>> walks;
  int walk_length = 0;      // nodes per walk, start included
  int walks_per_node = 0;
  std::uint64_t seed = 0;
};

/// Uniform random walks, `walks_per_node` from every non-isolated node.
/// Each walk's generator is seeded from (seed, start, walk index), so the
/// corpus does not depend on traversal order.
WalkCorpus generate_walks(const Graph& g, int walks_per_node, int walk_length,
                          std::uint64_t seed);

/// Delete nodes failing `keep` from every walk, preserving the order of the
/// survivors; walks left with fewer than 2 nodes are dropped.
WalkCorpus filter_walks(const WalkCorpus& corpus,
                        const std::function<bool(NodeId)>& keep);

/// Apply `old_to_new` to every node of every walk (entries must be >= 0 for
/// every id that occurs). Used to compact item-only corpora.
WalkCorpus reindex_walks(const WalkCorpus& corpus,
                         const std::vector<NodeId>& old_to_new);

}  // namespace monet
