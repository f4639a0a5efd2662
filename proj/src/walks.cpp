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

#include "monet/walks.hpp"

#include <iostream>

#include "monet/error.hpp"
#include "monet/rng.hpp"

namespace monet {

WalkCorpus generate_walks(const Graph& g, int walks_per_node, int walk_length,
                          std::uint64_t seed) {
  if (walk_length < 2) throw ConfigError("walk_length must be at least 2");
  if (walks_per_node < 1) throw ConfigError("walks_per_node must be positive");

  WalkCorpus corpus;
  corpus.walk_length = walk_length;
  corpus.walks_per_node = walks_per_node;
  corpus.seed = seed;

  int isolated = 0;
  for (NodeId start = 0; start < g.node_count; ++start) {
    if (g.degree(start) == 0) {
      ++isolated;
      continue;
    }
    for (int w = 0; w < walks_per_node; ++w) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(start),
                          static_cast<std::uint64_t>(w)));
      std::vector<NodeId> walk;
      walk.reserve(static_cast<size_t>(walk_length));
      walk.push_back(start);
      NodeId cur = start;
      for (int step = 1; step < walk_length; ++step) {
        const auto& nbrs = g.adjacency[static_cast<size_t>(cur)];
        cur = nbrs[rng.bounded(nbrs.size())];
        walk.push_back(cur);
      }
      corpus.walks.push_back(std::move(walk));
    }
  }
  if (isolated > 0) {
    std::cerr << "warning: skipped " << isolated
              << " isolated node(s) during walk generation\n";
  }
  return corpus;
}

WalkCorpus filter_walks(const WalkCorpus& corpus,
                        const std::function<bool(NodeId)>& keep) {
  WalkCorpus out;
  out.walk_length = corpus.walk_length;
  out.walks_per_node = corpus.walks_per_node;
  out.seed = corpus.seed;
  for (const auto& walk : corpus.walks) {
    std::vector<NodeId> kept;
    for (NodeId v : walk)
      if (keep(v)) kept.push_back(v);
    if (kept.size() >= 2) out.walks.push_back(std::move(kept));
  }
  return out;
}

WalkCorpus reindex_walks(const WalkCorpus& corpus,
                         const std::vector<NodeId>& old_to_new) {
  WalkCorpus out;
  out.walk_length = corpus.walk_length;
  out.walks_per_node = corpus.walks_per_node;
  out.seed = corpus.seed;
  out.walks.reserve(corpus.walks.size());
  for (const auto& walk : corpus.walks) {
    std::vector<NodeId> mapped;
    mapped.reserve(walk.size());
    for (NodeId v : walk) {
      const NodeId m = old_to_new.at(static_cast<size_t>(v));
      if (m < 0) throw DimensionError("reindex_walks: unmapped node id");
      mapped.push_back(m);
    }
    out.walks.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace monet
