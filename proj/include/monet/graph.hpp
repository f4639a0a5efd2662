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
#include <string>
#include <utility>
#include <vector>

#include "monet/types.hpp"

namespace monet {

enum class NodeTag : std::uint8_t { none = 0, user = 1, item = 2 };

/// Undirected simple graph. Edges are stored canonically with
/// first < second; adjacency lists mirror both directions.
struct Graph {
  NodeId node_count = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::vector<NodeId>> adjacency;
  // Empty unless the graph is bipartite. Users occupy ids [0, user_count),
  // items occupy [user_count, node_count).
  std::vector<NodeTag> node_tags;
  NodeId user_count = 0;

  bool bipartite() const { return !node_tags.empty(); }
  NodeId item_count() const { return node_count - user_count; }
  NodeId degree(NodeId v) const {
    return static_cast<NodeId>(adjacency[static_cast<size_t>(v)].size());
  }
  bool has_edge(NodeId a, NodeId b) const;

  /// Rebuild adjacency from the edge list (called by loaders/mutators).
  void rebuild_adjacency();
};

struct EdgeListOptions {
  // Collapse duplicate edges silently; when false a duplicate is a parse error.
  bool dedupe = true;
  // Treat the two id columns as disjoint user/item spaces and remap items
  // to [user_count, node_count).
  bool bipartite = false;
};

/// Read "src<sep>dst" lines (tab or space separated, extra columns ignored).
/// Self-loops are dropped; reverse duplicates collapse to one undirected edge.
Graph load_edge_list(const std::string& path, EdgeListOptions options = {});

/// Per-side original ids, indexed by remapped id (items offset by user_count).
struct BipartiteIdMap {
  std::vector<long long> user_ids;
  std::vector<long long> item_ids;
};

/// MovieLens-style ratings file: "user<TAB>item<TAB>rating<TAB>timestamp".
/// Rating and timestamp are ignored; ids are remapped to contiguous indices
/// in sorted order of the original ids. The mapping is returned through
/// `map` when non-null so it can be persisted beside the outputs.
Graph load_bipartite_ratings(const std::string& path,
                             BipartiteIdMap* map = nullptr);

/// One row per node, whitespace-separated reals; throws DimensionError when
/// the row count does not equal `node_count`.
Matrix load_metadata(const std::string& path, NodeId node_count);

}  // namespace monet
