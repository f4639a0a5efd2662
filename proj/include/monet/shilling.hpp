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
#include <map>
#include <vector>

#include "monet/cooccurrence.hpp"
#include "monet/graph.hpp"

namespace monet {

/// A coordinated rating attack: every attacker rates every influence-set
/// item plus the target. Node ids are global (graph) ids; items start at
/// g.user_count.
struct AttackSpec {
  std::vector<NodeId> influence_set;  // 10 items
  NodeId target = -1;                 // item, not in the influence set
  std::vector<NodeId> attackers;      // existing users
  double known_fraction = 0.5;        // share of attackers visible as metadata
  std::uint64_t seed = 0;

  void validate(const Graph& g) const;
};

/// Sample an attack on a bipartite graph: `influence_size` items plus a
/// distinct target, and round(attacker_fraction * users) attackers.
AttackSpec sample_attack_spec(const Graph& g, int influence_size,
                              double attacker_fraction, double known_fraction,
                              std::uint64_t seed);

/// Add the attack edges (attacker x (influence set + target)); edges that
/// already exist are left alone, so injection is idempotent.
Graph inject_attack(const Graph& g, const AttackSpec& spec);

/// Per-item count of KNOWN attackers with an edge to the item, as an
/// item_count x 1 matrix indexed by item-local id. The known subset is
/// round(known_fraction * attackers) attackers sampled once from the spec
/// seed.
Matrix attacker_metadata(const Graph& attacked, const AttackSpec& spec);

/// The k rows of `embedding` (excluding `item`) closest to `item` in cosine
/// distance; ties break toward the smaller id. Throws on a zero query row.
std::vector<NodeId> topk_neighbors(const Matrix& embedding, NodeId item,
                                   int k);

/// argmax_j C_ij for every item with at least one co-occurrence, ties to
/// the smaller id. Items without co-occurrences are skipped with a warning.
std::map<NodeId, NodeId> cooccurrence_nn(const CooccurrenceStore& cooc);

/// Mean reciprocal rank of each item's co-occurrence nearest neighbor
/// within that item's cosine-distance ordering (1-based, self excluded).
double mrr(const Matrix& embedding, const std::map<NodeId, NodeId>& nn_map);

/// Metadata-weighted attack direction:
/// sum_{i: M_i > 0} M_i W_i - sum_{i: M_i = 0} W_i.
Vector attack_direction(const Matrix& embedding, const Matrix& counts);

/// Single-direction rejection: removes each row's component along the
/// attack direction. Rows of the result are orthogonal to `direction`.
Matrix nlp_debias(const Matrix& embedding, const Vector& direction);

}  // namespace monet
