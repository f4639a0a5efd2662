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

#include "monet/shilling.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>

#include "monet/error.hpp"
#include "monet/rng.hpp"

namespace monet {

void AttackSpec::validate(const Graph& g) const {
  if (!g.bipartite()) throw ConfigError("attack requires a bipartite graph");
  auto is_item = [&](NodeId v) {
    return v >= g.user_count && v < g.node_count;
  };
  auto is_user = [&](NodeId v) { return v >= 0 && v < g.user_count; };
  if (!is_item(target)) throw ConfigError("attack target is not an item id");
  if (influence_set.size() != 10)
    throw ConfigError("influence set must contain 10 items");
  std::set<NodeId> seen;
  for (NodeId it : influence_set) {
    if (!is_item(it)) throw ConfigError("influence set contains a non-item id");
    if (it == target)
      throw ConfigError("target must not be in the influence set");
    if (!seen.insert(it).second)
      throw ConfigError("influence set has duplicates");
  }
  if (attackers.empty()) return;
  for (NodeId u : attackers)
    if (!is_user(u)) throw ConfigError("attacker list contains a non-user id");
  if (!(known_fraction > 0.0 && known_fraction <= 1.0))
    throw ConfigError("known_fraction must lie in (0, 1]");
}

AttackSpec sample_attack_spec(const Graph& g, int influence_size,
                              double attacker_fraction, double known_fraction,
                              std::uint64_t seed) {
  if (!g.bipartite()) throw ConfigError("attack requires a bipartite graph");
  const NodeId items = g.item_count();
  if (items < influence_size + 1)
    throw ConfigError("not enough items to sample an attack");

  Rng rng(derive_seed(seed, 0xa77ac4));
  AttackSpec spec;
  spec.seed = seed;
  spec.known_fraction = known_fraction;

  std::set<NodeId> chosen;
  while (static_cast<int>(chosen.size()) < influence_size + 1) {
    chosen.insert(g.user_count +
                  static_cast<NodeId>(rng.bounded(static_cast<uint64_t>(items))));
  }
  std::vector<NodeId> pool(chosen.begin(), chosen.end());
  // Pull a uniform member out as the target, rest form the influence set.
  const size_t t = rng.bounded(pool.size());
  spec.target = pool[t];
  pool.erase(pool.begin() + static_cast<long>(t));
  spec.influence_set = std::move(pool);

  const auto attacker_count = static_cast<size_t>(std::floor(
      attacker_fraction * static_cast<double>(g.user_count) + 0.5));
  std::vector<NodeId> users(static_cast<size_t>(g.user_count));
  for (NodeId u = 0; u < g.user_count; ++u) users[static_cast<size_t>(u)] = u;
  for (size_t k = users.size(); k > 1; --k)
    std::swap(users[k - 1], users[rng.bounded(k)]);
  users.resize(attacker_count);
  std::sort(users.begin(), users.end());
  spec.attackers = std::move(users);
  spec.validate(g);
  return spec;
}

Graph inject_attack(const Graph& g, const AttackSpec& spec) {
  spec.validate(g);
  Graph out = g;
  std::vector<NodeId> targets = spec.influence_set;
  targets.push_back(spec.target);
  for (NodeId user : spec.attackers) {
    for (NodeId item : targets) {
      if (!g.has_edge(user, item)) out.edges.emplace_back(user, item);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  out.rebuild_adjacency();
  return out;
}

Matrix attacker_metadata(const Graph& attacked, const AttackSpec& spec) {
  spec.validate(attacked);
  const size_t total = spec.attackers.size();
  const auto known_count = static_cast<size_t>(
      std::floor(spec.known_fraction * static_cast<double>(total) + 0.5));

  std::vector<NodeId> pool = spec.attackers;
  Rng rng(derive_seed(spec.seed, 0x5151e7));
  for (size_t k = pool.size(); k > 1; --k)
    std::swap(pool[k - 1], pool[rng.bounded(k)]);
  pool.resize(known_count);
  std::set<NodeId> known(pool.begin(), pool.end());

  Matrix counts = Matrix::Zero(attacked.item_count(), 1);
  for (NodeId user : known) {
    for (NodeId nbr : attacked.adjacency[static_cast<size_t>(user)]) {
      counts(nbr - attacked.user_count, 0) += 1.0;
    }
  }
  return counts;
}

namespace {

// Rows scaled to unit norm (zero rows left zero), turning cosine distance
// into 1 - dot and letting the ranking loops run as matrix-vector products.
Matrix row_normalized(const Matrix& embedding) {
  Matrix out = embedding;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double norm = out.row(i).norm();
    if (norm > 0.0) out.row(i) /= norm;
  }
  return out;
}

}  // namespace

std::vector<NodeId> topk_neighbors(const Matrix& embedding, NodeId item,
                                   int k) {
  const NodeId n = static_cast<NodeId>(embedding.rows());
  if (item < 0 || item >= n) throw DimensionError("topk: item out of range");
  if (k >= n) throw ConfigError("topk: k must be smaller than the item count");
  if (embedding.row(item).norm() == 0.0)
    throw NumericalError("topk: query embedding row is zero");

  const Matrix unit = row_normalized(embedding);
  const Vector sims = unit * unit.row(item).transpose();

  std::vector<std::pair<double, NodeId>> scored;
  scored.reserve(static_cast<size_t>(n) - 1);
  for (NodeId j = 0; j < n; ++j) {
    if (j == item) continue;
    scored.emplace_back(1.0 - sims(j), j);
  }
  std::partial_sort(scored.begin(), scored.begin() + k, scored.end());
  std::vector<NodeId> out(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) out[static_cast<size_t>(i)] = scored[static_cast<size_t>(i)].second;
  return out;
}

std::map<NodeId, NodeId> cooccurrence_nn(const CooccurrenceStore& cooc) {
  // Track the best partner per item over both mirror halves.
  std::map<NodeId, std::pair<double, NodeId>> best;
  auto consider = [&](NodeId i, NodeId j, double w) {
    auto it = best.find(i);
    if (it == best.end() || w > it->second.first ||
        (w == it->second.first && j < it->second.second)) {
      best[i] = {w, j};
    }
  };
  for (const auto& e : cooc.entries()) {
    consider(e.i, e.j, e.weight);
    consider(e.j, e.i, e.weight);
  }
  std::map<NodeId, NodeId> nn;
  for (const auto& [i, val] : best) nn[i] = val.second;
  const NodeId n = cooc.max_node() + 1;
  if (static_cast<NodeId>(nn.size()) < n) {
    std::cerr << "warning: " << (n - static_cast<NodeId>(nn.size()))
              << " item(s) have no co-occurrences; excluded from NN map\n";
  }
  return nn;
}

double mrr(const Matrix& embedding, const std::map<NodeId, NodeId>& nn_map) {
  if (nn_map.empty()) throw ConfigError("mrr: empty nearest-neighbor map");
  const NodeId n = static_cast<NodeId>(embedding.rows());
  const Matrix unit = row_normalized(embedding);
  double sum = 0.0;
  for (const auto& [item, target] : nn_map) {
    if (target < 0 || target >= n || item < 0 || item >= n)
      throw DimensionError("mrr: nn map references a row out of range");
    const Vector sims = unit * unit.row(item).transpose();
    // 1-based rank of the target among all candidates != item, with the
    // (distance, id) tie order used everywhere else.
    const double target_sim = sims(target);
    long rank = 1;
    for (NodeId j = 0; j < n; ++j) {
      if (j == item || j == target) continue;
      if (sims(j) > target_sim || (sims(j) == target_sim && j < target))
        ++rank;
    }
    sum += 1.0 / static_cast<double>(rank);
  }
  return sum / static_cast<double>(nn_map.size());
}

Vector attack_direction(const Matrix& embedding, const Matrix& counts) {
  if (embedding.rows() != counts.rows())
    throw DimensionError("attack_direction: row count mismatch");
  if (counts.cols() != 1)
    throw DimensionError("attack_direction: counts must be a single column");
  if ((counts.array() > 0.0).count() == 0)
    throw ConfigError("attack_direction: no known-attacked items");

  Vector dir = Vector::Zero(embedding.cols());
  for (Eigen::Index i = 0; i < embedding.rows(); ++i) {
    if (counts(i, 0) > 0.0)
      dir += counts(i, 0) * embedding.row(i).transpose();
    else
      dir -= embedding.row(i).transpose();
  }
  return dir;
}

Matrix nlp_debias(const Matrix& embedding, const Vector& direction) {
  const double norm = direction.norm();
  if (norm == 0.0) throw NumericalError("nlp_debias: zero attack direction");
  const Vector unit = direction / norm;
  return embedding - (embedding * unit) * unit.transpose();
}

}  // namespace monet
