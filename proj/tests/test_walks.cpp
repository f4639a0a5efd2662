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

#include "monet/error.hpp"
#include "monet/walks.hpp"
#include "test_util.hpp"

using namespace monet;

namespace {

Graph path_graph_two_nodes() {
  Graph g;
  g.node_count = 2;
  g.edges = {{0, 1}};
  g.rebuild_adjacency();
  return g;
}

Graph triangle() {
  Graph g;
  g.node_count = 3;
  g.edges = {{0, 1}, {0, 2}, {1, 2}};
  g.rebuild_adjacency();
  return g;
}

}  // namespace

TEST_CASE("walks on a 2-node path are forced") {
  const Graph g = path_graph_two_nodes();
  const WalkCorpus corpus = generate_walks(g, 3, 4, 42);
  CHECK(corpus.walks.size() == 6);  // both start nodes
  for (const auto& walk : corpus.walks) {
    CHECK(walk.size() == 4);
    for (size_t i = 0; i + 1 < walk.size(); ++i)
      CHECK(walk[i] != walk[i + 1]);
  }
}

TEST_CASE("uniform transition frequencies on a triangle") {
  const Graph g = triangle();
  const WalkCorpus corpus = generate_walks(g, 10000, 2, 7);
  int to1 = 0, to2 = 0, from0 = 0;
  for (const auto& walk : corpus.walks) {
    if (walk[0] != 0) continue;
    ++from0;
    if (walk[1] == 1) ++to1;
    if (walk[1] == 2) ++to2;
  }
  CHECK(from0 == 10000);
  // Exact transition probability is 1/2 for each neighbor.
  CHECK(std::abs(to1 / 10000.0 - 0.5) < 0.02);
  CHECK(std::abs(to2 / 10000.0 - 0.5) < 0.02);
}

TEST_CASE("walk corpus is reproducible from its seed") {
  const Graph g = testutil::toy_sbm(10, 0.5, 0.1, 3);
  const WalkCorpus a = generate_walks(g, 5, 8, 99);
  const WalkCorpus b = generate_walks(g, 5, 8, 99);
  REQUIRE(a.walks.size() == b.walks.size());
  for (size_t i = 0; i < a.walks.size(); ++i) CHECK(a.walks[i] == b.walks[i]);
  const WalkCorpus c = generate_walks(g, 5, 8, 100);
  CHECK(a.walks != c.walks);
}

TEST_CASE("every consecutive pair in an unfiltered walk is an edge") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Graph g = testutil::toy_sbm(12, 0.3, 0.05, seed);
    const WalkCorpus corpus = generate_walks(g, 3, 10, seed * 17);
    for (const auto& walk : corpus.walks)
      for (size_t i = 0; i + 1 < walk.size(); ++i)
        CHECK(g.has_edge(walk[i], walk[i + 1]));
  }
}

TEST_CASE("walk_length below 2 is a config error") {
  CHECK_THROWS_AS(generate_walks(triangle(), 1, 1, 0), ConfigError);
}

TEST_CASE("isolated nodes are skipped, not fatal") {
  Graph g;
  g.node_count = 3;
  g.edges = {{0, 1}};  // node 2 isolated
  g.rebuild_adjacency();
  const WalkCorpus corpus = generate_walks(g, 2, 3, 5);
  CHECK(corpus.walks.size() == 4);
  for (const auto& walk : corpus.walks)
    for (NodeId v : walk) CHECK(v != 2);
}

TEST_CASE("filter_walks keeps order and drops short leftovers") {
  WalkCorpus corpus;
  corpus.walk_length = 4;
  corpus.walks = {{10, 3, 11, 4}, {10, 3, 10, 3}, {5, 3, 6, 7}};
  // Keep items = ids >= 4 plus 5,6,7... here: keep even ids.
  const WalkCorpus kept =
      filter_walks(corpus, [](NodeId v) { return v % 2 == 0; });
  REQUIRE(kept.walks.size() == 2);
  CHECK(kept.walks[0] == std::vector<NodeId>{10, 4});
  CHECK(kept.walks[1] == std::vector<NodeId>{10, 10});
}

TEST_CASE("filter_walks with keep-all is the identity; keep-none empties") {
  const Graph g = triangle();
  const WalkCorpus corpus = generate_walks(g, 2, 5, 11);
  const WalkCorpus all = filter_walks(corpus, [](NodeId) { return true; });
  CHECK(all.walks == corpus.walks);
  const WalkCorpus none = filter_walks(corpus, [](NodeId) { return false; });
  CHECK(none.walks.empty());
}

TEST_CASE("reindex_walks applies the map and rejects gaps") {
  WalkCorpus corpus;
  corpus.walks = {{2, 3, 2}};
  std::vector<NodeId> map = {-1, -1, 0, 1};
  const WalkCorpus out = reindex_walks(corpus, map);
  CHECK(out.walks[0] == std::vector<NodeId>{0, 1, 0});
  corpus.walks = {{1}};
  CHECK_THROWS_AS(reindex_walks(corpus, map), DimensionError);
}
