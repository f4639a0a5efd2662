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

#include "monet/graph.hpp"
#include "monet/synth.hpp"
#include "test_util.hpp"

using namespace monet;

TEST_CASE("blog stand-in matches the published graph dimensions") {
  testutil::TempDir dir("synth");
  synth_blog_graph(dir.file("blogs"));
  const Graph g = load_edge_list(dir.file("blogs_edges.tsv"));
  CHECK(g.node_count == 1107);
  CHECK(g.edges.size() == 19034);

  const Matrix m = load_metadata(dir.file("blogs_metadata.tsv"), g.node_count);
  CHECK(m.cols() == 2);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    CHECK(m.row(i).sum() == doctest::Approx(1.0));

  // Strong homophily: the overwhelming majority of edges stay inside a
  // community.
  long long within = 0;
  for (const auto& [a, b] : g.edges)
    if ((a < 554) == (b < 554)) ++within;
  CHECK(static_cast<double>(within) / static_cast<double>(g.edges.size()) >
        0.85);
}

TEST_CASE("rating stand-in matches the published dataset dimensions") {
  testutil::TempDir dir("synth");
  synth_rating_graph(dir.file("ml"));
  const Graph g = load_bipartite_ratings(dir.file("ml_ratings.tsv"));
  CHECK(g.user_count == 943);
  CHECK(g.item_count() == 1682);
  CHECK(g.edges.size() == 100000);
  for (NodeId u = 0; u < g.user_count; ++u) CHECK(g.degree(u) >= 20);

  // Popularity is heavy tailed: the most-rated item dwarfs the median.
  std::vector<int> pop;
  for (NodeId it = g.user_count; it < g.node_count; ++it)
    pop.push_back(g.degree(it));
  std::sort(pop.begin(), pop.end());
  CHECK(pop.back() > 5 * pop[pop.size() / 2]);
}

TEST_CASE("generators are deterministic per seed") {
  testutil::TempDir dir("synth");
  synth_blog_graph(dir.file("a"), 33);
  synth_blog_graph(dir.file("b"), 33);
  CHECK(load_edge_list(dir.file("a_edges.tsv")).edges ==
        load_edge_list(dir.file("b_edges.tsv")).edges);
}
