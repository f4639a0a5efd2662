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

#include "monet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>
#include <vector>

#include "monet/error.hpp"
#include "monet/rng.hpp"

namespace monet {

namespace {

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw MissingInputError("cannot write file: " + path);
  for (const auto& line : lines) {
    std::fputs(line.c_str(), f);
    std::fputc('\n', f);
  }
  std::fclose(f);
}

// Sample `count` distinct pairs uniformly from a block, via rejection.
void sample_block(std::set<std::pair<int, int>>& edges, Rng& rng, int lo_a,
                  int hi_a, int lo_b, int hi_b, int count) {
  int added = 0;
  while (added < count) {
    int a = lo_a + static_cast<int>(rng.bounded(
                       static_cast<uint64_t>(hi_a - lo_a)));
    int b = lo_b + static_cast<int>(rng.bounded(
                       static_cast<uint64_t>(hi_b - lo_b)));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (edges.insert({a, b}).second) ++added;
  }
}

}  // namespace

void synth_blog_graph(const std::string& prefix, std::uint64_t seed) {
  constexpr int kCommunityA = 554;
  constexpr int kCommunityB = 553;
  constexpr int kNodes = kCommunityA + kCommunityB;
  constexpr int kEdges = 19034;
  // ~91% of hyperlink edges stay within a community; the within budget is
  // split across the two blocks in proportion to their pair counts.
  const int within = static_cast<int>(std::floor(0.91 * kEdges + 0.5));
  const double pairs_a = 0.5 * kCommunityA * (kCommunityA - 1);
  const double pairs_b = 0.5 * kCommunityB * (kCommunityB - 1);
  const int within_a = static_cast<int>(
      std::floor(within * pairs_a / (pairs_a + pairs_b) + 0.5));
  const int within_b = within - within_a;
  const int cross = kEdges - within;

  Rng rng(derive_seed(seed, 0xb109));
  std::set<std::pair<int, int>> edges;
  sample_block(edges, rng, 0, kCommunityA, 0, kCommunityA, within_a);
  sample_block(edges, rng, kCommunityA, kNodes, kCommunityA, kNodes, within_b);
  sample_block(edges, rng, 0, kCommunityA, kCommunityA, kNodes, cross);

  std::vector<std::string> lines;
  lines.reserve(edges.size());
  for (const auto& [a, b] : edges)
    lines.push_back(std::to_string(a) + "\t" + std::to_string(b));
  write_lines(prefix + "_edges.tsv", lines);

  std::vector<std::string> meta(static_cast<size_t>(kNodes));
  for (int v = 0; v < kNodes; ++v)
    meta[static_cast<size_t>(v)] = v < kCommunityA ? "1 0" : "0 1";
  write_lines(prefix + "_metadata.tsv", meta);
}

void synth_rating_graph(const std::string& prefix, std::uint64_t seed) {
  constexpr int kUsers = 943;
  constexpr int kItems = 1682;
  constexpr int kRatings = 100000;
  constexpr int kMinPerUser = 20;

  Rng rng(derive_seed(seed, 0x3317));

  // Heavy-tailed user activity, rescaled to sum exactly to the rating count.
  std::vector<int> degree(kUsers);
  long long total = 0;
  for (int u = 0; u < kUsers; ++u) {
    const double raw = std::exp(std::log(60.0) + 0.9 * rng.normal());
    degree[static_cast<size_t>(u)] = static_cast<int>(
        std::clamp(raw, static_cast<double>(kMinPerUser), 700.0));
    total += degree[static_cast<size_t>(u)];
  }
  while (total != kRatings) {
    const int u = static_cast<int>(rng.bounded(kUsers));
    int& d = degree[static_cast<size_t>(u)];
    if (total < kRatings && d < kItems - 1) {
      ++d;
      ++total;
    } else if (total > kRatings && d > kMinPerUser) {
      --d;
      --total;
    }
  }

  // Zipf-ish item popularity over a shuffled rank order.
  std::vector<double> weight(kItems);
  {
    std::vector<int> order(kItems);
    for (int i = 0; i < kItems; ++i) order[static_cast<size_t>(i)] = i;
    for (size_t k = order.size(); k > 1; --k)
      std::swap(order[k - 1], order[rng.bounded(k)]);
    for (int r = 0; r < kItems; ++r)
      weight[static_cast<size_t>(order[static_cast<size_t>(r)])] =
          1.0 / std::pow(static_cast<double>(r + 1), 0.78);
  }

  // Per user, a weighted sample of `degree[u]` distinct items
  // (Efraimidis-Spirakis keys: top-k by u^(1/w)).
  std::vector<std::string> lines;
  lines.reserve(kRatings);
  std::vector<std::pair<double, int>> keys(kItems);
  long long row = 0;
  for (int u = 0; u < kUsers; ++u) {
    for (int i = 0; i < kItems; ++i) {
      double r01 = rng.uniform01();
      while (r01 <= 0.0) r01 = rng.uniform01();
      keys[static_cast<size_t>(i)] = {
          std::log(r01) / weight[static_cast<size_t>(i)], i};
    }
    const int d = degree[static_cast<size_t>(u)];
    std::partial_sort(keys.begin(), keys.begin() + d, keys.end(),
                      [](const auto& a, const auto& b) {
                        return a.first > b.first;
                      });
    std::vector<int> items(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
      items[static_cast<size_t>(k)] = keys[static_cast<size_t>(k)].second;
    std::sort(items.begin(), items.end());
    for (int item : items) {
      const int rating = 1 + static_cast<int>((u + item) % 5);
      lines.push_back(std::to_string(u + 1) + "\t" + std::to_string(item + 1) +
                      "\t" + std::to_string(rating) + "\t" +
                      std::to_string(874000000 + row));
      ++row;
    }
  }
  write_lines(prefix + "_ratings.tsv", lines);
}

}  // namespace monet
