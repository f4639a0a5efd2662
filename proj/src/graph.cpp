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

#include "monet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "monet/error.hpp"

namespace monet {

namespace {

struct RawEdge {
  long long src;
  long long dst;
};

// Parses the first two integer columns of a line; returns false for blank
// or comment lines.
bool parse_edge_line(const std::string& line, size_t line_no, RawEdge* out) {
  size_t pos = 0;
  const size_t len = line.size();
  auto skip_ws = [&] {
    while (pos < len && (line[pos] == ' ' || line[pos] == '\t' ||
                         line[pos] == '\r'))
      ++pos;
  };
  skip_ws();
  if (pos == len || line[pos] == '#') return false;

  long long vals[2];
  for (int k = 0; k < 2; ++k) {
    skip_ws();
    const char* begin = line.data() + pos;
    const char* end = line.data() + len;
    auto [ptr, ec] = std::from_chars(begin, end, vals[k]);
    if (ec != std::errc{} || vals[k] < 0) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": expected non-negative integer id");
    }
    pos = static_cast<size_t>(ptr - line.data());
    if (pos < len && line[pos] != ' ' && line[pos] != '\t' &&
        line[pos] != '\r') {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": malformed id field");
    }
  }
  // Anything after the first two columns is ignored.
  out->src = vals[0];
  out->dst = vals[1];
  return true;
}

std::vector<RawEdge> read_raw_edges(const std::string& path,
                                    size_t min_columns = 2) {
  std::ifstream in(path);
  if (!in) throw MissingInputError("cannot open edge list: " + path);
  std::vector<RawEdge> raw;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    RawEdge e{};
    if (parse_edge_line(line, line_no, &e)) raw.push_back(e);
  }
  (void)min_columns;
  if (raw.empty()) throw ParseError("edge list is empty: " + path);
  return raw;
}

}  // namespace

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a == b) return false;
  const auto& adj = adjacency[static_cast<size_t>(a)];
  return std::binary_search(adj.begin(), adj.end(), b);
}

void Graph::rebuild_adjacency() {
  adjacency.assign(static_cast<size_t>(node_count), {});
  for (const auto& [a, b] : edges) {
    adjacency[static_cast<size_t>(a)].push_back(b);
    adjacency[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
}

Graph load_edge_list(const std::string& path, EdgeListOptions options) {
  std::vector<RawEdge> raw = read_raw_edges(path);

  Graph g;
  std::vector<std::pair<NodeId, NodeId>> canon;
  canon.reserve(raw.size());

  if (options.bipartite) {
    std::vector<long long> users, items;
    users.reserve(raw.size());
    items.reserve(raw.size());
    for (const auto& e : raw) {
      users.push_back(e.src);
      items.push_back(e.dst);
    }
    auto dedupe_sorted = [](std::vector<long long>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe_sorted(users);
    dedupe_sorted(items);
    auto index_of = [](const std::vector<long long>& v, long long x) {
      return static_cast<NodeId>(
          std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    g.user_count = static_cast<NodeId>(users.size());
    g.node_count = static_cast<NodeId>(users.size() + items.size());
    g.node_tags.assign(static_cast<size_t>(g.node_count), NodeTag::item);
    std::fill(g.node_tags.begin(), g.node_tags.begin() + g.user_count,
              NodeTag::user);
    for (const auto& e : raw) {
      const NodeId u = index_of(users, e.src);
      const NodeId v = g.user_count + index_of(items, e.dst);
      canon.emplace_back(u, v);
    }
  } else {
    long long max_id = 0;
    for (const auto& e : raw) max_id = std::max({max_id, e.src, e.dst});
    g.node_count = static_cast<NodeId>(max_id + 1);
    for (const auto& e : raw) {
      if (e.src == e.dst) continue;  // self-loop
      const NodeId a = static_cast<NodeId>(std::min(e.src, e.dst));
      const NodeId b = static_cast<NodeId>(std::max(e.src, e.dst));
      canon.emplace_back(a, b);
    }
  }

  std::sort(canon.begin(), canon.end());
  const size_t before = canon.size();
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  if (!options.dedupe && canon.size() != before) {
    throw ParseError("duplicate edges present and dedupe disabled: " + path);
  }
  g.edges = std::move(canon);
  g.rebuild_adjacency();
  return g;
}

Graph load_bipartite_ratings(const std::string& path, BipartiteIdMap* map) {
  std::ifstream in(path);
  if (!in) throw MissingInputError("cannot open ratings file: " + path);

  std::vector<RawEdge> raw;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    RawEdge e{};
    if (parse_edge_line(line, line_no, &e)) raw.push_back(e);
  }
  if (raw.empty()) throw ParseError("ratings file is empty: " + path);

  std::vector<long long> users, items;
  users.reserve(raw.size());
  items.reserve(raw.size());
  for (const auto& e : raw) {
    users.push_back(e.src);
    items.push_back(e.dst);
  }
  auto dedupe_sorted = [](std::vector<long long>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe_sorted(users);
  dedupe_sorted(items);

  Graph g;
  g.user_count = static_cast<NodeId>(users.size());
  g.node_count = static_cast<NodeId>(users.size() + items.size());
  g.node_tags.assign(static_cast<size_t>(g.node_count), NodeTag::item);
  std::fill(g.node_tags.begin(), g.node_tags.begin() + g.user_count,
            NodeTag::user);

  auto index_of = [](const std::vector<long long>& v, long long x) {
    return static_cast<NodeId>(std::lower_bound(v.begin(), v.end(), x) -
                               v.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> canon;
  canon.reserve(raw.size());
  for (const auto& e : raw) {
    canon.emplace_back(index_of(users, e.src),
                       g.user_count + index_of(items, e.dst));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  g.edges = std::move(canon);
  g.rebuild_adjacency();

  if (map) {
    map->user_ids = std::move(users);
    map->item_ids = std::move(items);
  }
  return g;
}

Matrix load_metadata(const std::string& path, NodeId node_count) {
  std::ifstream in(path);
  if (!in) throw MissingInputError("cannot open metadata file: " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  size_t line_no = 0;
  Eigen::Index cols = -1;
  while (std::getline(in, line)) {
    ++line_no;
    // Blank lines and comments are skipped, not counted as rows.
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<double> row;
    std::istringstream ss(line);
    std::string field;
    while (ss >> field) {
      size_t consumed = 0;
      double v = 0;
      try {
        v = std::stod(field, &consumed);
      } catch (const std::exception&) {
        throw ParseError("metadata line " + std::to_string(line_no) +
                         ": non-numeric field '" + field + "'");
      }
      if (consumed != field.size()) {
        throw ParseError("metadata line " + std::to_string(line_no) +
                         ": non-numeric field '" + field + "'");
      }
      if (!std::isfinite(v)) {
        throw ParseError("metadata line " + std::to_string(line_no) +
                         ": non-finite value");
      }
      row.push_back(v);
    }
    if (cols < 0) cols = static_cast<Eigen::Index>(row.size());
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError("metadata line " + std::to_string(line_no) +
                       ": expected " + std::to_string(cols) + " columns");
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<NodeId>(rows.size()) != node_count) {
    throw DimensionError("metadata has " + std::to_string(rows.size()) +
                         " rows, graph has " + std::to_string(node_count) +
                         " nodes");
  }
  Matrix m(node_count, cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

Variant variant_from_string(const std::string& name) {
  if (name == "glove") return Variant::glove;
  if (name == "glove_meta") return Variant::glove_meta;
  if (name == "monet") return Variant::monet;
  throw ConfigError("unknown variant '" + name +
                    "' (expected glove, glove_meta, or monet)");
}

}  // namespace monet
