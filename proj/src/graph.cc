// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sggc/graph.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "sggc/error.h"
#include "sggc/random.h"

namespace sggc {

Adjacency BuildAdjacency(NodeId n, std::span<const Edge> edges) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    Require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n,
            ErrorCode::kInvalidInput,
            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                ") references a node outside [0, " + std::to_string(n) + ")");
    if (e.u == e.v) continue;
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  for (NodeId i = 0; i < n; ++i) counts[i + 1] += counts[i];

  std::vector<NodeId> raw(static_cast<std::size_t>(counts[n]));
  std::vector<std::int64_t> cursor(counts.begin(), counts.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    raw[cursor[e.u]++] = e.v;
    raw[cursor[e.v]++] = e.u;
  }

  Adjacency adj;
  adj.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
  adj.col_idx.reserve(raw.size());
  for (NodeId i = 0; i < n; ++i) {
    auto first = raw.begin() + counts[i];
    auto last = raw.begin() + counts[i + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    adj.col_idx.insert(adj.col_idx.end(), first, last);
    adj.row_ptr[i + 1] = static_cast<std::int64_t>(adj.col_idx.size());
  }
  return adj;
}

GraphBundle GraphBundle::Create(std::string name, NodeId num_nodes,
                                std::span<const Edge> edges,
                                FeatureMatrix features, std::vector<int> labels,
                                int num_classes, Splits splits) {
  Require(num_nodes >= 0, ErrorCode::kInvalidInput, "negative node count");
  Require(features.rows() == num_nodes, ErrorCode::kInvalidInput,
          "feature matrix has " + std::to_string(features.rows()) +
              " rows, expected " + std::to_string(num_nodes));
  Require(static_cast<NodeId>(labels.size()) == num_nodes,
          ErrorCode::kInvalidInput, "label vector size mismatch");
  Require(num_classes >= 1, ErrorCode::kInvalidInput,
          "number of classes must be positive");
  for (NodeId i = 0; i < num_nodes; ++i) {
    const int y = labels[i];
    Require(y == kUnlabeled || (y >= 0 && y < num_classes),
            ErrorCode::kInvalidInput,
            "label " + std::to_string(y) + " of node " + std::to_string(i) +
                " outside [0, " + std::to_string(num_classes) + ")");
  }

  std::vector<char> owner(static_cast<std::size_t>(num_nodes), 0);
  auto check_split = [&](std::vector<NodeId>& ids, char tag,
                         const char* split_name) {
    for (NodeId id : ids) {
      Require(id >= 0 && id < num_nodes, ErrorCode::kInvalidInput,
              std::string(split_name) + " split references node " +
                  std::to_string(id) + " outside the graph");
      Require(owner[id] == 0, ErrorCode::kInvalidInput,
              "node " + std::to_string(id) + " appears in overlapping splits");
      Require(labels[id] != kUnlabeled, ErrorCode::kInvalidInput,
              std::string(split_name) + " node " + std::to_string(id) +
                  " is unlabeled");
      owner[id] = tag;
    }
    std::sort(ids.begin(), ids.end());
  };
  check_split(splits.train, 1, "train");
  check_split(splits.val, 2, "val");
  check_split(splits.test, 3, "test");

  GraphBundle g;
  g.name_ = std::move(name);
  g.adjacency_ = BuildAdjacency(num_nodes, edges);
  g.degrees_.resize(num_nodes);
  for (NodeId i = 0; i < num_nodes; ++i) {
    g.degrees_[i] = static_cast<int>(g.adjacency_.row_ptr[i + 1] -
                                     g.adjacency_.row_ptr[i]);
  }
  g.features_ = std::move(features);
  g.labels_ = std::move(labels);
  g.num_classes_ = num_classes;
  g.splits_ = std::move(splits);
  return g;
}

std::vector<Edge> GraphBundle::UndirectedEdges() const {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(num_edges()));
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : Neighbors(u)) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return edges;
}

GraphBundle GraphBundle::WithEdges(std::span<const Edge> edges) const {
  GraphBundle g = *this;
  g.adjacency_ = BuildAdjacency(num_nodes(), edges);
  for (NodeId i = 0; i < num_nodes(); ++i) {
    g.degrees_[i] = static_cast<int>(g.adjacency_.row_ptr[i + 1] -
                                     g.adjacency_.row_ptr[i]);
  }
  return g;
}

double Homophily(const GraphBundle& g) {
  Require(g.num_edges() > 0, ErrorCode::kInvalidInput,
          "undefined homophily: graph has no edges");
  std::int64_t same = 0;
  for (const Edge& e : g.UndirectedEdges()) {
    const int a = g.Label(e.u), b = g.Label(e.v);
    Require(a != kUnlabeled && b != kUnlabeled, ErrorCode::kInvalidInput,
            "homophily requires labeled endpoints");
    same += (a == b);
  }
  return static_cast<double>(same) / static_cast<double>(g.num_edges());
}

GraphBundle AddRandomEdges(const GraphBundle& g, std::int64_t count,
                           std::uint64_t seed) {
  Require(count >= 0, ErrorCode::kInvalidInput, "edge count must be >= 0");
  if (count == 0) return g;
  const std::int64_t n = g.num_nodes();
  const std::int64_t absent = n * (n - 1) / 2 - g.num_edges();
  Require(count <= absent, ErrorCode::kInvalidInput,
          "cannot add " + std::to_string(count) + " edges: only " +
              std::to_string(absent) + " node pairs are unconnected");

  auto key = [n](std::int64_t u, std::int64_t v) { return u * n + v; };
  std::vector<Edge> edges = g.UndirectedEdges();
  Rng rng(seed);

  if (2 * count <= absent) {
    std::unordered_set<std::int64_t> present;
    present.reserve(edges.size() * 2 + static_cast<std::size_t>(count) * 2);
    for (const Edge& e : edges) present.insert(key(e.u, e.v));
    std::int64_t added = 0;
    while (added < count) {
      auto u = static_cast<NodeId>(UniformIndex(rng, n));
      auto v = static_cast<NodeId>(UniformIndex(rng, n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (present.insert(key(u, v)).second) {
        edges.push_back({u, v});
        ++added;
      }
    }
  } else {
    // Dense regime: enumerate the complement and take a random prefix.
    std::vector<Edge> candidates;
    candidates.reserve(static_cast<std::size_t>(absent));
    for (NodeId u = 0; u < n; ++u) {
      auto nbrs = g.Neighbors(u);
      for (NodeId v = u + 1; v < n; ++v) {
        if (!std::binary_search(nbrs.begin(), nbrs.end(), v)) {
          candidates.push_back({u, v});
        }
      }
    }
    for (std::int64_t i = 0; i < count; ++i) {
      auto j = i + static_cast<std::int64_t>(
                       UniformIndex(rng, candidates.size() - i));
      std::swap(candidates[i], candidates[j]);
      edges.push_back(candidates[i]);
    }
  }
  return g.WithEdges(edges);
}

DatasetStats ComputeStats(const GraphBundle& g) {
  DatasetStats s;
  s.name = g.name();
  s.nodes = g.num_nodes();
  s.directed_edges = 2 * g.num_edges();
  s.features = g.feature_dim();
  s.classes = g.num_classes();
  if (s.nodes > 0) {
    const double n = s.nodes;
    s.train_pct = 100.0 * g.splits().train.size() / n;
    s.val_pct = 100.0 * g.splits().val.size() / n;
    s.test_pct = 100.0 * g.splits().test.size() / n;
  }
  return s;
}

}  // namespace sggc
