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

#ifndef SGGC_GRAPH_H_
#define SGGC_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sggc {

using NodeId = std::int32_t;

// Row-major so that a node's feature row is contiguous.
using FeatureMatrix =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kUnlabeled = -1;

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Splits {
  std::vector<NodeId> train;
  std::vector<NodeId> val;
  std::vector<NodeId> test;
};

// Binary symmetric adjacency in CSR form. Neighbor lists are sorted.
struct Adjacency {
  std::vector<std::int64_t> row_ptr;  // size n + 1
  std::vector<NodeId> col_idx;

  NodeId num_nodes() const {
    return row_ptr.empty() ? 0 : static_cast<NodeId>(row_ptr.size() - 1);
  }
  std::span<const NodeId> Neighbors(NodeId i) const {
    return {col_idx.data() + row_ptr[i],
            static_cast<std::size_t>(row_ptr[i + 1] - row_ptr[i])};
  }
};

// Builds a symmetric binary CSR from an arbitrary edge list: both directions
// are inserted, self-loops and duplicates are dropped. Ids must be < n.
Adjacency BuildAdjacency(NodeId n, std::span<const Edge> edges);

// An immutable node-classification dataset. Construction validates every
// invariant; a constructed bundle is always well formed.
class GraphBundle {
 public:
  GraphBundle() = default;

  // Throws Error(kInvalidInput) on out-of-range ids, feature row-count
  // mismatch, labels outside [0, num_classes), unlabeled split nodes or
  // overlapping splits.
  static GraphBundle Create(std::string name, NodeId num_nodes,
                            std::span<const Edge> edges, FeatureMatrix features,
                            std::vector<int> labels, int num_classes,
                            Splits splits);

  const std::string& name() const { return name_; }
  NodeId num_nodes() const { return adjacency_.num_nodes(); }
  // Undirected edge count; each edge is stored twice in the CSR.
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(adjacency_.col_idx.size()) / 2;
  }
  int feature_dim() const { return static_cast<int>(features_.cols()); }
  int num_classes() const { return num_classes_; }

  const Adjacency& adjacency() const { return adjacency_; }
  std::span<const NodeId> Neighbors(NodeId i) const {
    return adjacency_.Neighbors(i);
  }
  int Degree(NodeId i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  const FeatureMatrix& features() const { return features_; }
  const std::vector<int>& labels() const { return labels_; }
  int Label(NodeId i) const { return labels_[i]; }
  const Splits& splits() const { return splits_; }

  // Canonical undirected edge list: u < v, lexicographically sorted.
  std::vector<Edge> UndirectedEdges() const;

  // Copy with a different edge set (features, labels and splits unchanged).
  GraphBundle WithEdges(std::span<const Edge> edges) const;

 private:
  std::string name_;
  Adjacency adjacency_;
  std::vector<int> degrees_;
  FeatureMatrix features_;
  std::vector<int> labels_;
  int num_classes_ = 0;
  Splits splits_;
};

// Fraction of undirected edges whose endpoints share a label. Throws on a
// graph without edges or with an unlabeled endpoint.
double Homophily(const GraphBundle& g);

// Adds `count` distinct undirected non-edges sampled uniformly at random.
// Deterministic for a given seed.
GraphBundle AddRandomEdges(const GraphBundle& g, std::int64_t count,
                           std::uint64_t seed);

struct DatasetStats {
  std::string name;
  NodeId nodes = 0;
  std::int64_t directed_edges = 0;
  int features = 0;
  int classes = 0;
  double train_pct = 0, val_pct = 0, test_pct = 0;
};

DatasetStats ComputeStats(const GraphBundle& g);

}  // namespace sggc

#endif  // SGGC_GRAPH_H_
