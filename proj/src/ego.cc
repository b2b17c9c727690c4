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

#include "sggc/ego.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <unordered_map>

#include "sggc/error.h"

namespace sggc {
namespace {

void CheckCenter(const GraphBundle& g, NodeId center) {
  Require(center >= 0 && center < g.num_nodes(), ErrorCode::kInvalidInput,
          "center " + std::to_string(center) + " out of range");
}

EgoGraph Assemble(const GraphBundle& g, std::vector<NodeId> nodes) {
  EgoGraph ego;
  ego.center = nodes.front();
  ego.adjacency = InducedAdjacency(g, nodes);
  ego.local_features.resize(static_cast<Eigen::Index>(nodes.size()),
                            g.feature_dim());
  ego.original_degrees.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    ego.local_features.row(static_cast<Eigen::Index>(k)) =
        g.features().row(nodes[k]);
    ego.original_degrees.push_back(g.Degree(nodes[k]));
  }
  ego.nodes = std::move(nodes);
  return ego;
}

}  // namespace

Adjacency InducedAdjacency(const GraphBundle& g,
                           std::span<const NodeId> nodes) {
  std::unordered_map<NodeId, NodeId> local;
  local.reserve(nodes.size() * 2);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    local.emplace(nodes[k], static_cast<NodeId>(k));
  }
  Adjacency adj;
  adj.row_ptr.assign(nodes.size() + 1, 0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::vector<NodeId> row;
    for (NodeId j : g.Neighbors(nodes[k])) {
      auto it = local.find(j);
      if (it != local.end()) row.push_back(it->second);
    }
    std::sort(row.begin(), row.end());
    adj.col_idx.insert(adj.col_idx.end(), row.begin(), row.end());
    adj.row_ptr[k + 1] = static_cast<std::int64_t>(adj.col_idx.size());
  }
  return adj;
}

std::vector<int> BfsDistances(const GraphBundle& g, NodeId source, int depth) {
  CheckCenter(g, source);
  std::vector<int> dist(g.num_nodes(), -1);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    if (dist[u] == depth) continue;
    for (NodeId v : g.Neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

EgoGraph ExtractStandardEgo(const GraphBundle& g, NodeId center, int depth) {
  CheckCenter(g, center);
  Require(depth >= 0, ErrorCode::kInvalidInput, "depth must be >= 0");
  // Local BFS with a hash map keeps the cost proportional to the ball size.
  std::unordered_map<NodeId, int> dist{{center, 0}};
  std::deque<NodeId> queue{center};
  std::vector<NodeId> others;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    const int du = dist[u];
    if (du == depth) continue;
    for (NodeId v : g.Neighbors(u)) {
      if (dist.emplace(v, du + 1).second) {
        queue.push_back(v);
        others.push_back(v);
      }
    }
  }
  std::sort(others.begin(), others.end());
  std::vector<NodeId> nodes{center};
  nodes.insert(nodes.end(), others.begin(), others.end());
  EgoGraph ego = Assemble(g, std::move(nodes));
  ego.kind = EgoKind::kStandard;
  ego.depth = depth;
  return ego;
}

EgoGraph ExtractDiffusionEgo(const DiffusionMatrix& diff, const GraphBundle& g,
                             NodeId center, int depth, int size_p) {
  CheckCenter(g, center);
  Require(size_p >= 1, ErrorCode::kInvalidInput, "ego size p must be >= 1");
  Require(diff.size() == g.num_nodes(), ErrorCode::kInvalidInput,
          "diffusion matrix does not match graph");
  const Eigen::VectorXd row = DiffusionRow(diff, center, depth);
  const double top = row.maxCoeff();
  // Masses are compared after rounding to 12 significant digits relative to
  // the row maximum, so entries equal up to summation order tie exactly.
  struct Entry {
    long long key;
    NodeId id;
  };
  std::vector<Entry> entries;
  for (NodeId j = 0; j < row.size(); ++j) {
    if (j == center || row[j] <= 0.0) continue;
    entries.push_back({std::llround(row[j] / top * 1e12), j});
  }
  const auto keep =
      std::min<std::size_t>(entries.size(), static_cast<std::size_t>(size_p - 1));
  auto before = [](const Entry& a, const Entry& b) {
    return a.key != b.key ? a.key > b.key : a.id < b.id;
  };
  std::partial_sort(entries.begin(), entries.begin() + keep, entries.end(),
                    before);
  std::vector<NodeId> nodes{center};
  for (std::size_t k = 0; k < keep; ++k) nodes.push_back(entries[k].id);
  EgoGraph ego = Assemble(g, std::move(nodes));
  ego.kind = EgoKind::kDiffusion;
  ego.depth = depth;
  ego.size_p = size_p;
  return ego;
}

NormalizedLaplacian EgoLaplacian(const EgoGraph& ego, DegreeSource degrees) {
  if (degrees == DegreeSource::kOriginal) {
    return BuildNormalizedLaplacian(ego.adjacency, ego.original_degrees);
  }
  std::vector<int> induced(ego.nodes.size());
  for (NodeId k = 0; k < ego.size(); ++k) {
    induced[k] = static_cast<int>(ego.adjacency.Neighbors(k).size());
  }
  return BuildNormalizedLaplacian(ego.adjacency, induced);
}

SpectralEgo ComputeSpectralEgo(const EgoGraph& ego, int pad_to,
                               DegreeSource degrees) {
  Require(ego.size() <= pad_to, ErrorCode::kInvalidInput,
          "ego larger than the padding size");
  SpectralEgo spectral;
  spectral.center = ego.center;
  spectral.basis = EigDense(EgoLaplacian(ego, degrees).Dense());
  spectral.v = Eigen::VectorXd::Zero(pad_to);
  spectral.v.head(ego.size()) = spectral.basis.vectors.row(0).transpose();
  return spectral;
}

Eigen::MatrixXd EgoSpectralFeatures(const SpectralEgo& spectral,
                                    const EgoGraph& ego, int pad_to) {
  Require(ego.size() <= pad_to, ErrorCode::kInvalidInput,
          "ego larger than the padding size");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(pad_to, ego.local_features.cols());
  out.topRows(ego.size()) = SpectralTransform(
      spectral.basis, ego.local_features.cast<double>());
  return out;
}

GraphInput EgoGraphInput(const EgoGraph& ego) {
  return MakeGraphInput(ego.adjacency, ego.original_degrees,
                        ego.local_features);
}

double ReceptiveFieldCheck(const GraphBundle& g, const GraphInput& full,
                           const GnnModel& model, NodeId node, int depth) {
  const Eigen::MatrixXd full_out = Forward(model, full);
  const EgoGraph ego = ExtractStandardEgo(g, node, depth);
  const Eigen::MatrixXd ego_out = Forward(model, EgoGraphInput(ego));
  return (full_out.row(node) - ego_out.row(0)).cwiseAbs().maxCoeff();
}

double ReceptiveFieldCheck(const GraphBundle& g, const GnnModel& model,
                           NodeId node, int depth) {
  return ReceptiveFieldCheck(g, MakeGraphInput(g), model, node, depth);
}

}  // namespace sggc
