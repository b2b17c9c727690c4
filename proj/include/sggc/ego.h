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

// Ego-graph extraction. Standard egos are depth-L BFS balls; diffusion egos
// keep the p nodes with the largest mass in the center's row of P^L. Both
// keep the parent graph's degrees so that GCN normalization on the ego
// reproduces the full-graph embedding at the center.

#ifndef SGGC_EGO_H_
#define SGGC_EGO_H_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "sggc/gnn.h"
#include "sggc/graph.h"
#include "sggc/operators.h"
#include "sggc/spectral.h"

namespace sggc {

enum class EgoKind { kStandard, kDiffusion };

struct EgoGraph {
  EgoKind kind = EgoKind::kStandard;
  int depth = 0;
  int size_p = 0;  // diffusion only
  NodeId center = 0;
  std::vector<NodeId> nodes;  // original ids, nodes[0] == center
  Adjacency adjacency;        // induced, local ids
  FeatureMatrix local_features;
  std::vector<int> original_degrees;

  NodeId size() const { return static_cast<NodeId>(nodes.size()); }
};

// Induced subgraph on `nodes` (local ids follow the order of `nodes`).
Adjacency InducedAdjacency(const GraphBundle& g, std::span<const NodeId> nodes);

// Hop distance from `source` for every node within `depth` hops, -1 beyond.
std::vector<int> BfsDistances(const GraphBundle& g, NodeId source, int depth);

// Nodes sorted center first, then ascending id.
EgoGraph ExtractStandardEgo(const GraphBundle& g, NodeId center, int depth);

// Nodes: center, then the top p - 1 other entries of row `center` of P^depth
// by decreasing mass (ties by ascending id). Only nodes with positive mass
// qualify, so small components yield fewer than p nodes.
EgoGraph ExtractDiffusionEgo(const DiffusionMatrix& diff, const GraphBundle& g,
                             NodeId center, int depth, int size_p);

enum class DegreeSource { kOriginal, kInduced };

struct SpectralEgo {
  NodeId center = 0;
  EigenBasis basis;   // normalized Laplacian of the ego
  Eigen::VectorXd v;  // first row of U, zero-padded to pad_to
};

SpectralEgo ComputeSpectralEgo(const EgoGraph& ego, int pad_to,
                               DegreeSource degrees = DegreeSource::kOriginal);

// Ego normalized Laplacian under the chosen degree source.
NormalizedLaplacian EgoLaplacian(const EgoGraph& ego, DegreeSource degrees);

// Spectral features U^T X of an ego, zero-padded to pad_to rows.
Eigen::MatrixXd EgoSpectralFeatures(const SpectralEgo& spectral,
                                    const EgoGraph& ego, int pad_to);

// Network input for an ego: induced adjacency normalized by original degrees.
GraphInput EgoGraphInput(const EgoGraph& ego);

// max |f(A, X)_node - f(A_ego, X_ego)_center| for the depth-`depth` standard
// ego. Dropout off.
double ReceptiveFieldCheck(const GraphBundle& g, const GnnModel& model,
                           NodeId node, int depth);
double ReceptiveFieldCheck(const GraphBundle& g, const GraphInput& full,
                           const GnnModel& model, NodeId node, int depth);

}  // namespace sggc

#endif  // SGGC_EGO_H_
