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

// GCN and SGC node classifiers with hand-written backpropagation.
//
// Both use the renormalized convolution C = D~^-1/2 (A + I) D~^-1/2 where
// D~ = D + I is built from caller-supplied degrees, so a subgraph can be
// normalized with its parent graph's degrees.

#ifndef SGGC_GNN_H_
#define SGGC_GNN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "sggc/graph.h"
#include "sggc/operators.h"

namespace sggc {

enum class Arch { kGcn, kSgc };

Arch ParseArch(const std::string& name);
std::string ArchName(Arch arch);

struct GnnModel {
  Arch arch = Arch::kGcn;
  int layers = 2;
  double dropout = 0.5;  // gcn only
  // gcn: layers matrices chaining in_dim -> hidden -> ... -> classes.
  // sgc: a single in_dim x classes matrix.
  std::vector<Eigen::MatrixXd> weights;
};

// Glorot-uniform initialization from `seed`.
GnnModel InitModel(Arch arch, int in_dim, int hidden_dim, int num_classes,
                   int layers, double dropout, std::uint64_t seed);

// Convolution operator and sparse node features for one graph.
struct GraphInput {
  SparseMatrix conv;
  SparseMatrix features;
  // sgc only: C^L X, computed once on first use.
  mutable std::optional<Eigen::MatrixXd> propagated;
  mutable int propagated_depth = -1;

  NodeId num_nodes() const { return static_cast<NodeId>(conv.rows()); }
};

SparseMatrix BuildConvolution(const Adjacency& adjacency,
                              std::span<const int> degrees);
SparseMatrix ToSparse(const FeatureMatrix& features);
GraphInput MakeGraphInput(const Adjacency& adjacency,
                          std::span<const int> degrees,
                          const FeatureMatrix& features);
GraphInput MakeGraphInput(const GraphBundle& g);

// Dropout keying for one forward pass. Disabled when `enabled` is false.
struct DropoutKey {
  bool enabled = false;
  std::uint64_t seed = 0;
  int epoch = 0;
};

struct ForwardCache {
  // One entry per hidden layer k: pre-activation C H_k W_k, the scaled
  // dropout mask, and the resulting input to layer k + 1.
  std::vector<Eigen::MatrixXd> pre_relu;
  std::vector<Eigen::MatrixXd> masks;
  std::vector<Eigen::MatrixXd> inputs;
  Eigen::MatrixXd logits;
};

Eigen::MatrixXd Forward(const GnnModel& model, const GraphInput& input,
                        const DropoutKey& dropout = {},
                        ForwardCache* cache = nullptr);

// Row-wise softmax, stable for large logits.
Eigen::MatrixXd Softmax(const Eigen::MatrixXd& logits);

// sum_i w_i CE(softmax(z_i), y_i) over `ids`; empty `weights` means 1/|ids|.
double WeightedLoss(const Eigen::MatrixXd& logits, std::span<const int> labels,
                    std::span<const NodeId> ids, std::span<const double> weights);

// Gradients of WeightedLoss + the coupled L2 term (wd * W added to each
// gradient) with respect to each weight matrix.
std::vector<Eigen::MatrixXd> Backward(const GnnModel& model,
                                      const GraphInput& input,
                                      const ForwardCache& cache,
                                      std::span<const int> labels,
                                      std::span<const NodeId> ids,
                                      std::span<const double> weights,
                                      double weight_decay);

// Fraction of `ids` whose argmax logit (lowest class on ties) is the label.
double Accuracy(const Eigen::MatrixXd& logits, std::span<const int> labels,
                std::span<const NodeId> ids);

}  // namespace sggc

#endif  // SGGC_GNN_H_
