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

#include "sggc/synthetic.h"

#include <numeric>
#include <vector>

#include "sggc/error.h"
#include "sggc/random.h"

namespace sggc {

GraphBundle MakeSbm(const SbmSpec& spec) {
  const NodeId n = spec.num_nodes;
  Require(n > 0 && spec.num_classes > 0 && spec.feature_dim > 0,
          ErrorCode::kInvalidInput, "SBM sizes must be positive");
  Require(spec.num_train + spec.num_val <= n, ErrorCode::kInvalidInput,
          "SBM train + val exceeds node count");

  Rng graph_rng(SubSeed(spec.seed, "sbm-edges"));
  Rng feature_rng(SubSeed(spec.seed, "sbm-features"));
  Rng split_rng(SubSeed(spec.seed, "sbm-splits"));

  std::vector<int> labels(n);
  for (NodeId i = 0; i < n; ++i) labels[i] = i % spec.num_classes;

  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double prob = labels[u] == labels[v] ? spec.p_in : spec.p_out;
      if (UniformUnit(graph_rng) < prob) edges.push_back({u, v});
    }
  }

  Eigen::MatrixXd means(spec.num_classes, spec.feature_dim);
  for (int k = 0; k < spec.num_classes; ++k) {
    for (int c = 0; c < spec.feature_dim; ++c) {
      means(k, c) = spec.mean_scale * StandardNormal(feature_rng);
    }
  }
  FeatureMatrix features(n, spec.feature_dim);
  for (NodeId i = 0; i < n; ++i) {
    for (int c = 0; c < spec.feature_dim; ++c) {
      features(i, c) = static_cast<float>(
          means(labels[i], c) + spec.noise * StandardNormal(feature_rng));
    }
  }

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  Shuffle(order, split_rng);
  Splits splits;
  splits.train.assign(order.begin(), order.begin() + spec.num_train);
  splits.val.assign(order.begin() + spec.num_train,
                    order.begin() + spec.num_train + spec.num_val);
  splits.test.assign(order.begin() + spec.num_train + spec.num_val,
                     order.end());

  return GraphBundle::Create("sbm", n, edges, std::move(features),
                             std::move(labels), spec.num_classes,
                             std::move(splits));
}

}  // namespace sggc
