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

// Coreset selection over training nodes.
//
// sggc interleaves geodesic ascent on the diffusion columns (which nodes
// average the graph well) with facility-location greedy on ego spectral
// vectors (which nodes cover the loss landscape): each step restricts the
// facility-location argmax to candidates whose alignment is within a factor
// kappa of the best. scgiga and craig_linear are the two halves alone;
// uniform, herding and kcenter are feature-space baselines.

#ifndef SGGC_CORESET_H_
#define SGGC_CORESET_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"
#include "sggc/ego.h"
#include "sggc/facility_location.h"
#include "sggc/graph.h"
#include "sggc/operators.h"

namespace sggc {

enum class Method { kSggc, kScgiga, kCraigLinear, kUniform, kHerding, kKCenter };

Method ParseMethod(const std::string& name);
std::string MethodName(Method method);

struct CoresetConfig {
  Method method = Method::kSggc;
  int size_c = 1;
  // In (0, 1]; 0 admits every candidate (pure facility-location greedy).
  double kappa = 0.999;
  int ego_size_p = 16;
  int depth_L = 2;
  int max_budget_s = 1;
  std::uint64_t seed = 0;
  DegreeSource ego_degrees = DegreeSource::kOriginal;
};

// max(1, round(ratio * n_t)), ratio in (0, 1].
int CoresetSize(double ratio, int num_train);

struct TraceRecord {
  int iteration = 0;
  NodeId chosen = 0;
  double alignment = 0.0;
  double gain = 0.0;
  double objective = 0.0;  // ||P w_a - 1/n|| after the update
  double eta = 0.0;
  int slab_size = 0;
};

struct CoresetResult {
  Method method = Method::kSggc;
  std::vector<NodeId> train_ids;  // weight vectors are aligned with these
  std::vector<NodeId> selected;   // selection order
  Eigen::VectorXd w_a;            // sums to 1 over selected
  Eigen::VectorXd w_c;            // sums to 1 over selected
  Eigen::VectorXd w;              // sums to 1
  std::vector<TraceRecord> trace;
  std::vector<std::string> warnings;
  double initial_objective = 0.0;
  double final_objective = 0.0;
  double facility_value = 0.0;  // F(selected), NaN without an oracle

  // w restricted to `selected`, in selection order.
  std::vector<double> SelectedWeights() const;
};

// n_t x p matrix of v vectors from diffusion egos of the training nodes.
Eigen::MatrixXd TrainingEgoVectors(const GraphBundle& g,
                                   const DiffusionMatrix& diff, int depth,
                                   int size_p,
                                   DegreeSource degrees = DegreeSource::kOriginal);

LossDistanceOracle MakeOracle(const GraphBundle& g, Eigen::MatrixXd vs);

CoresetResult SggcSelect(const GraphBundle& g, const DiffusionMatrix& diff,
                         const LossDistanceOracle& oracle,
                         const CoresetConfig& cfg);
CoresetResult ScgigaSelect(const GraphBundle& g, const DiffusionMatrix& diff,
                           const LossDistanceOracle* oracle,
                           const CoresetConfig& cfg);
CoresetResult CraigLinearSelect(const GraphBundle& g,
                                const LossDistanceOracle& oracle,
                                const CoresetConfig& cfg);
CoresetResult BaselineSelect(const GraphBundle& g,
                             const FeatureMatrix& features,
                             const CoresetConfig& cfg);

// Builds P and the ego vectors as the method requires.
CoresetResult SelectCoreset(const GraphBundle& g, const CoresetConfig& cfg);

nlohmann::json CoresetToJson(const CoresetResult& result);
CoresetResult CoresetFromJson(const nlohmann::json& json);
void WriteTraceCsv(std::ostream& out, const CoresetResult& result);

}  // namespace sggc

#endif  // SGGC_CORESET_H_
