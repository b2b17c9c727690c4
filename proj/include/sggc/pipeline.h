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

// End-to-end experiment runs: select a coreset, build its training graph,
// train per seed and evaluate on the full graph's test split.

#ifndef SGGC_PIPELINE_H_
#define SGGC_PIPELINE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sggc/compress.h"
#include "sggc/coreset.h"
#include "sggc/gnn.h"
#include "sggc/graph.h"
#include "sggc/spectral.h"
#include "sggc/train.h"

namespace sggc {

struct Preset {
  std::string dataset;
  double kappa;
  int budget_s;
  int ego_size_p;
};

// Tuned selection hyperparameters per dataset name (case-insensitive), or
// nullopt for unknown datasets.
std::optional<Preset> FindPreset(const std::string& dataset);
const std::vector<Preset>& AllPresets();

struct PipelineConfig {
  Method method = Method::kSggc;
  double ratio = 0.25;
  double kappa = 0.999;
  int ego_size_p = 16;
  int depth_L = 2;
  int budget_s = 1;
  DegreeSource ego_degrees = DegreeSource::kOriginal;
  CoresetGraphMode coreset_graph = CoresetGraphMode::kEgoUnion;
  bool compress = false;
  bool centered = false;
  TrainConfig train;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  int jobs = 1;
};

CoresetConfig MakeCoresetConfig(const PipelineConfig& cfg, int num_train,
                                std::uint64_t seed);

// Seeds 0..count-1 offset by `base`.
std::vector<std::uint64_t> SeedRange(std::uint64_t base, int count);

// Runs fn(k) for k in [0, count) on up to `jobs` threads.
void ParallelFor(int count, int jobs, const std::function<void(int)>& fn);

// Test accuracy of a model trained on the whole graph (transductive).
double FullGraphTrial(const GraphBundle& g, const TrainConfig& cfg);

// Test accuracy on `eval` of a model trained on `coreset` with its weights.
double CoresetTrial(const CoresetGraph& coreset, const GraphBundle& eval,
                    const TrainConfig& cfg);

CoresetGraph MakeTrainingGraph(const GraphBundle& g, const CoresetResult& result,
                               const PipelineConfig& cfg);

// Selection on `select_graph`, training graph and evaluation on `eval_graph`
// (the same bundle except in the homophily sweep). One accuracy per seed.
// Deterministic methods select once for all seeds.
RunSummary RunCoresetExperiment(const GraphBundle& select_graph,
                                const GraphBundle& eval_graph,
                                const PipelineConfig& cfg);
RunSummary RunFullGraphExperiment(const GraphBundle& g,
                                  const PipelineConfig& cfg);

nlohmann::json SummaryToJson(const RunSummary& summary);

// Weight matrices are stored row-major with their shapes.
nlohmann::json ModelToJson(const GnnModel& model);
GnnModel ModelFromJson(const nlohmann::json& json);

// RSD of diffusion-ego spectral embeddings U^T f(A_ego, X_ego) of a random
// GCN, one value per ego size and draw. Egos are taken for `centers` (all
// nodes when empty).
struct RsdOptions {
  int depth = 2;
  int hidden_dim = 64;  // output width of the random network
  int draws = 10;
  std::uint64_t seed = 0;
  RsdVariant variant = RsdVariant::kMeanNorm;
  DegreeSource degrees = DegreeSource::kOriginal;
  std::vector<NodeId> centers;
};
// Returns [size index][draw].
std::vector<std::vector<double>> RsdSweep(const GraphBundle& g,
                                          const std::vector<int>& sizes,
                                          const RsdOptions& options);

// Key=value lines: blank lines and '#' comments skipped. Throws kUsage with
// the line number on malformed input.
std::vector<std::pair<std::string, std::string>> ReadConfigFile(
    const std::string& path);

}  // namespace sggc

#endif  // SGGC_PIPELINE_H_
