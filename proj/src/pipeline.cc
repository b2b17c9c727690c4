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

#include "sggc/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "sggc/ego.h"
#include "sggc/error.h"
#include "sggc/operators.h"
#include "sggc/random.h"

namespace sggc {
namespace {

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<Preset>& AllPresets() {
  static const std::vector<Preset> presets = {
      {"cora", 0.999, 1, 16},   {"citeseer", 0.5, 1, 8},
      {"pubmed", 0.1, 1, 16},   {"flickr", 0.5, 10, 8},
      {"arxiv", 0.1, 10, 8},    {"products", 0.1, 8, 2},
      {"reddit2", 0.1, 8, 8},
  };
  return presets;
}

std::optional<Preset> FindPreset(const std::string& dataset) {
  std::string key = Lower(dataset);
  if (key.rfind("ogbn-", 0) == 0) key = key.substr(5);
  for (const auto& p : AllPresets()) {
    if (p.dataset == key) return p;
  }
  return std::nullopt;
}

CoresetConfig MakeCoresetConfig(const PipelineConfig& cfg, int num_train,
                                std::uint64_t seed) {
  CoresetConfig out;
  out.method = cfg.method;
  out.size_c = CoresetSize(cfg.ratio, num_train);
  out.kappa = cfg.kappa;
  out.ego_size_p = cfg.ego_size_p;
  out.depth_L = cfg.depth_L;
  out.max_budget_s = cfg.budget_s;
  out.seed = seed;
  out.ego_degrees = cfg.ego_degrees;
  return out;
}

std::vector<std::uint64_t> SeedRange(std::uint64_t base, int count) {
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < count; ++k) seeds.push_back(base + k);
  return seeds;
}

void ParallelFor(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (int k = next++; k < count; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

double FullGraphTrial(const GraphBundle& g, const TrainConfig& cfg) {
  const GraphInput input = MakeGraphInput(g);
  const TrainTarget target{&input, g.labels(), g.splits().train, {}};
  const TrainResult trained = Train(cfg, target, g.num_classes());
  return Evaluate(trained.model, {&input, g.labels(), g.splits().test});
}

double CoresetTrial(const CoresetGraph& coreset, const GraphBundle& eval,
                    const TrainConfig& cfg) {
  const GraphInput train_input = MakeGraphInput(
      coreset.adjacency, coreset.original_degrees, coreset.features);
  const TrainTarget target{&train_input, coreset.labels, coreset.train,
                           coreset.weights};
  const TrainResult trained = Train(cfg, target, coreset.num_classes);
  const GraphInput eval_input = MakeGraphInput(eval);
  return Evaluate(trained.model, {&eval_input, eval.labels(), eval.splits().test});
}

CoresetGraph MakeTrainingGraph(const GraphBundle& g, const CoresetResult& result,
                               const PipelineConfig& cfg) {
  const std::vector<double> weights = result.SelectedWeights();
  if (cfg.compress) {
    const int depth =
        cfg.coreset_graph == CoresetGraphMode::kCentersOnly ? 0 : cfg.depth_L;
    return Decompress(Compress(g, result.selected, weights, depth, cfg.centered));
  }
  return BuildCoresetGraph(g, result.selected, weights, cfg.depth_L,
                           cfg.coreset_graph);
}

RunSummary RunCoresetExperiment(const GraphBundle& select_graph,
                                const GraphBundle& eval_graph,
                                const PipelineConfig& cfg) {
  Require(!cfg.seeds.empty(), ErrorCode::kUsage, "no seeds given");
  const auto num_train = static_cast<int>(select_graph.splits().train.size());
  const bool seeded = cfg.method == Method::kUniform;
  std::optional<CoresetGraph> shared;
  if (!seeded) {
    const CoresetResult result = SelectCoreset(
        select_graph, MakeCoresetConfig(cfg, num_train, cfg.seeds.front()));
    shared = MakeTrainingGraph(eval_graph, result, cfg);
  }
  std::vector<double> acc(cfg.seeds.size());
  ParallelFor(static_cast<int>(cfg.seeds.size()), cfg.jobs, [&](int k) {
    TrainConfig train = cfg.train;
    train.seed = cfg.seeds[k];
    if (shared) {
      acc[k] = CoresetTrial(*shared, eval_graph, train);
    } else {
      const CoresetResult result = SelectCoreset(
          select_graph, MakeCoresetConfig(cfg, num_train, cfg.seeds[k]));
      acc[k] = CoresetTrial(MakeTrainingGraph(eval_graph, result, cfg),
                            eval_graph, train);
    }
  });
  return Summarize(acc);
}

RunSummary RunFullGraphExperiment(const GraphBundle& g,
                                  const PipelineConfig& cfg) {
  Require(!cfg.seeds.empty(), ErrorCode::kUsage, "no seeds given");
  std::vector<double> acc(cfg.seeds.size());
  ParallelFor(static_cast<int>(cfg.seeds.size()), cfg.jobs, [&](int k) {
    TrainConfig train = cfg.train;
    train.seed = cfg.seeds[k];
    acc[k] = FullGraphTrial(g, train);
  });
  return Summarize(acc);
}

nlohmann::json SummaryToJson(const RunSummary& summary) {
  return {{"mean", summary.mean}, {"std", summary.std}, {"runs", summary.runs}};
}

nlohmann::json ModelToJson(const GnnModel& model) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& w : model.weights) {
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(w.size()));
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) data.push_back(w(r, c));
    }
    layers.push_back({{"rows", w.rows()}, {"cols", w.cols()}, {"data", data}});
  }
  return {{"arch", ArchName(model.arch)},
          {"layers", model.layers},
          {"dropout", model.dropout},
          {"weights", layers}};
}

GnnModel ModelFromJson(const nlohmann::json& json) {
  GnnModel model;
  try {
    model.arch = ParseArch(json.at("arch").get<std::string>());
    model.layers = json.at("layers").get<int>();
    model.dropout = json.at("dropout").get<double>();
    for (const auto& layer : json.at("weights")) {
      const auto rows = layer.at("rows").get<Eigen::Index>();
      const auto cols = layer.at("cols").get<Eigen::Index>();
      const auto data = layer.at("data").get<std::vector<double>>();
      Require(rows >= 0 && cols >= 0 &&
                  data.size() == static_cast<std::size_t>(rows * cols),
              ErrorCode::kInvalidInput, "model weight shape mismatch");
      Eigen::MatrixXd w(rows, cols);
      for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) w(r, c) = data[r * cols + c];
      }
      model.weights.push_back(std::move(w));
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidInput, std::string("malformed model JSON: ") + e.what());
  }
  Require(!model.weights.empty(), ErrorCode::kInvalidInput, "model has no weights");
  for (std::size_t k = 1; k < model.weights.size(); ++k) {
    Require(model.weights[k].rows() == model.weights[k - 1].cols(),
            ErrorCode::kInvalidInput, "model layer shapes do not chain");
  }
  return model;
}

std::vector<std::vector<double>> RsdSweep(const GraphBundle& g,
                                          const std::vector<int>& sizes,
                                          const RsdOptions& options) {
  Require(!sizes.empty(), ErrorCode::kUsage, "no ego sizes given");
  Require(options.draws >= 1, ErrorCode::kUsage, "draws must be >= 1");
  std::vector<NodeId> centers = options.centers;
  if (centers.empty()) {
    for (NodeId i = 0; i < g.num_nodes(); ++i) centers.push_back(i);
  }
  const DiffusionMatrix diff = BuildDiffusion(g);
  std::vector<GnnModel> models;
  for (int t = 0; t < options.draws; ++t) {
    models.push_back(InitModel(Arch::kGcn, g.feature_dim(), options.hidden_dim,
                               options.hidden_dim, options.depth, 0.0,
                               SubSeed(options.seed, "rsd-" + std::to_string(t))));
  }
  std::vector<std::vector<double>> out;
  for (int p : sizes) {
    std::vector<std::vector<Eigen::MatrixXd>> per_draw(options.draws);
    for (NodeId c : centers) {
      const EgoGraph ego = ExtractDiffusionEgo(diff, g, c, options.depth, p);
      const SpectralEgo spectral = ComputeSpectralEgo(ego, p, options.degrees);
      const GraphInput input = EgoGraphInput(ego);
      for (int t = 0; t < options.draws; ++t) {
        const Eigen::MatrixXd z = Forward(models[t], input);
        Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(p, z.cols());
        padded.topRows(ego.size()) = SpectralTransform(spectral.basis, z);
        per_draw[t].push_back(std::move(padded));
      }
    }
    std::vector<double> values;
    for (const auto& zs : per_draw) values.push_back(Rsd(zs, options.variant));
    out.push_back(std::move(values));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> ReadConfigFile(
    const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), ErrorCode::kUsage, "cannot open config file " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    Require(eq != std::string::npos && eq > 0, ErrorCode::kUsage,
            path + ":" + std::to_string(line_no) + ": expected key=value");
    std::string value = Trim(t.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out.emplace_back(Trim(t.substr(0, eq)), value);
  }
  return out;
}

}  // namespace sggc
