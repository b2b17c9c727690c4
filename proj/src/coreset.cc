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

#include "sggc/coreset.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "sggc/error.h"
#include "sggc/giga.h"

namespace sggc {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void CheckConfig(const GraphBundle& g, const CoresetConfig& cfg) {
  const auto n_t = static_cast<int>(g.splits().train.size());
  Require(n_t > 0, ErrorCode::kInvalidInput, "empty training split");
  Require(cfg.size_c >= 1 && cfg.size_c <= n_t, ErrorCode::kInvalidInput,
          "coreset size must be in [1, " + std::to_string(n_t) + "]");
  Require(cfg.kappa >= 0.0 && cfg.kappa <= 1.0, ErrorCode::kInvalidInput,
          "kappa must be in [0, 1]");
  Require(cfg.max_budget_s >= 1, ErrorCode::kInvalidInput,
          "budget s must be >= 1");
}

Eigen::VectorXd Normalized(Eigen::VectorXd v) {
  const double total = v.sum();
  if (total > 0.0) v /= total;
  return v;
}

Eigen::VectorXd Indicator(int size, const std::vector<int>& local) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(size);
  for (int k : local) v[k] = 1.0;
  return Normalized(std::move(v));
}

Eigen::VectorXd CountWeights(const LossDistanceOracle& oracle,
                             const std::vector<int>& local) {
  const std::vector<int> counts = NearestCounts(oracle, local);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(oracle.size());
  for (std::size_t k = 0; k < local.size(); ++k) v[local[k]] = counts[k];
  return Normalized(std::move(v));
}

// Geodesic ascent with an optional facility-location refinement of each
// step's candidate slab. Returns local indices in selection order.
std::vector<int> RunGiga(const GraphBundle& g, const DiffusionMatrix& diff,
                         const LossDistanceOracle* refine, double kappa,
                         const CoresetConfig& cfg, CoresetResult& result,
                         Eigen::VectorXd& rescaled) {
  const auto& train = g.splits().train;
  GigaState state(diff, train);
  std::optional<FacilityLocation> fl;
  if (refine != nullptr) fl.emplace(*refine);
  std::vector<char> excluded(train.size(), 0);
  std::vector<int> picked;
  result.initial_objective = state.Objective();

  int iteration = 0;
  while (static_cast<int>(picked.size()) < cfg.size_c) {
    const std::vector<double> align = state.Alignments(excluded);
    int argmax = -1;
    for (int j = 0; j < state.size(); ++j) {
      if (align[j] == kNoAlignment) continue;
      if (argmax < 0 || align[j] > align[argmax]) argmax = j;
    }
    if (argmax < 0) {
      result.warnings.push_back(
          "candidate slab empty at iteration " + std::to_string(iteration) +
          "; stopping with " + std::to_string(picked.size()) + " nodes");
      break;
    }
    const double best = align[argmax];
    std::vector<int> slab;
    if (kappa == 0.0) {
      for (int j = 0; j < state.size(); ++j) {
        if (align[j] != kNoAlignment) slab.push_back(j);
      }
    } else if (best <= 0.0) {
      slab.push_back(argmax);
    } else {
      for (int j = 0; j < state.size(); ++j) {
        if (align[j] != kNoAlignment && align[j] >= kappa * best) {
          slab.push_back(j);
        }
      }
    }

    const int room = std::min(cfg.max_budget_s,
                              cfg.size_c - static_cast<int>(picked.size()));
    std::vector<int> batch;
    if (!fl) {
      std::vector<int> order = slab;
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return align[a] > align[b]; });
      batch.assign(order.begin(), order.begin() + std::min<std::size_t>(
                                                      room, order.size()));
    } else if (room == 1) {
      batch.push_back(fl->LazyArgmax(slab));
    } else {
      std::vector<std::pair<double, int>> gains;
      for (int j : slab) gains.emplace_back(fl->Gain(j), j);
      std::stable_sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
        return a.first > b.first;
      });
      for (std::size_t k = 0; k < gains.size() && static_cast<int>(k) < room; ++k) {
        batch.push_back(gains[k].second);
      }
    }

    for (int j : batch) {
      TraceRecord rec;
      rec.iteration = iteration;
      rec.chosen = train[j];
      rec.alignment = align[j];
      rec.gain = fl ? fl->Gain(j) : kNaN;
      rec.slab_size = static_cast<int>(slab.size());
      rec.eta = state.StepSize(j);
      state.Update(j, rec.eta);
      rec.objective = state.Objective();
      if (fl) fl->Add(j);
      excluded[j] = 1;
      picked.push_back(j);
      result.trace.push_back(rec);
    }
    ++iteration;
  }
  result.final_objective = state.Objective();
  rescaled = state.RescaledWeights();
  return picked;
}

void FinishSelection(const GraphBundle& g, const std::vector<int>& picked,
                     const LossDistanceOracle* oracle, CoresetResult& result) {
  result.train_ids = g.splits().train;
  result.selected.clear();
  for (int j : picked) result.selected.push_back(result.train_ids[j]);
  result.facility_value = oracle != nullptr ? FacilityValue(*oracle, picked) : kNaN;
}

}  // namespace

Method ParseMethod(const std::string& name) {
  if (name == "sggc") return Method::kSggc;
  if (name == "scgiga") return Method::kScgiga;
  if (name == "craig_linear") return Method::kCraigLinear;
  if (name == "uniform") return Method::kUniform;
  if (name == "herding") return Method::kHerding;
  if (name == "kcenter") return Method::kKCenter;
  Fail(ErrorCode::kUsage, "unknown method '" + name + "'");
}

std::string MethodName(Method method) {
  switch (method) {
    case Method::kSggc: return "sggc";
    case Method::kScgiga: return "scgiga";
    case Method::kCraigLinear: return "craig_linear";
    case Method::kUniform: return "uniform";
    case Method::kHerding: return "herding";
    case Method::kKCenter: return "kcenter";
  }
  return "unknown";
}

int CoresetSize(double ratio, int num_train) {
  Require(ratio > 0.0 && ratio <= 1.0, ErrorCode::kUsage,
          "ratio must be in (0, 1]");
  Require(num_train > 0, ErrorCode::kInvalidInput, "empty training split");
  const auto c = static_cast<int>(std::lround(ratio * num_train));
  return std::clamp(c, 1, num_train);
}

std::vector<double> CoresetResult::SelectedWeights() const {
  std::vector<double> out;
  for (NodeId id : selected) {
    const auto it = std::lower_bound(train_ids.begin(), train_ids.end(), id);
    const auto k = static_cast<Eigen::Index>(it - train_ids.begin());
    Require(it != train_ids.end() && *it == id, ErrorCode::kInvalidInput,
            "selected node missing from training ids");
    out.push_back(w[k]);
  }
  return out;
}

Eigen::MatrixXd TrainingEgoVectors(const GraphBundle& g,
                                   const DiffusionMatrix& diff, int depth,
                                   int size_p, DegreeSource degrees) {
  const auto& train = g.splits().train;
  Eigen::MatrixXd vs(static_cast<Eigen::Index>(train.size()), size_p);
  for (std::size_t k = 0; k < train.size(); ++k) {
    const EgoGraph ego = ExtractDiffusionEgo(diff, g, train[k], depth, size_p);
    vs.row(static_cast<Eigen::Index>(k)) =
        ComputeSpectralEgo(ego, size_p, degrees).v.transpose();
  }
  return vs;
}

LossDistanceOracle MakeOracle(const GraphBundle& g, Eigen::MatrixXd vs) {
  std::vector<int> labels;
  for (NodeId i : g.splits().train) labels.push_back(g.Label(i));
  return LossDistanceOracle(std::move(vs), std::move(labels));
}

CoresetResult SggcSelect(const GraphBundle& g, const DiffusionMatrix& diff,
                         const LossDistanceOracle& oracle,
                         const CoresetConfig& cfg) {
  CheckConfig(g, cfg);
  CoresetResult result;
  result.method = Method::kSggc;
  Eigen::VectorXd rescaled;
  const auto picked = RunGiga(g, diff, &oracle, cfg.kappa, cfg, result, rescaled);
  FinishSelection(g, picked, &oracle, result);
  result.w_a = Normalized(rescaled);
  result.w_c = CountWeights(oracle, picked);
  result.w = Normalized(result.w_a.cwiseProduct(result.w_c));
  return result;
}

CoresetResult ScgigaSelect(const GraphBundle& g, const DiffusionMatrix& diff,
                           const LossDistanceOracle* oracle,
                           const CoresetConfig& cfg) {
  CheckConfig(g, cfg);
  CoresetResult result;
  result.method = Method::kScgiga;
  Eigen::VectorXd rescaled;
  const auto picked = RunGiga(g, diff, nullptr, 1.0, cfg, result, rescaled);
  FinishSelection(g, picked, oracle, result);
  result.w_a = Normalized(rescaled);
  result.w_c = Indicator(static_cast<int>(rescaled.size()), picked);
  result.w = result.w_a;
  return result;
}

CoresetResult CraigLinearSelect(const GraphBundle& g,
                                const LossDistanceOracle& oracle,
                                const CoresetConfig& cfg) {
  CheckConfig(g, cfg);
  CoresetResult result;
  result.method = Method::kCraigLinear;
  FacilityLocation fl(oracle);
  std::vector<int> all(oracle.size());
  for (int j = 0; j < oracle.size(); ++j) all[j] = j;
  std::vector<int> picked;
  const auto& train = g.splits().train;
  for (int t = 0; t < cfg.size_c; ++t) {
    std::vector<int> candidates;
    for (int j : all) {
      if (!fl.Contains(j)) candidates.push_back(j);
    }
    const int j = fl.LazyArgmax(candidates);
    TraceRecord rec;
    rec.iteration = t;
    rec.chosen = train[j];
    rec.alignment = kNaN;
    rec.gain = fl.Gain(j);
    rec.eta = kNaN;
    rec.objective = kNaN;
    rec.slab_size = static_cast<int>(candidates.size());
    fl.Add(j);
    picked.push_back(j);
    result.trace.push_back(rec);
  }
  FinishSelection(g, picked, &oracle, result);
  result.initial_objective = kNaN;
  result.final_objective = kNaN;
  result.w_c = CountWeights(oracle, picked);
  result.w_a = Indicator(oracle.size(), picked);
  result.w = result.w_c;
  return result;
}

CoresetResult SelectCoreset(const GraphBundle& g, const CoresetConfig& cfg) {
  CheckConfig(g, cfg);
  const DiffusionMatrix diff = BuildDiffusion(g);
  const LossDistanceOracle oracle = MakeOracle(
      g, TrainingEgoVectors(g, diff, cfg.depth_L, cfg.ego_size_p, cfg.ego_degrees));
  CoresetResult result;
  switch (cfg.method) {
    case Method::kSggc:
      return SggcSelect(g, diff, oracle, cfg);
    case Method::kScgiga:
      return ScgigaSelect(g, diff, &oracle, cfg);
    case Method::kCraigLinear:
      return CraigLinearSelect(g, oracle, cfg);
    default:
      result = BaselineSelect(g, g.features(), cfg);
      break;
  }
  std::vector<int> local;
  for (NodeId id : result.selected) {
    local.push_back(static_cast<int>(
        std::lower_bound(result.train_ids.begin(), result.train_ids.end(), id) -
        result.train_ids.begin()));
  }
  result.facility_value = FacilityValue(oracle, local);
  return result;
}

namespace {

nlohmann::json Finite(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

double FromFinite(const nlohmann::json& j) {
  return j.is_null() ? kNaN : j.get<double>();
}

}  // namespace

nlohmann::json CoresetToJson(const CoresetResult& result) {
  nlohmann::json out;
  out["method"] = MethodName(result.method);
  out["selected"] = result.selected;
  std::vector<double> w, w_a, w_c;
  for (NodeId id : result.selected) {
    const auto k = std::lower_bound(result.train_ids.begin(),
                                    result.train_ids.end(), id) -
                   result.train_ids.begin();
    w.push_back(result.w[k]);
    w_a.push_back(result.w_a[k]);
    w_c.push_back(result.w_c[k]);
  }
  out["w"] = w;
  out["w_a"] = w_a;
  out["w_c"] = w_c;
  out["initial_objective"] = Finite(result.initial_objective);
  out["final_objective"] = Finite(result.final_objective);
  out["facility_value"] = Finite(result.facility_value);
  out["warnings"] = result.warnings;
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& r : result.trace) {
    trace.push_back({{"iteration", r.iteration},
                     {"chosen", r.chosen},
                     {"alignment", Finite(r.alignment)},
                     {"gain", Finite(r.gain)},
                     {"objective", Finite(r.objective)},
                     {"eta", Finite(r.eta)},
                     {"slab_size", r.slab_size}});
  }
  out["trace"] = std::move(trace);
  return out;
}

CoresetResult CoresetFromJson(const nlohmann::json& json) {
  CoresetResult result;
  try {
    result.method = ParseMethod(json.at("method").get<std::string>());
    result.selected = json.at("selected").get<std::vector<NodeId>>();
    const auto w = json.at("w").get<std::vector<double>>();
    const auto w_a = json.at("w_a").get<std::vector<double>>();
    const auto w_c = json.at("w_c").get<std::vector<double>>();
    Require(w.size() == result.selected.size() && w_a.size() == w.size() &&
                w_c.size() == w.size(),
            ErrorCode::kInvalidInput, "coreset weight arrays misaligned");
    std::vector<std::size_t> order(w.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return result.selected[a] < result.selected[b];
    });
    const auto size = static_cast<Eigen::Index>(w.size());
    result.w.resize(size);
    result.w_a.resize(size);
    result.w_c.resize(size);
    for (Eigen::Index k = 0; k < size; ++k) {
      result.train_ids.push_back(result.selected[order[k]]);
      result.w[k] = w[order[k]];
      result.w_a[k] = w_a[order[k]];
      result.w_c[k] = w_c[order[k]];
    }
    result.initial_objective = FromFinite(json.value("initial_objective", nlohmann::json()));
    result.final_objective = FromFinite(json.value("final_objective", nlohmann::json()));
    result.facility_value = FromFinite(json.value("facility_value", nlohmann::json()));
    if (json.contains("warnings")) {
      result.warnings = json["warnings"].get<std::vector<std::string>>();
    }
    for (const auto& r : json.value("trace", nlohmann::json::array())) {
      result.trace.push_back({r.at("iteration").get<int>(),
                              r.at("chosen").get<NodeId>(),
                              FromFinite(r.at("alignment")),
                              FromFinite(r.at("gain")),
                              FromFinite(r.at("objective")),
                              FromFinite(r.at("eta")),
                              r.at("slab_size").get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidInput, std::string("malformed coreset JSON: ") + e.what());
  }
  return result;
}

void WriteTraceCsv(std::ostream& out, const CoresetResult& result) {
  out << "iteration,chosen,alignment,gain,objective,eta,slab_size\n";
  out.precision(17);
  auto value = [&](double v) {
    if (std::isfinite(v)) {
      out << v;
    } else {
      out << "nan";
    }
  };
  for (const auto& r : result.trace) {
    out << r.iteration << ',' << r.chosen << ',';
    value(r.alignment);
    out << ',';
    value(r.gain);
    out << ',';
    value(r.objective);
    out << ',';
    value(r.eta);
    out << ',' << r.slab_size << '\n';
  }
}

}  // namespace sggc
