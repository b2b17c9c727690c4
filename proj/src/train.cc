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

#include "sggc/train.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sggc/error.h"

namespace sggc {

TrainResult Train(const TrainConfig& cfg, const TrainTarget& target,
                  int num_classes, const EvalTarget* validation) {
  Require(target.graph != nullptr && !target.ids.empty(),
          ErrorCode::kInvalidInput, "training target is empty");
  Require(cfg.epochs >= 0, ErrorCode::kInvalidInput, "epochs must be >= 0");
  if (!target.weights.empty()) {
    Require(target.weights.size() == target.ids.size(),
            ErrorCode::kInvalidInput, "sample weights must align with ids");
    double total = 0.0;
    for (double w : target.weights) {
      Require(w >= 0.0, ErrorCode::kInvalidInput, "negative sample weight");
      total += w;
    }
    Require(std::abs(total - 1.0) < 1e-6, ErrorCode::kInvalidInput,
            "sample weights must sum to 1");
  }

  TrainResult result;
  result.model = InitModel(cfg.arch,
                           static_cast<int>(target.graph->features.cols()),
                           cfg.hidden_dim, num_classes, cfg.layers, cfg.dropout,
                           cfg.seed);
  GnnModel& model = result.model;
  std::vector<Eigen::MatrixXd> m, v;
  for (const auto& w : model.weights) {
    m.push_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
    v.push_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
  }
  const double coupled_wd = cfg.decoupled_weight_decay ? 0.0 : cfg.weight_decay;

  ForwardCache cache;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    const DropoutKey key{true, cfg.seed, epoch};
    Forward(model, *target.graph, key, &cache);
    const double loss =
        WeightedLoss(cache.logits, target.labels, target.ids, target.weights);
    if (!std::isfinite(loss)) {
      Fail(ErrorCode::kNumerical,
           "training diverged at epoch " + std::to_string(epoch));
    }
    result.final_loss = loss;
    if (cfg.record_history) {
      HistoryRow row{epoch, loss,
                     Accuracy(cache.logits, target.labels, target.ids),
                     std::numeric_limits<double>::quiet_NaN()};
      if (validation != nullptr) row.val_acc = Evaluate(model, *validation);
      result.history.push_back(row);
    }

    const auto grads = Backward(model, *target.graph, cache, target.labels,
                                target.ids, target.weights, coupled_wd);
    const double t = epoch + 1.0;
    const double c1 = 1.0 - std::pow(cfg.beta1, t);
    const double c2 = 1.0 - std::pow(cfg.beta2, t);
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
      m[l] = cfg.beta1 * m[l] + (1.0 - cfg.beta1) * grads[l];
      v[l] = cfg.beta2 * v[l] + (1.0 - cfg.beta2) * grads[l].cwiseAbs2();
      if (cfg.decoupled_weight_decay) {
        model.weights[l] *= 1.0 - cfg.learning_rate * cfg.weight_decay;
      }
      model.weights[l].array() -=
          cfg.learning_rate * (m[l].array() / c1) /
          ((v[l].array() / c2).sqrt() + cfg.epsilon);
    }
  }
  return result;
}

double Evaluate(const GnnModel& model, const EvalTarget& target) {
  Require(target.graph != nullptr, ErrorCode::kInvalidInput,
          "evaluation graph missing");
  return Accuracy(Forward(model, *target.graph), target.labels, target.ids);
}

RunSummary Summarize(std::span<const double> runs) {
  Require(!runs.empty(), ErrorCode::kInvalidInput, "no runs to summarize");
  RunSummary summary;
  summary.runs.assign(runs.begin(), runs.end());
  summary.mean = std::accumulate(runs.begin(), runs.end(), 0.0) / runs.size();
  if (runs.size() > 1) {
    double ss = 0.0;
    for (double r : runs) ss += (r - summary.mean) * (r - summary.mean);
    summary.std = std::sqrt(ss / (runs.size() - 1));
  }
  return summary;
}

void WriteHistoryCsv(std::ostream& out, std::span<const HistoryRow> history) {
  out << "epoch,loss,train_acc,val_acc\n";
  out.precision(10);
  for (const auto& row : history) {
    out << row.epoch << ',' << row.loss << ',' << row.train_acc << ',';
    if (std::isnan(row.val_acc)) {
      out << "nan";
    } else {
      out << row.val_acc;
    }
    out << '\n';
  }
}

}  // namespace sggc
