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

// Full-batch Adam training and evaluation of GnnModel.

#ifndef SGGC_TRAIN_H_
#define SGGC_TRAIN_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "sggc/gnn.h"

namespace sggc {

struct TrainConfig {
  Arch arch = Arch::kGcn;
  int layers = 2;
  int hidden_dim = 256;
  double dropout = 0.5;
  int epochs = 600;
  double learning_rate = 0.01;
  double weight_decay = 5e-4;
  // Decoupled: W -= lr * wd * W after the Adam step instead of adding wd * W
  // to the gradient.
  bool decoupled_weight_decay = false;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::uint64_t seed = 0;
  bool record_history = false;
};

// Nodes of `graph` that carry the loss, with optional sample weights (empty
// means uniform).
struct TrainTarget {
  const GraphInput* graph = nullptr;
  std::span<const int> labels;
  std::span<const NodeId> ids;
  std::span<const double> weights;
};

struct EvalTarget {
  const GraphInput* graph = nullptr;
  std::span<const int> labels;
  std::span<const NodeId> ids;
};

struct HistoryRow {
  int epoch;
  double loss;
  double train_acc;
  double val_acc;  // NaN without a validation target
};

struct TrainResult {
  GnnModel model;
  std::vector<HistoryRow> history;
  double final_loss = 0.0;
};

// Throws Error(kNumerical) when the loss becomes non-finite.
TrainResult Train(const TrainConfig& cfg, const TrainTarget& target,
                  int num_classes, const EvalTarget* validation = nullptr);

// Dropout off.
double Evaluate(const GnnModel& model, const EvalTarget& target);

struct RunSummary {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single run
  std::vector<double> runs;
};

RunSummary Summarize(std::span<const double> runs);

void WriteHistoryCsv(std::ostream& out, std::span<const HistoryRow> history);

}  // namespace sggc

#endif  // SGGC_TRAIN_H_
