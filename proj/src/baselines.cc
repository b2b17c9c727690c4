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

// Model-agnostic selection baselines in input feature space.

#include <algorithm>
#include <limits>
#include <numeric>

#include "sggc/coreset.h"
#include "sggc/error.h"
#include "sggc/random.h"

namespace sggc {
namespace {

std::vector<int> UniformPick(int n_t, int c, std::uint64_t seed) {
  Rng rng(SubSeed(seed, "select-uniform"));
  std::vector<int> order(n_t);
  std::iota(order.begin(), order.end(), 0);
  for (int k = 0; k < c; ++k) {
    const auto r = k + static_cast<int>(UniformIndex(rng, n_t - k));
    std::swap(order[k], order[r]);
  }
  order.resize(c);
  std::sort(order.begin(), order.end());
  return order;
}

// Largest-remainder split of c across classes, leftovers to the largest
// classes (lowest class id on ties).
std::vector<int> ClassBudgets(const std::vector<std::vector<int>>& members,
                              int c, int n_t) {
  const auto k = static_cast<int>(members.size());
  std::vector<int> budget(k, 0);
  int used = 0;
  for (int m = 0; m < k; ++m) {
    budget[m] = static_cast<int>(
        static_cast<long long>(c) * static_cast<long long>(members[m].size()) / n_t);
    used += budget[m];
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return members[a].size() > members[b].size();
  });
  while (used < c) {
    bool placed = false;
    for (int m : order) {
      if (used == c) break;
      if (budget[m] < static_cast<int>(members[m].size())) {
        ++budget[m];
        ++used;
        placed = true;
      }
    }
    if (!placed) break;
  }
  return budget;
}

std::vector<int> HerdingPick(const Eigen::MatrixXd& x,
                             const std::vector<int>& labels, int num_classes,
                             int c, std::vector<std::string>& warnings) {
  const auto n_t = static_cast<int>(labels.size());
  std::vector<std::vector<int>> members(num_classes);
  for (int i = 0; i < n_t; ++i) members[labels[i]].push_back(i);
  const std::vector<int> budget = ClassBudgets(members, c, n_t);
  std::vector<int> picked;
  for (int m = 0; m < num_classes; ++m) {
    if (budget[m] == 0 && !members[m].empty()) {
      warnings.push_back("herding: class " + std::to_string(m) +
                         " receives no coreset nodes");
    }
    if (budget[m] == 0) continue;
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(x.cols());
    for (int i : members[m]) mean += x.row(i);
    mean /= static_cast<double>(members[m].size());
    Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(x.cols());
    std::vector<char> taken(n_t, 0);
    for (int t = 1; t <= budget[m]; ++t) {
      int best = -1;
      double best_err = std::numeric_limits<double>::infinity();
      for (int i : members[m]) {
        if (taken[i]) continue;
        const double err = (mean - (sum + x.row(i)) / t).squaredNorm();
        if (err < best_err) {
          best_err = err;
          best = i;
        }
      }
      taken[best] = 1;
      sum += x.row(best);
      picked.push_back(best);
    }
  }
  return picked;
}

std::vector<int> KCenterPick(const Eigen::MatrixXd& x, int c) {
  const auto n_t = static_cast<int>(x.rows());
  const Eigen::RowVectorXd mean = x.colwise().mean();
  int first = 0;
  double first_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_t; ++i) {
    const double d = (x.row(i) - mean).squaredNorm();
    if (d < first_d) {
      first_d = d;
      first = i;
    }
  }
  std::vector<int> picked{first};
  std::vector<double> nearest(n_t);
  for (int i = 0; i < n_t; ++i) nearest[i] = (x.row(i) - x.row(first)).squaredNorm();
  std::vector<char> taken(n_t, 0);
  taken[first] = 1;
  while (static_cast<int>(picked.size()) < c) {
    int best = -1;
    for (int i = 0; i < n_t; ++i) {
      if (!taken[i] && (best < 0 || nearest[i] > nearest[best])) best = i;
    }
    taken[best] = 1;
    picked.push_back(best);
    for (int i = 0; i < n_t; ++i) {
      nearest[i] = std::min(nearest[i], (x.row(i) - x.row(best)).squaredNorm());
    }
  }
  return picked;
}

}  // namespace

CoresetResult BaselineSelect(const GraphBundle& g, const FeatureMatrix& features,
                             const CoresetConfig& cfg) {
  const auto& train = g.splits().train;
  const auto n_t = static_cast<int>(train.size());
  Require(n_t > 0, ErrorCode::kInvalidInput, "empty training split");
  Require(cfg.size_c >= 1 && cfg.size_c <= n_t, ErrorCode::kInvalidInput,
          "coreset size must be in [1, " + std::to_string(n_t) + "]");
  Require(features.rows() == g.num_nodes(), ErrorCode::kInvalidInput,
          "baseline features need one row per node");
  Eigen::MatrixXd x(n_t, features.cols());
  std::vector<int> labels(n_t);
  for (int k = 0; k < n_t; ++k) {
    x.row(k) = features.row(train[k]).cast<double>();
    labels[k] = g.Label(train[k]);
  }

  CoresetResult result;
  result.method = cfg.method;
  std::vector<int> picked;
  switch (cfg.method) {
    case Method::kUniform:
      picked = UniformPick(n_t, cfg.size_c, cfg.seed);
      break;
    case Method::kHerding:
      picked = HerdingPick(x, labels, g.num_classes(), cfg.size_c,
                           result.warnings);
      break;
    case Method::kKCenter:
      picked = KCenterPick(x, cfg.size_c);
      break;
    default:
      Fail(ErrorCode::kInvalidInput,
           MethodName(cfg.method) + " is not a baseline method");
  }
  result.train_ids = train;
  for (int j : picked) result.selected.push_back(train[j]);
  Eigen::VectorXd uniform = Eigen::VectorXd::Zero(n_t);
  for (int j : picked) uniform[j] = 1.0 / picked.size();
  result.w = uniform;
  result.w_a = uniform;
  result.w_c = uniform;
  result.initial_objective = std::numeric_limits<double>::quiet_NaN();
  result.final_objective = std::numeric_limits<double>::quiet_NaN();
  result.facility_value = std::numeric_limits<double>::quiet_NaN();
  return result;
}

}  // namespace sggc
