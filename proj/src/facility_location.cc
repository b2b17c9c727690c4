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

#include "sggc/facility_location.h"

#include <algorithm>
#include <limits>
#include <map>

#include "sggc/error.h"

namespace sggc {

LossDistanceOracle::LossDistanceOracle(Eigen::MatrixXd vs,
                                       std::vector<int> labels)
    : vs_(std::move(vs)), labels_(std::move(labels)) {
  Require(vs_.rows() == static_cast<Eigen::Index>(labels_.size()),
          ErrorCode::kInvalidInput, "one v row per training label required");
  std::map<int, std::vector<int>> by_class;
  for (int i = 0; i < size(); ++i) by_class[labels_[i]].push_back(i);
  double widest = 0.0;
  for (const auto& [label, members] : by_class) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        widest = std::max(widest, (vs_.row(members[a]) - vs_.row(members[b])).norm());
      }
    }
  }
  // With no same-class spread every cross-class pair still costs one unit.
  d_max_ = widest > 0.0 ? 2.0 * widest : 1.0;
}

double LossDistanceOracle::Distance(int i, int j) const {
  if (i == j) return 0.0;
  if (labels_[i] != labels_[j]) return d_max_;
  return (vs_.row(i) - vs_.row(j)).norm();
}

FacilityLocation::FacilityLocation(const LossDistanceOracle& oracle)
    : oracle_(&oracle),
      current_min_(oracle.size(), oracle.d_max()),
      in_set_(oracle.size(), 0),
      upper_bound_(oracle.size(), std::numeric_limits<double>::infinity()) {}

double FacilityLocation::Gain(int j) const {
  if (in_set_[j]) return 0.0;
  double total = 0.0;
  for (int i = 0; i < oracle_->size(); ++i) {
    const double d = oracle_->Distance(i, j);
    if (d < current_min_[i]) total += current_min_[i] - d;
  }
  return total / oracle_->size();
}

void FacilityLocation::Add(int j) {
  Require(j >= 0 && j < oracle_->size() && !in_set_[j],
          ErrorCode::kInvalidInput, "facility element already selected");
  in_set_[j] = 1;
  selected_.push_back(j);
  for (int i = 0; i < oracle_->size(); ++i) {
    current_min_[i] = std::min(current_min_[i], oracle_->Distance(i, j));
  }
}

double FacilityLocation::Value() const {
  double total = 0.0;
  for (double m : current_min_) total += oracle_->d_max() - m;
  return total / oracle_->size();
}

int FacilityLocation::LazyArgmax(std::span<const int> candidates) {
  std::vector<int> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (upper_bound_[a] != upper_bound_[b]) {
      return upper_bound_[a] > upper_bound_[b];
    }
    return a < b;
  });
  int best = -1;
  double best_gain = -1.0;
  for (int j : order) {
    // Remaining bounds cannot beat (or tie with a lower index) the incumbent.
    if (best >= 0 && (upper_bound_[j] < best_gain ||
                      (upper_bound_[j] == best_gain && j > best))) {
      break;
    }
    const double gain = Gain(j);
    upper_bound_[j] = gain;
    if (gain > best_gain || (gain == best_gain && j < best)) {
      best_gain = gain;
      best = j;
    }
  }
  return best;
}

double FacilityValue(const LossDistanceOracle& oracle,
                     std::span<const int> set) {
  double total = 0.0;
  for (int i = 0; i < oracle.size(); ++i) {
    double m = oracle.d_max();
    for (int j : set) m = std::min(m, oracle.Distance(i, j));
    total += oracle.d_max() - m;
  }
  return total / oracle.size();
}

std::vector<int> NearestCounts(const LossDistanceOracle& oracle,
                               std::span<const int> selected) {
  std::vector<int> slot(oracle.size(), -1);
  for (std::size_t k = 0; k < selected.size(); ++k) slot[selected[k]] = static_cast<int>(k);
  std::vector<int> sorted(selected.begin(), selected.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> counts(selected.size(), 0);
  if (selected.empty()) return counts;
  for (int i = 0; i < oracle.size(); ++i) {
    if (slot[i] >= 0) {
      ++counts[slot[i]];
      continue;
    }
    int best = sorted.front();
    double best_d = oracle.Distance(i, best);
    for (int j : sorted) {
      const double d = oracle.Distance(i, j);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    ++counts[slot[best]];
  }
  return counts;
}

}  // namespace sggc
