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

// Facility-location objective over training nodes.
//
// Distances are a loss-difference surrogate: ||v_i - v_j|| for nodes of the
// same class, and a constant d_max (twice the largest same-class distance)
// across classes. An auxiliary element at distance d_max from every node
// anchors F(S) = H({i0}) - H(S + {i0}) with H the mean distance to the
// nearest element, so F(empty) = 0 and F is monotone submodular.
//
// All indices here are local: position in the training list.

#ifndef SGGC_FACILITY_LOCATION_H_
#define SGGC_FACILITY_LOCATION_H_

#include <span>
#include <vector>

#include <Eigen/Core>

namespace sggc {

class LossDistanceOracle {
 public:
  // `vs` is n_t x p (one row per training node).
  LossDistanceOracle(Eigen::MatrixXd vs, std::vector<int> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  double d_max() const { return d_max_; }
  double Distance(int i, int j) const;
  const Eigen::MatrixXd& vs() const { return vs_; }
  const std::vector<int>& labels() const { return labels_; }

 private:
  Eigen::MatrixXd vs_;
  std::vector<int> labels_;
  double d_max_ = 0.0;
};

class FacilityLocation {
 public:
  explicit FacilityLocation(const LossDistanceOracle& oracle);

  // F(S + {j}) - F(S); zero when j is already selected.
  double Gain(int j) const;
  void Add(int j);
  // F(S) = d_max - mean_i min(d_max, min_{j in S} d(i, j)).
  double Value() const;
  bool Contains(int j) const { return in_set_[j]; }
  const std::vector<int>& selected() const { return selected_; }

  // Lazy greedy step over `candidates`: the candidate of largest gain, lowest
  // index on ties, or -1 when `candidates` is empty. Cached gains from earlier
  // calls serve as upper bounds.
  int LazyArgmax(std::span<const int> candidates);

 private:
  const LossDistanceOracle* oracle_;
  std::vector<double> current_min_;
  std::vector<char> in_set_;
  std::vector<int> selected_;
  std::vector<double> upper_bound_;
};

// F for an arbitrary set (brute-force reference for small instances).
double FacilityValue(const LossDistanceOracle& oracle,
                     std::span<const int> set);

// Per-element counts of nodes whose nearest selected element (lowest index on
// ties, selected elements map to themselves) is that element. Aligned with
// `selected`.
std::vector<int> NearestCounts(const LossDistanceOracle& oracle,
                               std::span<const int> selected);

}  // namespace sggc

#endif  // SGGC_FACILITY_LOCATION_H_
