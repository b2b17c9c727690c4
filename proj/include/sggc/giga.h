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

// Greedy iterative geodesic ascent over the columns of the diffusion matrix.
//
// Candidates are the normalized columns l_i = P[:, i] / ||P[:, i]|| of the
// training nodes; the iterate P(w) = sum_i w_i l_i stays on the unit sphere
// and is pulled toward the uniform direction 1 / sqrt(n).

#ifndef SGGC_GIGA_H_
#define SGGC_GIGA_H_

#include <limits>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "sggc/graph.h"
#include "sggc/operators.h"

namespace sggc {

// Alignment of candidates whose residual against P(w) vanishes.
inline constexpr double kNoAlignment = -std::numeric_limits<double>::infinity();

// Step sizes after the first are kept inside [floor, 1 - floor] so earlier
// picks keep positive weight and the new pick gets some.
inline constexpr double kStepFloor = 1e-10;

class GigaState {
 public:
  GigaState(const DiffusionMatrix& diff, std::span<const NodeId> train);

  int size() const { return static_cast<int>(columns_.rows()); }
  bool empty_support() const { return support_size_ == 0; }

  // a_t and <a_t, b_t^i> for every candidate; `excluded` candidates (and
  // candidates with a degenerate residual) get kNoAlignment.
  Eigen::VectorXd Direction() const;
  std::vector<double> Alignments(std::span<const char> excluded) const;

  // Geodesic step toward candidate j.
  double StepSize(int j) const;
  void Update(int j, double eta);

  const Eigen::VectorXd& weights() const { return w_; }
  const Eigen::VectorXd& combination() const { return pw_; }
  // <1/sqrt(n), P(w)>
  double TargetAlignment() const;
  // min over scale a of ||a P(w) - 1/n||.
  double Objective() const;

  // Final rescale: w_i / (n ||P[:, i]|| ||sum_j w_j P[:, j]||).
  Eigen::VectorXd RescaledWeights() const;

 private:
  const DiffusionMatrix* diff_;
  std::vector<NodeId> train_;
  SparseMatrix columns_;  // row i = l_i
  Eigen::VectorXd w_;
  Eigen::VectorXd pw_;
  int support_size_ = 0;
  double inv_sqrt_n_;
};

}  // namespace sggc

#endif  // SGGC_GIGA_H_
