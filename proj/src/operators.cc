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

#include "sggc/operators.h"

#include <cmath>
#include <vector>

#include "sggc/error.h"

namespace sggc {

DiffusionMatrix BuildDiffusion(const GraphBundle& g) {
  const NodeId n = g.num_nodes();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n + 2 * g.num_edges()));
  for (NodeId i = 0; i < n; ++i) {
    const int deg = g.Degree(i);
    if (deg == 0) {
      triplets.emplace_back(i, i, 1.0);
      continue;
    }
    triplets.emplace_back(i, i, 0.5);
    const double off = 0.5 / deg;
    for (NodeId j : g.Neighbors(i)) triplets.emplace_back(i, j, off);
  }
  DiffusionMatrix diff;
  diff.p.resize(n, n);
  diff.p.setFromTriplets(triplets.begin(), triplets.end());
  diff.p.makeCompressed();
  diff.p_columns = diff.p.transpose();
  diff.p_columns.makeCompressed();
  diff.col_norms.resize(n);
  for (NodeId i = 0; i < n; ++i) {
    diff.col_norms[i] = diff.p_columns.row(i).norm();
  }
  return diff;
}

NormalizedLaplacian BuildNormalizedLaplacian(const Adjacency& adjacency,
                                             std::span<const int> degrees) {
  const NodeId n = adjacency.num_nodes();
  Require(static_cast<NodeId>(degrees.size()) == n, ErrorCode::kInvalidInput,
          "degree vector does not match adjacency size");
  std::vector<double> inv_sqrt(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    Require(degrees[i] >= static_cast<int>(adjacency.Neighbors(i).size()),
            ErrorCode::kInvalidInput,
            "supplied degree smaller than stored neighbor count");
    if (degrees[i] > 0) inv_sqrt[i] = 1.0 / std::sqrt(double(degrees[i]));
  }
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(adjacency.col_idx.size() + static_cast<std::size_t>(n));
  for (NodeId i = 0; i < n; ++i) {
    triplets.emplace_back(i, i, 1.0);
    for (NodeId j : adjacency.Neighbors(i)) {
      triplets.emplace_back(i, j, -inv_sqrt[i] * inv_sqrt[j]);
    }
  }
  NormalizedLaplacian lap;
  lap.l.resize(n, n);
  lap.l.setFromTriplets(triplets.begin(), triplets.end());
  lap.l.makeCompressed();
  return lap;
}

NormalizedLaplacian BuildNormalizedLaplacian(const GraphBundle& g) {
  return BuildNormalizedLaplacian(g.adjacency(), g.degrees());
}

Eigen::VectorXd DiffusionRow(const DiffusionMatrix& diff, NodeId center,
                             int depth) {
  const NodeId n = diff.size();
  Require(center >= 0 && center < n, ErrorCode::kInvalidInput,
          "center " + std::to_string(center) + " out of range");
  Require(depth >= 0, ErrorCode::kInvalidInput, "depth must be >= 0");

  Eigen::VectorXd current = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd next = Eigen::VectorXd::Zero(n);
  std::vector<NodeId> support{center}, next_support;
  std::vector<char> in_next(n, 0);
  current[center] = 1.0;

  // r <- r P touches only rows of P in the current support.
  for (int step = 0; step < depth; ++step) {
    next_support.clear();
    for (NodeId i : support) {
      const double mass = current[i];
      for (SparseMatrix::InnerIterator it(diff.p, i); it; ++it) {
        const auto j = static_cast<NodeId>(it.col());
        if (!in_next[j]) {
          in_next[j] = 1;
          next_support.push_back(j);
        }
        next[j] += mass * it.value();
      }
    }
    for (NodeId i : support) current[i] = 0.0;
    for (NodeId j : next_support) in_next[j] = 0;
    std::swap(current, next);
    std::swap(support, next_support);
  }
  return current;
}

}  // namespace sggc
