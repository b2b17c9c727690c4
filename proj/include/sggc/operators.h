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

// Sparse graph operators: the lazy random walk P = I/2 + D^-1 A / 2 and the
// symmetrically normalized Laplacian L = I - D^-1/2 A D^-1/2.
//
// Degree-0 nodes: P gets a unit self-loop and L a unit diagonal, so P stays
// row-stochastic and L stays PSD on graphs with isolated nodes.

#ifndef SGGC_OPERATORS_H_
#define SGGC_OPERATORS_H_

#include <span>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "sggc/graph.h"

namespace sggc {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct DiffusionMatrix {
  SparseMatrix p;            // rows sum to one
  SparseMatrix p_columns;    // P^T, so column i of P is row i here
  Eigen::VectorXd col_norms; // Euclidean norm of each column of P

  NodeId size() const { return static_cast<NodeId>(p.rows()); }
};

struct NormalizedLaplacian {
  SparseMatrix l;
  // Always true: degree-0 nodes carry a unit diagonal.
  bool isolated_unit_diagonal = true;

  Eigen::MatrixXd Dense() const { return Eigen::MatrixXd(l); }
};

DiffusionMatrix BuildDiffusion(const GraphBundle& g);

NormalizedLaplacian BuildNormalizedLaplacian(const GraphBundle& g);

// Laplacian of `adjacency` normalized by caller-supplied degrees, which may
// exceed the stored neighbor counts (an induced subgraph normalized with the
// parent graph's degrees).
NormalizedLaplacian BuildNormalizedLaplacian(const Adjacency& adjacency,
                                             std::span<const int> degrees);

// Row `center` of P^depth, computed by depth sparse vector-matrix products
// without materializing P^depth. Returned as a dense length-n vector.
Eigen::VectorXd DiffusionRow(const DiffusionMatrix& diff, NodeId center,
                             int depth);

}  // namespace sggc

#endif  // SGGC_OPERATORS_H_
