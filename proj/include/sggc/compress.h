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

// The coreset graph (union of the selected centers' depth-L egos) and its
// compressed form: center features kept at half precision, other nodes
// grouped by hop distance to the nearest center and stored as a truncated
// SVD per group, also at half precision.

#ifndef SGGC_COMPRESS_H_
#define SGGC_COMPRESS_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "sggc/graph.h"

namespace sggc {

struct UnionAssembly {
  std::vector<NodeId> nodes;   // ascending original ids
  std::vector<int> distance;   // hop distance to the nearest center
  Adjacency adjacency;         // induced, local ids
  // strata[l]: original ids at distance l, ascending. strata[0] = centers.
  std::vector<std::vector<NodeId>> strata;
};

UnionAssembly AssembleUnion(const GraphBundle& g,
                            std::span<const NodeId> centers, int depth);

// floor(c d / (size + d + 1) * 2^-level), clamped to [0, min(size, d)].
int StratumRank(std::int64_t c, int d, std::int64_t stratum_size, int level);

struct StratumFactors {
  Eigen::MatrixXd u;        // size x q
  Eigen::VectorXd sigma;    // q
  Eigen::MatrixXd basis;    // q x d
  double error = 0.0;       // ||X - U diag(sigma) basis||_F^2 before rounding
  double tail_energy = 0.0; // sum of discarded sigma_k^2
};

// Best rank-q approximation of the (uncentered) block.
StratumFactors CompressStratum(const Eigen::MatrixXd& features, int q);

// IEEE half precision, round to nearest even.
std::uint16_t ToHalf(double value);
double FromHalf(std::uint16_t bits);
std::vector<std::uint16_t> ToHalf(const Eigen::MatrixXd& m);  // row-major
Eigen::MatrixXd FromHalf(std::span<const std::uint16_t> bits, Eigen::Index rows,
                         Eigen::Index cols);

struct CompressedStratum {
  int level = 0;
  std::vector<NodeId> nodes;  // original ids
  int rank = 0;
  std::vector<std::uint16_t> mean;  // centered mode only, length d
  std::vector<std::uint16_t> u;     // |nodes| x rank
  std::vector<std::uint16_t> sigma; // rank
  std::vector<std::uint16_t> basis; // rank x d
  double error_pre = 0.0;   // before half rounding
  double error_post = 0.0;  // from the stored halves

  std::int64_t StoredValues(int d) const;
};

struct CompressedCoreset {
  int depth = 0;
  int feature_dim = 0;
  int num_classes = 0;
  bool centered = false;
  std::vector<NodeId> nodes;  // ascending original ids
  Adjacency adjacency;
  std::vector<int> original_degrees;
  std::vector<NodeId> centers;        // selection order
  std::vector<double> weights;        // aligned with centers
  std::vector<int> center_labels;     // aligned with centers
  std::vector<std::uint16_t> center_features;  // |centers| x d
  std::vector<CompressedStratum> strata;       // levels 1..depth

  std::int64_t StratumValues() const;
  std::int64_t CenterValues() const;
  std::int64_t Budget() const;  // c d
  // Half-precision bytes of all stored feature values vs of the full union.
  std::int64_t CompressedFeatureBytes() const;
  std::int64_t UncompressedFeatureBytes() const;
};

// Centered mode subtracts each stratum's mean first (stored, d values) and
// reserves those values from the budget.
CompressedCoreset Compress(const GraphBundle& g, std::span<const NodeId> centers,
                           std::span<const double> weights, int depth,
                           bool centered = false);

// A training-ready coreset graph: the loss lives on the centers only and the
// convolution uses the parent graph's degrees.
struct CoresetGraph {
  std::vector<NodeId> original_ids;  // local -> original
  Adjacency adjacency;
  std::vector<int> original_degrees;
  FeatureMatrix features;
  std::vector<int> labels;        // kUnlabeled off the centers
  std::vector<NodeId> train;      // local center ids, ascending
  std::vector<double> weights;    // aligned with train
  int num_classes = 0;
};

enum class CoresetGraphMode { kEgoUnion, kCentersOnly };

// Uncompressed coreset graph with exact features.
CoresetGraph BuildCoresetGraph(const GraphBundle& g,
                               std::span<const NodeId> centers,
                               std::span<const double> weights, int depth,
                               CoresetGraphMode mode = CoresetGraphMode::kEgoUnion);

CoresetGraph Decompress(const CompressedCoreset& cc);

void WriteCompressed(const std::filesystem::path& path,
                     const CompressedCoreset& cc);
CompressedCoreset ReadCompressed(const std::filesystem::path& path);

// Table of stratum, |V|, q, stored values and reconstruction errors.
void PrintCompressionReport(std::ostream& out, const CompressedCoreset& cc);

}  // namespace sggc

#endif  // SGGC_COMPRESS_H_
