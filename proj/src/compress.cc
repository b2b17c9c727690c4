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

#include "sggc/compress.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iomanip>
#include <unordered_map>
#include <unordered_set>

#include <Eigen/SVD>

#include "sggc/ego.h"
#include "sggc/error.h"

namespace sggc {
namespace {

int RankFromBudget(double budget, int d, std::int64_t stratum_size, int level) {
  if (stratum_size <= 0 || budget <= 0.0) return 0;
  const double raw = budget / static_cast<double>(stratum_size + d + 1) *
                     std::ldexp(1.0, -level);
  const auto cap = static_cast<double>(std::min<std::int64_t>(stratum_size, d));
  return static_cast<int>(std::clamp(std::floor(raw), 0.0, cap));
}

Eigen::MatrixXd Rows(const GraphBundle& g, std::span<const NodeId> ids) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(ids.size()), g.feature_dim());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    x.row(static_cast<Eigen::Index>(k)) = g.features().row(ids[k]).cast<double>();
  }
  return x;
}

void CheckCenters(const GraphBundle& g, std::span<const NodeId> centers,
                  std::span<const double> weights) {
  Require(!centers.empty(), ErrorCode::kInvalidInput, "no coreset centers");
  Require(weights.size() == centers.size(), ErrorCode::kInvalidInput,
          "one weight per center required");
  std::unordered_set<NodeId> seen;
  for (NodeId c : centers) {
    Require(c >= 0 && c < g.num_nodes(), ErrorCode::kInvalidInput,
            "center id out of range");
    Require(seen.insert(c).second, ErrorCode::kInvalidInput,
            "duplicate coreset center");
    Require(g.Label(c) != kUnlabeled, ErrorCode::kInvalidInput,
            "coreset center without a label");
  }
}

// Train ids (local, ascending) and their weights.
void AttachCenters(const std::vector<NodeId>& original_ids,
                   std::span<const NodeId> centers,
                   std::span<const double> weights, CoresetGraph& out) {
  std::vector<std::pair<NodeId, double>> local;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    const auto it =
        std::lower_bound(original_ids.begin(), original_ids.end(), centers[k]);
    local.emplace_back(static_cast<NodeId>(it - original_ids.begin()), weights[k]);
  }
  std::sort(local.begin(), local.end());
  for (const auto& [id, w] : local) {
    out.train.push_back(id);
    out.weights.push_back(w);
  }
}

}  // namespace

UnionAssembly AssembleUnion(const GraphBundle& g,
                            std::span<const NodeId> centers, int depth) {
  Require(!centers.empty(), ErrorCode::kInvalidInput, "no coreset centers");
  Require(depth >= 0, ErrorCode::kInvalidInput, "depth must be >= 0");
  std::unordered_map<NodeId, int> dist;
  std::deque<NodeId> queue;
  for (NodeId c : centers) {
    Require(c >= 0 && c < g.num_nodes(), ErrorCode::kInvalidInput,
            "center id out of range");
    if (dist.emplace(c, 0).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    const int du = dist[u];
    if (du == depth) continue;
    for (NodeId v : g.Neighbors(u)) {
      if (dist.emplace(v, du + 1).second) queue.push_back(v);
    }
  }
  UnionAssembly out;
  out.nodes.reserve(dist.size());
  for (const auto& [v, d] : dist) out.nodes.push_back(v);
  std::sort(out.nodes.begin(), out.nodes.end());
  out.strata.resize(depth + 1);
  for (NodeId v : out.nodes) {
    const int d = dist[v];
    out.distance.push_back(d);
    out.strata[d].push_back(v);
  }
  out.adjacency = InducedAdjacency(g, out.nodes);
  return out;
}

int StratumRank(std::int64_t c, int d, std::int64_t stratum_size, int level) {
  Require(level >= 1, ErrorCode::kInvalidInput, "stratum level must be >= 1");
  return RankFromBudget(static_cast<double>(c) * d, d, stratum_size, level);
}

StratumFactors CompressStratum(const Eigen::MatrixXd& features, int q) {
  const auto limit = std::min(features.rows(), features.cols());
  Require(q >= 0 && q <= limit, ErrorCode::kInvalidInput,
          "rank exceeds min(rows, cols)");
  StratumFactors out;
  if (q == 0) {
    out.u.resize(features.rows(), 0);
    out.basis.resize(0, features.cols());
    out.error = features.squaredNorm();
    out.tail_energy = out.error;
    return out;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(features,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  out.u = svd.matrixU().leftCols(q);
  out.sigma = s.head(q);
  out.basis = svd.matrixV().leftCols(q).transpose();
  out.tail_energy = s.tail(s.size() - q).squaredNorm();
  out.error =
      (features - out.u * out.sigma.asDiagonal() * out.basis).squaredNorm();
  return out;
}

std::uint16_t ToHalf(double value) {
  const std::uint16_t sign = std::signbit(value) ? 0x8000 : 0;
  const double a = std::abs(value);
  if (std::isnan(value)) return 0x7E00;
  // 65520 is the midpoint between the largest half and 2^16.
  if (a >= 65520.0) return sign | 0x7C00;
  if (a < std::ldexp(1.0, -14)) {
    // Subnormal range; 1024 lands exactly on the smallest normal encoding.
    return sign | static_cast<std::uint16_t>(std::nearbyint(std::ldexp(a, 24)));
  }
  int exp = 0;
  const double frac = std::frexp(a, &exp);  // a = frac * 2^exp, frac in [.5, 1)
  int e = exp - 1;
  double m = std::nearbyint((frac * 2.0 - 1.0) * 1024.0);
  if (m == 1024.0) {
    m = 0.0;
    ++e;
  }
  if (e > 15) return sign | 0x7C00;
  return sign | static_cast<std::uint16_t>(((e + 15) << 10) |
                                          static_cast<int>(m));
}

double FromHalf(std::uint16_t bits) {
  const double sign = (bits & 0x8000) ? -1.0 : 1.0;
  const int e = (bits >> 10) & 0x1F;
  const int m = bits & 0x3FF;
  if (e == 0) return sign * std::ldexp(m, -24);
  if (e == 31) {
    return m == 0 ? sign * HUGE_VAL : std::nan("");
  }
  return sign * std::ldexp(1024 + m, e - 25);
}

std::vector<std::uint16_t> ToHalf(const Eigen::MatrixXd& m) {
  std::vector<std::uint16_t> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(ToHalf(m(r, c)));
  }
  return out;
}

Eigen::MatrixXd FromHalf(std::span<const std::uint16_t> bits, Eigen::Index rows,
                         Eigen::Index cols) {
  Require(static_cast<Eigen::Index>(bits.size()) == rows * cols,
          ErrorCode::kInvalidInput, "half blob size mismatch");
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) out(r, c) = FromHalf(bits[r * cols + c]);
  }
  return out;
}

std::int64_t CompressedStratum::StoredValues(int d) const {
  return static_cast<std::int64_t>(nodes.size() + d + 1) * rank +
         static_cast<std::int64_t>(mean.size());
}

std::int64_t CompressedCoreset::StratumValues() const {
  std::int64_t total = 0;
  for (const auto& s : strata) total += s.StoredValues(feature_dim);
  return total;
}

std::int64_t CompressedCoreset::CenterValues() const {
  return static_cast<std::int64_t>(center_features.size());
}

std::int64_t CompressedCoreset::Budget() const {
  return static_cast<std::int64_t>(centers.size()) * feature_dim;
}

std::int64_t CompressedCoreset::CompressedFeatureBytes() const {
  return 2 * (CenterValues() + StratumValues());
}

std::int64_t CompressedCoreset::UncompressedFeatureBytes() const {
  return 2 * static_cast<std::int64_t>(nodes.size()) * feature_dim;
}

CompressedCoreset Compress(const GraphBundle& g, std::span<const NodeId> centers,
                           std::span<const double> weights, int depth,
                           bool centered) {
  CheckCenters(g, centers, weights);
  const UnionAssembly assembly = AssembleUnion(g, centers, depth);
  const int d = g.feature_dim();
  CompressedCoreset cc;
  cc.depth = depth;
  cc.feature_dim = d;
  cc.num_classes = g.num_classes();
  cc.centered = centered;
  cc.nodes = assembly.nodes;
  cc.adjacency = assembly.adjacency;
  for (NodeId v : cc.nodes) cc.original_degrees.push_back(g.Degree(v));
  cc.centers.assign(centers.begin(), centers.end());
  cc.weights.assign(weights.begin(), weights.end());
  for (NodeId c : centers) cc.center_labels.push_back(g.Label(c));
  cc.center_features = ToHalf(Rows(g, centers));

  int nonempty = 0;
  for (int l = 1; l <= depth; ++l) nonempty += !assembly.strata[l].empty();
  double budget = static_cast<double>(centers.size()) * d;
  if (centered) budget = std::max(0.0, budget - static_cast<double>(nonempty) * d);

  for (int l = 1; l <= depth; ++l) {
    CompressedStratum stratum;
    stratum.level = l;
    stratum.nodes = assembly.strata[l];
    const Eigen::MatrixXd original = Rows(g, stratum.nodes);
    Eigen::MatrixXd block = original;
    Eigen::RowVectorXd mean_h = Eigen::RowVectorXd::Zero(d);
    if (centered && !stratum.nodes.empty()) {
      const Eigen::RowVectorXd mean = block.colwise().mean();
      stratum.mean = ToHalf(Eigen::MatrixXd(mean));
      mean_h = FromHalf(stratum.mean, 1, d);
      block.rowwise() -= mean;
    }
    stratum.rank = RankFromBudget(budget, d,
                                  static_cast<std::int64_t>(stratum.nodes.size()), l);
    const StratumFactors f = CompressStratum(block, stratum.rank);
    stratum.error_pre = f.error;
    stratum.u = ToHalf(f.u);
    stratum.sigma = ToHalf(Eigen::MatrixXd(f.sigma.transpose()));
    stratum.basis = ToHalf(f.basis);
    const auto rows = static_cast<Eigen::Index>(stratum.nodes.size());
    Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(rows, d);
    if (stratum.rank > 0) {
      const Eigen::VectorXd s = FromHalf(stratum.sigma, 1, stratum.rank).transpose();
      recon = FromHalf(stratum.u, rows, stratum.rank) * s.asDiagonal() *
              FromHalf(stratum.basis, stratum.rank, d);
    }
    if (centered && rows > 0) recon.rowwise() += mean_h;
    stratum.error_post = (original - recon).squaredNorm();
    cc.strata.push_back(std::move(stratum));
  }
  return cc;
}

CoresetGraph BuildCoresetGraph(const GraphBundle& g,
                               std::span<const NodeId> centers,
                               std::span<const double> weights, int depth,
                               CoresetGraphMode mode) {
  CheckCenters(g, centers, weights);
  CoresetGraph out;
  out.num_classes = g.num_classes();
  if (mode == CoresetGraphMode::kEgoUnion) {
    UnionAssembly assembly = AssembleUnion(g, centers, depth);
    out.original_ids = std::move(assembly.nodes);
    out.adjacency = std::move(assembly.adjacency);
  } else {
    out.original_ids.assign(centers.begin(), centers.end());
    std::sort(out.original_ids.begin(), out.original_ids.end());
    out.adjacency = InducedAdjacency(g, out.original_ids);
  }
  const auto n = static_cast<Eigen::Index>(out.original_ids.size());
  out.features.resize(n, g.feature_dim());
  out.labels.assign(n, kUnlabeled);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.features.row(k) = g.features().row(out.original_ids[k]);
    out.original_degrees.push_back(g.Degree(out.original_ids[k]));
  }
  AttachCenters(out.original_ids, centers, weights, out);
  for (std::size_t k = 0; k < out.train.size(); ++k) {
    out.labels[out.train[k]] = g.Label(out.original_ids[out.train[k]]);
  }
  return out;
}

CoresetGraph Decompress(const CompressedCoreset& cc) {
  const int d = cc.feature_dim;
  CoresetGraph out;
  out.num_classes = cc.num_classes;
  out.original_ids = cc.nodes;
  out.adjacency = cc.adjacency;
  out.original_degrees = cc.original_degrees;
  const auto n = static_cast<Eigen::Index>(cc.nodes.size());
  out.features = FeatureMatrix::Zero(n, d);
  out.labels.assign(n, kUnlabeled);
  auto local = [&](NodeId id) {
    const auto it = std::lower_bound(cc.nodes.begin(), cc.nodes.end(), id);
    Require(it != cc.nodes.end() && *it == id, ErrorCode::kInvalidInput,
            "compressed node missing from the node list");
    return static_cast<Eigen::Index>(it - cc.nodes.begin());
  };
  const Eigen::MatrixXd centers = FromHalf(
      cc.center_features, static_cast<Eigen::Index>(cc.centers.size()), d);
  for (std::size_t k = 0; k < cc.centers.size(); ++k) {
    const Eigen::Index r = local(cc.centers[k]);
    out.features.row(r) = centers.row(static_cast<Eigen::Index>(k)).cast<float>();
    out.labels[r] = cc.center_labels[k];
  }
  for (const auto& s : cc.strata) {
    const auto rows = static_cast<Eigen::Index>(s.nodes.size());
    if (rows == 0) continue;
    Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(rows, d);
    if (s.rank > 0) {
      const Eigen::VectorXd sigma = FromHalf(s.sigma, 1, s.rank).transpose();
      recon = FromHalf(s.u, rows, s.rank) * sigma.asDiagonal() *
              FromHalf(s.basis, s.rank, d);
    }
    if (!s.mean.empty()) recon.rowwise() += FromHalf(s.mean, 1, d).row(0);
    for (Eigen::Index k = 0; k < rows; ++k) {
      out.features.row(local(s.nodes[k])) = recon.row(k).cast<float>();
    }
  }
  AttachCenters(out.original_ids, cc.centers, cc.weights, out);
  return out;
}

void PrintCompressionReport(std::ostream& out, const CompressedCoreset& cc) {
  out << std::left << std::setw(8) << "stratum" << std::setw(10) << "|V|"
      << std::setw(6) << "q" << std::setw(14) << "values" << std::setw(16)
      << "error_pre" << "error_post\n";
  out << std::setw(8) << 0 << std::setw(10) << cc.centers.size() << std::setw(6)
      << "-" << std::setw(14) << cc.CenterValues() << std::setw(16) << "-"
      << "-\n";
  for (const auto& s : cc.strata) {
    out << std::setw(8) << s.level << std::setw(10) << s.nodes.size()
        << std::setw(6) << s.rank << std::setw(14) << s.StoredValues(cc.feature_dim)
        << std::setw(16) << std::setprecision(6) << s.error_pre << s.error_post
        << '\n';
  }
  out << "stratum values " << cc.StratumValues() << " / budget c*d "
      << cc.Budget() << '\n';
  out << "feature bytes " << cc.CompressedFeatureBytes() << " compressed vs "
      << cc.UncompressedFeatureBytes() << " uncompressed union (half precision)\n";
}

}  // namespace sggc
