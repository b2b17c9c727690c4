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

#include "sggc/gnn.h"

#include <cmath>

#include "sggc/error.h"
#include "sggc/random.h"

namespace sggc {
namespace {

std::uint64_t DropoutStream(const DropoutKey& key, int layer) {
  const std::uint64_t base = SubSeed(key.seed, "dropout");
  return SplitMix64(base ^ SplitMix64(static_cast<std::uint64_t>(key.epoch) *
                                          64 +
                                      static_cast<std::uint64_t>(layer)));
}

Eigen::MatrixXd DropoutMask(Eigen::Index rows, Eigen::Index cols, double rate,
                            std::uint64_t stream) {
  Eigen::MatrixXd mask(rows, cols);
  const double scale = 1.0 / (1.0 - rate);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto counter = static_cast<std::uint64_t>(r * cols + c);
      mask(r, c) = HashUniform(stream, counter) >= rate ? scale : 0.0;
    }
  }
  return mask;
}

const Eigen::MatrixXd& Propagated(const GraphInput& input, int depth) {
  if (!input.propagated || input.propagated_depth != depth) {
    Eigen::MatrixXd s = Eigen::MatrixXd(input.features);
    for (int l = 0; l < depth; ++l) s = input.conv * s;
    input.propagated = std::move(s);
    input.propagated_depth = depth;
  }
  return *input.propagated;
}

}  // namespace

Arch ParseArch(const std::string& name) {
  if (name == "gcn") return Arch::kGcn;
  if (name == "sgc") return Arch::kSgc;
  Fail(ErrorCode::kUsage, "unknown architecture '" + name + "'");
}

std::string ArchName(Arch arch) { return arch == Arch::kGcn ? "gcn" : "sgc"; }

GnnModel InitModel(Arch arch, int in_dim, int hidden_dim, int num_classes,
                   int layers, double dropout, std::uint64_t seed) {
  Require(in_dim > 0 && num_classes > 0 && layers >= 0,
          ErrorCode::kInvalidInput, "invalid model dimensions");
  Require(dropout >= 0.0 && dropout < 1.0, ErrorCode::kInvalidInput,
          "dropout must be in [0, 1)");
  GnnModel model;
  model.arch = arch;
  model.layers = layers;
  model.dropout = dropout;
  std::vector<int> dims;
  if (arch == Arch::kSgc || layers <= 1) {
    dims = {in_dim, num_classes};
  } else {
    Require(hidden_dim > 0, ErrorCode::kInvalidInput, "hidden_dim must be > 0");
    dims.push_back(in_dim);
    for (int l = 0; l + 1 < layers; ++l) dims.push_back(hidden_dim);
    dims.push_back(num_classes);
  }
  Rng rng(SubSeed(seed, "init"));
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    const double limit = std::sqrt(6.0 / (dims[l] + dims[l + 1]));
    Eigen::MatrixXd w(dims[l], dims[l + 1]);
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) {
        w(r, c) = (2.0 * UniformUnit(rng) - 1.0) * limit;
      }
    }
    model.weights.push_back(std::move(w));
  }
  return model;
}

SparseMatrix BuildConvolution(const Adjacency& adjacency,
                              std::span<const int> degrees) {
  const NodeId n = adjacency.num_nodes();
  Require(static_cast<NodeId>(degrees.size()) == n, ErrorCode::kInvalidInput,
          "degree vector size mismatch");
  Eigen::VectorXd inv_sqrt(n);
  for (NodeId i = 0; i < n; ++i) {
    Require(degrees[i] >= static_cast<int>(adjacency.Neighbors(i).size()),
            ErrorCode::kInvalidInput, "degree below stored neighbor count");
    inv_sqrt[i] = 1.0 / std::sqrt(degrees[i] + 1.0);
  }
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(adjacency.col_idx.size() + n);
  for (NodeId i = 0; i < n; ++i) {
    triplets.emplace_back(i, i, inv_sqrt[i] * inv_sqrt[i]);
    for (NodeId j : adjacency.Neighbors(i)) {
      triplets.emplace_back(i, j, inv_sqrt[i] * inv_sqrt[j]);
    }
  }
  SparseMatrix c(n, n);
  c.setFromTriplets(triplets.begin(), triplets.end());
  return c;
}

SparseMatrix ToSparse(const FeatureMatrix& features) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (Eigen::Index r = 0; r < features.rows(); ++r) {
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
      if (features(r, c) != 0.0f) triplets.emplace_back(r, c, features(r, c));
    }
  }
  SparseMatrix x(features.rows(), features.cols());
  x.setFromTriplets(triplets.begin(), triplets.end());
  return x;
}

GraphInput MakeGraphInput(const Adjacency& adjacency,
                          std::span<const int> degrees,
                          const FeatureMatrix& features) {
  Require(features.rows() == adjacency.num_nodes(), ErrorCode::kInvalidInput,
          "feature rows do not match node count");
  GraphInput input;
  input.conv = BuildConvolution(adjacency, degrees);
  input.features = ToSparse(features);
  return input;
}

GraphInput MakeGraphInput(const GraphBundle& g) {
  return MakeGraphInput(g.adjacency(), g.degrees(), g.features());
}

Eigen::MatrixXd Forward(const GnnModel& model, const GraphInput& input,
                        const DropoutKey& dropout, ForwardCache* cache) {
  Require(!model.weights.empty() &&
              model.weights.front().rows() == input.features.cols(),
          ErrorCode::kInvalidInput, "model input dimension mismatch");
  Require(input.features.rows() == input.conv.rows(), ErrorCode::kInvalidInput,
          "feature rows do not match convolution size");
  if (cache != nullptr) *cache = ForwardCache{};

  if (model.arch == Arch::kSgc) {
    Eigen::MatrixXd logits = Propagated(input, model.layers) * model.weights[0];
    if (cache != nullptr) cache->logits = logits;
    return logits;
  }

  if (model.layers == 0) {
    Eigen::MatrixXd logits = input.features * model.weights[0];
    if (cache != nullptr) cache->logits = logits;
    return logits;
  }

  const int num = static_cast<int>(model.weights.size());
  Eigen::MatrixXd h;
  for (int l = 0; l < num; ++l) {
    Eigen::MatrixXd pre =
        l == 0 ? Eigen::MatrixXd(input.conv * (input.features * model.weights[0]))
               : Eigen::MatrixXd(input.conv * (h * model.weights[l]));
    if (l + 1 == num) {
      if (cache != nullptr) cache->logits = pre;
      return pre;
    }
    h = pre.cwiseMax(0.0);
    if (dropout.enabled && model.dropout > 0.0) {
      Eigen::MatrixXd mask = DropoutMask(h.rows(), h.cols(), model.dropout,
                                         DropoutStream(dropout, l));
      h = h.cwiseProduct(mask);
      if (cache != nullptr) cache->masks.push_back(std::move(mask));
    } else if (cache != nullptr) {
      cache->masks.push_back(Eigen::MatrixXd::Ones(h.rows(), h.cols()));
    }
    if (cache != nullptr) {
      cache->pre_relu.push_back(std::move(pre));
      cache->inputs.push_back(h);
    }
  }
  return {};  // unreachable: the loop returns on its last layer
}

Eigen::MatrixXd Softmax(const Eigen::MatrixXd& logits) {
  Eigen::MatrixXd out(logits.rows(), logits.cols());
  for (Eigen::Index r = 0; r < logits.rows(); ++r) {
    const double top = logits.row(r).maxCoeff();
    Eigen::RowVectorXd e = (logits.row(r).array() - top).exp();
    out.row(r) = e / e.sum();
  }
  return out;
}

double WeightedLoss(const Eigen::MatrixXd& logits, std::span<const int> labels,
                    std::span<const NodeId> ids,
                    std::span<const double> weights) {
  Require(!ids.empty(), ErrorCode::kInvalidInput, "loss over an empty id set");
  Require(weights.empty() || weights.size() == ids.size(),
          ErrorCode::kInvalidInput, "weights must align with ids");
  double total = 0.0;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const NodeId i = ids[k];
    const int y = labels[i];
    Require(y >= 0 && y < logits.cols(), ErrorCode::kInvalidInput,
            "label out of range");
    const double top = logits.row(i).maxCoeff();
    const double lse = top + std::log((logits.row(i).array() - top).exp().sum());
    const double w = weights.empty() ? 1.0 / ids.size() : weights[k];
    total += w * (lse - logits(i, y));
  }
  return total;
}

std::vector<Eigen::MatrixXd> Backward(const GnnModel& model,
                                      const GraphInput& input,
                                      const ForwardCache& cache,
                                      std::span<const int> labels,
                                      std::span<const NodeId> ids,
                                      std::span<const double> weights,
                                      double weight_decay) {
  const Eigen::MatrixXd& logits = cache.logits;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(logits.rows(), logits.cols());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const NodeId i = ids[k];
    const double w = weights.empty() ? 1.0 / ids.size() : weights[k];
    const double top = logits.row(i).maxCoeff();
    Eigen::RowVectorXd e = (logits.row(i).array() - top).exp();
    g.row(i) += w * e / e.sum();
    g(i, labels[i]) -= w;
  }

  std::vector<Eigen::MatrixXd> grads(model.weights.size());
  if (model.arch == Arch::kSgc) {
    grads[0] = Propagated(input, model.layers).transpose() * g;
  } else if (model.layers == 0) {
    grads[0] = input.features.transpose() * g;
  } else {
    for (int l = static_cast<int>(model.weights.size()) - 1; l >= 0; --l) {
      const Eigen::MatrixXd m = input.conv.transpose() * g;
      if (l == 0) {
        grads[0] = input.features.transpose() * m;
        break;
      }
      grads[l] = cache.inputs[l - 1].transpose() * m;
      g = (m * model.weights[l].transpose())
              .cwiseProduct(cache.masks[l - 1])
              .cwiseProduct(
                  (cache.pre_relu[l - 1].array() > 0.0).cast<double>().matrix());
    }
  }
  for (std::size_t l = 0; l < grads.size(); ++l) {
    grads[l] += weight_decay * model.weights[l];
  }
  return grads;
}

double Accuracy(const Eigen::MatrixXd& logits, std::span<const int> labels,
                std::span<const NodeId> ids) {
  Require(!ids.empty(), ErrorCode::kInvalidInput, "accuracy over an empty split");
  std::size_t correct = 0;
  for (NodeId i : ids) {
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < logits.cols(); ++c) {
      if (logits(i, c) > logits(i, best)) best = c;
    }
    if (best == labels[i]) ++correct;
  }
  return static_cast<double>(correct) / ids.size();
}

}  // namespace sggc
