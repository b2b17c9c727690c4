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

#include <cmath>

#include "doctest.h"
#include "oracles.h"
#include "sggc/error.h"
#include "sggc/gnn.h"
#include "sggc/train.h"

namespace sggc {
namespace {

double MaxRelativeError(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff() /
         std::max(1e-8, std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()));
}

struct Instance {
  GraphBundle g;
  GraphInput input;
  std::vector<NodeId> ids;
  std::vector<double> weights;
};

Instance MakeInstance(std::uint64_t seed) {
  Instance inst{testing::RandomGraph(12, 0.3, 4, seed), {}, {}, {}};
  inst.input = MakeGraphInput(inst.g);
  inst.ids = {0, 2, 3, 7, 11};
  Rng rng(seed);
  double total = 0;
  for (std::size_t k = 0; k < inst.ids.size(); ++k) {
    inst.weights.push_back(0.1 + UniformUnit(rng));
    total += inst.weights.back();
  }
  for (double& w : inst.weights) w /= total;
  return inst;
}

TEST_CASE("convolution is the renormalized adjacency with self-loops") {
  const GraphBundle g = testing::RandomGraph(15, 0.3, 2, 1);
  const Eigen::MatrixXd c(MakeGraphInput(g).conv);
  const Eigen::MatrixXd a = testing::DenseAdjacency(g) + Eigen::MatrixXd::Identity(15, 15);
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) {
      const double want =
          a(i, j) / std::sqrt((g.Degree(i) + 1.0) * (g.Degree(j) + 1.0));
      CHECK(c(i, j) == doctest::Approx(want).epsilon(1e-14));
    }
  }
  const std::vector<int> small(15, 0);
  CHECK_THROWS_AS(BuildConvolution(g.adjacency(), small), Error);
}

TEST_CASE("softmax is stable and loss weights default to uniform") {
  Eigen::MatrixXd logits(2, 3);
  logits << 1000, 1001, 999, -5, 0, 5;
  const Eigen::MatrixXd s = Softmax(logits);
  CHECK(s.allFinite());
  CHECK((s.rowwise().sum().array() - 1).abs().maxCoeff() < 1e-12);
  const std::vector<int> labels = {1, 2};
  const std::vector<NodeId> ids = {0, 1};
  const std::vector<double> half = {0.5, 0.5};
  CHECK(WeightedLoss(logits, labels, ids, {}) ==
        doctest::Approx(WeightedLoss(logits, labels, ids, half)));
  CHECK(Accuracy(logits, labels, ids) == 1.0);
  // Ties go to the lowest class.
  Eigen::MatrixXd tie = Eigen::MatrixXd::Zero(1, 3);
  const std::vector<int> zero = {0};
  const std::vector<NodeId> first = {0};
  CHECK(Accuracy(tie, zero, first) == 1.0);
}

TEST_CASE("analytic gradients match central differences") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Instance inst = MakeInstance(seed);
    const std::vector<int>& labels = inst.g.labels();
    struct Case {
      Arch arch;
      int layers;
      double dropout;
    };
    for (const Case& c : {Case{Arch::kGcn, 2, 0.0}, Case{Arch::kGcn, 2, 0.5},
                          Case{Arch::kGcn, 3, 0.3}, Case{Arch::kGcn, 1, 0.0},
                          Case{Arch::kSgc, 2, 0.0}}) {
      CAPTURE(seed);
      CAPTURE(c.layers);
      CAPTURE(c.dropout);
      GnnModel model = InitModel(c.arch, 4, 6, inst.g.num_classes(), c.layers,
                                 c.dropout, seed + 10);
      const DropoutKey key{c.dropout > 0, 99, 3};
      const double wd = 5e-3;
      ForwardCache cache;
      Forward(model, inst.input, key, &cache);
      const auto grads = Backward(model, inst.input, cache, labels, inst.ids,
                                  inst.weights, wd);
      REQUIRE(grads.size() == model.weights.size());
      for (std::size_t k = 0; k < model.weights.size(); ++k) {
        auto objective = [&] {
          double reg = 0;
          for (const auto& w : model.weights) reg += 0.5 * wd * w.squaredNorm();
          return WeightedLoss(Forward(model, inst.input, key), labels, inst.ids,
                              inst.weights) +
                 reg;
        };
        const Eigen::MatrixXd numeric =
            testing::NumericGradient(model.weights[k], objective);
        CHECK(MaxRelativeError(grads[k], numeric) < 1e-4);
      }
    }
  }
}

TEST_CASE("dropout masks depend only on their key") {
  const Instance inst = MakeInstance(4);
  const GnnModel model = InitModel(Arch::kGcn, 4, 16, 3, 2, 0.5, 1);
  const Eigen::MatrixXd a = Forward(model, inst.input, {true, 5, 1});
  const Eigen::MatrixXd b = Forward(model, inst.input, {true, 5, 1});
  const Eigen::MatrixXd c = Forward(model, inst.input, {true, 5, 2});
  const Eigen::MatrixXd off = Forward(model, inst.input);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a != off);
  ForwardCache cache;
  Forward(model, inst.input, {true, 5, 1}, &cache);
  REQUIRE(cache.masks.size() == 1);
  const Eigen::ArrayXXd m = cache.masks[0].array();
  CHECK(((m == 0) || (m == 2)).all());
}

TEST_CASE("sgc caches the propagated features") {
  const Instance inst = MakeInstance(2);
  const GnnModel model = InitModel(Arch::kSgc, 4, 8, 3, 2, 0.0, 0);
  const Eigen::MatrixXd once = Forward(model, inst.input);
  REQUIRE(inst.input.propagated.has_value());
  CHECK(inst.input.propagated_depth == 2);
  const Eigen::MatrixXd features(inst.input.features);
  const Eigen::MatrixXd conv(inst.input.conv);
  CHECK((once - conv * conv * features * model.weights[0]).norm() < 1e-12);
  CHECK(Forward(model, inst.input) == once);
}

TEST_CASE("initialization is seeded and Glorot-bounded") {
  const GnnModel a = InitModel(Arch::kGcn, 10, 20, 4, 2, 0.5, 3);
  const GnnModel b = InitModel(Arch::kGcn, 10, 20, 4, 2, 0.5, 3);
  const GnnModel c = InitModel(Arch::kGcn, 10, 20, 4, 2, 0.5, 4);
  CHECK(a.weights[0] == b.weights[0]);
  CHECK(a.weights[0] != c.weights[0]);
  CHECK(a.weights[0].rows() == 10);
  CHECK(a.weights[1].cols() == 4);
  CHECK(a.weights[0].cwiseAbs().maxCoeff() <= std::sqrt(6.0 / 30.0));
  CHECK(InitModel(Arch::kSgc, 10, 20, 4, 2, 0.0, 0).weights.size() == 1);
}

}  // namespace
}  // namespace sggc
