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
#include "sggc/giga.h"
#include "sggc/operators.h"

namespace sggc {
namespace {

int Argmax(const std::vector<double>& v, const std::vector<char>& excluded) {
  int best = -1;
  for (int j = 0; j < static_cast<int>(v.size()); ++j) {
    if (excluded[j] || v[j] == kNoAlignment) continue;
    if (best < 0 || v[j] > v[best]) best = j;
  }
  return best;
}

TEST_CASE("geodesic ascent agrees with the dense oracle") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const GraphBundle g = testing::RandomGraph(45, 0.08, 2, seed);
    const DiffusionMatrix diff = BuildDiffusion(g);
    const auto& train = g.splits().train;
    GigaState state(diff, train);
    testing::DenseGiga dense(testing::DenseLazyWalk(g), train);
    std::vector<char> excluded(train.size(), 0);
    CHECK(state.Objective() == doctest::Approx(std::sqrt(1.0 / 45)));
    double previous = state.Objective();
    for (int step = 0; step < 10; ++step) {
      const std::vector<double> align = state.Alignments(excluded);
      const std::vector<double> oracle = dense.Alignments();
      for (std::size_t j = 0; j < align.size(); ++j) {
        if (excluded[j]) continue;
        CHECK(std::abs(align[j] - oracle[j]) < 1e-10);
      }
      const int j = Argmax(align, excluded);
      REQUIRE(j >= 0);
      CHECK(j == Argmax(oracle, excluded));
      const double eta = state.StepSize(j);
      CHECK(std::abs(eta - dense.StepSize(j)) < 1e-10);
      if (step == 0) CHECK(eta == 1.0);
      state.Update(j, eta);
      dense.Update(j, eta);
      excluded[j] = 1;
      // The iterate stays on the unit sphere.
      CHECK(std::abs(state.combination().norm() - 1.0) < 1e-12);
      CHECK((state.combination() - dense.combination()).cwiseAbs().maxCoeff() <
            1e-10);
      CHECK((state.weights() - dense.weights()).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(state.weights().minCoeff() >= 0.0);
      CHECK(state.Objective() <= previous + 1e-12);
      previous = state.Objective();
    }
  }
}

TEST_CASE("rescaled weights follow the closed form") {
  const GraphBundle g = testing::RandomGraph(30, 0.1, 2, 6);
  const DiffusionMatrix diff = BuildDiffusion(g);
  const auto& train = g.splits().train;
  GigaState state(diff, train);
  std::vector<char> excluded(train.size(), 0);
  for (int step = 0; step < 5; ++step) {
    const int j = Argmax(state.Alignments(excluded), excluded);
    state.Update(j, state.StepSize(j));
    excluded[j] = 1;
  }
  const Eigen::MatrixXd p = testing::DenseLazyWalk(g);
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(30);
  for (std::size_t k = 0; k < train.size(); ++k) sum += state.weights()[k] * p.col(train[k]);
  const Eigen::VectorXd rescaled = state.RescaledWeights();
  for (std::size_t k = 0; k < train.size(); ++k) {
    const double want =
        state.weights()[k] / (30 * p.col(train[k]).norm() * sum.norm());
    CHECK(rescaled[k] == doctest::Approx(want).epsilon(1e-12));
  }
}

}  // namespace
}  // namespace sggc
