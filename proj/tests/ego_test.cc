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

#include <algorithm>

#include "doctest.h"
#include "oracles.h"
#include "sggc/ego.h"
#include "sggc/error.h"
#include "sggc/gnn.h"
#include "sggc/operators.h"

namespace sggc {
namespace {

TEST_CASE("standard ego equals the BFS ball") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const GraphBundle g = testing::RandomGraph(50, 0.06, 3, seed);
    for (NodeId c : {0, 13, 49}) {
      const std::vector<int> dist = testing::BfsOracle(g, c);
      for (int depth = 0; depth <= 3; ++depth) {
        const EgoGraph ego = ExtractStandardEgo(g, c, depth);
        std::vector<NodeId> expected;
        for (NodeId i = 0; i < g.num_nodes(); ++i) {
          if (i != c && dist[i] >= 0 && dist[i] <= depth) expected.push_back(i);
        }
        expected.insert(expected.begin(), c);
        CHECK(ego.nodes == expected);
        const std::vector<int> lib = BfsDistances(g, c, depth);
        for (NodeId i = 0; i < g.num_nodes(); ++i) {
          const int want = dist[i] >= 0 && dist[i] <= depth ? dist[i] : -1;
          CHECK(lib[i] == want);
        }
        for (std::size_t k = 0; k < ego.nodes.size(); ++k) {
          CHECK(ego.original_degrees[k] == g.Degree(ego.nodes[k]));
          CHECK(ego.local_features.row(k) == g.features().row(ego.nodes[k]));
        }
      }
    }
  }
}

TEST_CASE("induced adjacency keeps exactly the inner edges") {
  const GraphBundle g = testing::RandomGraph(30, 0.2, 2, 7);
  const Eigen::MatrixXd a = testing::DenseAdjacency(g);
  const std::vector<NodeId> nodes = {5, 2, 17, 9, 28};
  const Adjacency sub = InducedAdjacency(g, nodes);
  for (NodeId r = 0; r < 5; ++r) {
    for (NodeId s = 0; s < 5; ++s) {
      const auto nb = sub.Neighbors(r);
      const bool has = std::binary_search(nb.begin(), nb.end(), s);
      CHECK(has == (a(nodes[r], nodes[s]) != 0));
    }
  }
}

TEST_CASE("diffusion ego keeps the top-mass nodes of the diffusion row") {
  const GraphBundle g = testing::RandomGraph(40, 0.08, 2, 3);
  const DiffusionMatrix diff = BuildDiffusion(g);
  const Eigen::MatrixXd p = testing::DenseLazyWalk(g);
  const Eigen::MatrixXd p2 = p * p;
  for (NodeId c : {0, 21}) {
    const EgoGraph ego = ExtractDiffusionEgo(diff, g, c, 2, 6);
    REQUIRE(ego.nodes.front() == c);
    CHECK(ego.size() <= 6);
    // Every kept node has at least the mass of every dropped candidate.
    double kept_min = 2.0;
    for (std::size_t k = 1; k < ego.nodes.size(); ++k) {
      kept_min = std::min(kept_min, p2(c, ego.nodes[k]));
      if (k > 1) CHECK(p2(c, ego.nodes[k]) <= p2(c, ego.nodes[k - 1]) + 1e-12);
    }
    for (NodeId j = 0; j < g.num_nodes(); ++j) {
      if (std::find(ego.nodes.begin(), ego.nodes.end(), j) != ego.nodes.end()) {
        continue;
      }
      CHECK(p2(c, j) <= kept_min + 1e-12);
    }
  }
}

TEST_CASE("diffusion ego ties break by ascending id") {
  // Star: all leaves carry equal mass from the hub.
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= 6; ++i) edges.push_back({0, i});
  const GraphBundle g = GraphBundle::Create(
      "star", 7, edges, FeatureMatrix::Ones(7, 1), std::vector<int>(7, 0), 1,
      {{0}, {}, {}});
  const EgoGraph ego = ExtractDiffusionEgo(BuildDiffusion(g), g, 0, 1, 4);
  CHECK(ego.nodes == std::vector<NodeId>{0, 1, 2, 3});
  // Isolated center: only itself has mass.
  const GraphBundle lone = GraphBundle::Create(
      "lone", 3, std::vector<Edge>{{1, 2}}, FeatureMatrix::Ones(3, 1),
      {0, 0, 0}, 1, {{0}, {}, {}});
  CHECK(ExtractDiffusionEgo(BuildDiffusion(lone), lone, 0, 2, 4).size() == 1);
}

TEST_CASE("spectral ego vector is the padded first row of U") {
  const GraphBundle g = testing::RandomGraph(40, 0.1, 3, 8);
  const DiffusionMatrix diff = BuildDiffusion(g);
  const EgoGraph ego = ExtractDiffusionEgo(diff, g, 4, 2, 8);
  const SpectralEgo s = ComputeSpectralEgo(ego, 12);
  REQUIRE(s.v.size() == 12);
  CHECK(s.v.tail(12 - ego.size()).isZero());
  CHECK((s.v.head(ego.size()) - s.basis.vectors.row(0).transpose()).norm() == 0.0);
  // Original-degree Laplacian differs from the induced one at the boundary.
  const Eigen::MatrixXd full = testing::DenseAdjacency(g);
  Eigen::MatrixXd local(ego.size(), ego.size());
  for (NodeId r = 0; r < ego.size(); ++r) {
    for (NodeId q = 0; q < ego.size(); ++q) local(r, q) = full(ego.nodes[r], ego.nodes[q]);
  }
  const Eigen::MatrixXd original =
      testing::DenseLaplacian(local, ego.original_degrees);
  CHECK((EgoLaplacian(ego, DegreeSource::kOriginal).Dense() - original).norm() <
        1e-12);
  const EigenBasis induced =
      ComputeSpectralEgo(ego, 12, DegreeSource::kInduced).basis;
  CHECK(induced.eigenvalues.minCoeff() == doctest::Approx(0.0).epsilon(1e-9));
  const Eigen::MatrixXd z = EgoSpectralFeatures(s, ego, 12);
  CHECK(z.rows() == 12);
  CHECK(z.bottomRows(12 - ego.size()).isZero());
  CHECK_THROWS_AS(ComputeSpectralEgo(ego, ego.size() - 1), Error);
}

TEST_CASE("ego embedding of the center equals the full-graph embedding") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const GraphBundle g = testing::RandomGraph(60, 0.05, 5, seed);
    const GraphInput full = MakeGraphInput(g);
    for (Arch arch : {Arch::kGcn, Arch::kSgc}) {
      const GnnModel model = InitModel(arch, 5, 8, 3, 2, 0.5, seed);
      for (NodeId c = 0; c < 60; c += 7) {
        CHECK(ReceptiveFieldCheck(g, full, model, c, 2) < 1e-10);
      }
    }
    // Depth 3 network needs the depth 3 ego.
    const GnnModel deep = InitModel(Arch::kGcn, 5, 8, 3, 3, 0.0, seed);
    CHECK(ReceptiveFieldCheck(g, full, deep, 3, 3) < 1e-10);
  }
}

}  // namespace
}  // namespace sggc
