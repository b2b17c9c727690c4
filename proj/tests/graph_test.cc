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

#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "sggc/error.h"
#include "sggc/graph.h"
#include "sggc/graph_io.h"
#include "sggc/synthetic.h"

namespace sggc {
namespace {

namespace fs = std::filesystem;

GraphBundle Path4() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}};
  FeatureMatrix x(4, 2);
  x << 1, 0, 0, 1, 1, 1, 2, 0;
  return GraphBundle::Create("path", 4, edges, x, {0, 0, 1, 1}, 2,
                             {{0, 3}, {1}, {2}});
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sggc_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST_CASE("adjacency is symmetric, sorted and free of loops and duplicates") {
  const std::vector<Edge> edges = {{2, 0}, {0, 2}, {1, 1}, {0, 1}, {3, 1}};
  const Adjacency adj = BuildAdjacency(4, edges);
  CHECK(adj.num_nodes() == 4);
  CHECK(std::vector<NodeId>(adj.Neighbors(0).begin(), adj.Neighbors(0).end()) ==
        std::vector<NodeId>{1, 2});
  CHECK(std::vector<NodeId>(adj.Neighbors(1).begin(), adj.Neighbors(1).end()) ==
        std::vector<NodeId>{0, 3});
  CHECK(adj.col_idx.size() == 6);
  CHECK_THROWS_AS(BuildAdjacency(2, std::vector<Edge>{{0, 2}}), Error);
}

TEST_CASE("bundle construction validates its invariants") {
  FeatureMatrix x = FeatureMatrix::Zero(3, 1);
  const std::vector<Edge> edges = {{0, 1}};
  CHECK_NOTHROW(GraphBundle::Create("ok", 3, edges, x, {0, 1, 0}, 2, {{0}, {1}, {2}}));
  // Overlapping splits.
  CHECK_THROWS_AS(
      GraphBundle::Create("bad", 3, edges, x, {0, 1, 0}, 2, {{0}, {0}, {2}}), Error);
  // Label out of range.
  CHECK_THROWS_AS(
      GraphBundle::Create("bad", 3, edges, x, {0, 2, 0}, 2, {{0}, {1}, {2}}), Error);
  // Unlabeled training node.
  CHECK_THROWS_AS(GraphBundle::Create("bad", 3, edges, x, {kUnlabeled, 1, 0}, 2,
                                      {{0}, {1}, {2}}),
                  Error);
  // Feature rows do not match.
  CHECK_THROWS_AS(GraphBundle::Create("bad", 3, edges, FeatureMatrix::Zero(2, 1),
                                      {0, 1, 0}, 2, {{0}, {1}, {2}}),
                  Error);
}

TEST_CASE("degrees, edges and homophily of a path") {
  const GraphBundle g = Path4();
  CHECK(g.num_edges() == 3);
  CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});
  CHECK(Homophily(g) == doctest::Approx(2.0 / 3.0));
  const DatasetStats s = ComputeStats(g);
  CHECK(s.directed_edges == 6);
  CHECK(s.train_pct == doctest::Approx(50.0));
}

TEST_CASE("random edge addition is deterministic and adds distinct non-edges") {
  SbmSpec spec;
  spec.num_nodes = 60;
  spec.num_train = 20;
  spec.num_val = 10;
  const GraphBundle g = MakeSbm(spec);
  const GraphBundle a = AddRandomEdges(g, 40, 7);
  const GraphBundle b = AddRandomEdges(g, 40, 7);
  CHECK(a.num_edges() == g.num_edges() + 40);
  CHECK(a.UndirectedEdges() == b.UndirectedEdges());
  const auto before = g.UndirectedEdges();
  const std::set<std::pair<NodeId, NodeId>> old = [&] {
    std::set<std::pair<NodeId, NodeId>> s;
    for (const Edge& e : before) s.insert({e.u, e.v});
    return s;
  }();
  int fresh = 0;
  for (const Edge& e : a.UndirectedEdges()) {
    CHECK(e.u < e.v);
    fresh += old.count({e.u, e.v}) == 0;
  }
  CHECK(fresh == 40);
  CHECK(AddRandomEdges(g, 40, 8).UndirectedEdges() != a.UndirectedEdges());
  // Near-complete requests take the enumeration path.
  const GraphBundle tiny = testing::RandomGraph(8, 0.2, 2, 3);
  const std::int64_t absent = 8 * 7 / 2 - tiny.num_edges();
  CHECK(AddRandomEdges(tiny, absent, 1).num_edges() == 28);
  CHECK_THROWS_AS(AddRandomEdges(tiny, absent + 1, 1), Error);
}

TEST_CASE("sbm fixtures are reproducible and assortative") {
  SbmSpec spec;
  spec.num_nodes = 200;
  spec.p_in = 0.1;
  spec.p_out = 0.005;
  const GraphBundle a = MakeSbm(spec);
  const GraphBundle b = MakeSbm(spec);
  CHECK(a.UndirectedEdges() == b.UndirectedEdges());
  CHECK(a.features() == b.features());
  CHECK(a.splits().train == b.splits().train);
  CHECK(Homophily(a) > 0.7);
  CHECK(a.splits().train.size() == 40);
  CHECK(a.splits().test.size() == 120);
}

TEST_CASE("bundle directories round-trip") {
  const GraphBundle g = MakeSbm(SbmSpec{});
  const fs::path dir = TempDir("roundtrip");
  WriteBundle(g, dir);
  const GraphBundle r = ReadBundle(dir);
  CHECK(r.name() == g.name());
  CHECK(r.UndirectedEdges() == g.UndirectedEdges());
  CHECK(r.features() == g.features());
  CHECK(r.labels() == g.labels());
  CHECK(r.splits().train == g.splits().train);
  CHECK(r.splits().val == g.splits().val);
  CHECK(r.splits().test == g.splits().test);
  // Writing again gives identical bytes.
  const fs::path dir2 = TempDir("roundtrip2");
  WriteBundle(r, dir2);
  for (const char* f : {"manifest.json", "edges.tsv", "features.bin",
                        "labels.tsv", "splits.json"}) {
    std::ifstream x(dir / f, std::ios::binary), y(dir2 / f, std::ios::binary);
    const std::string bx((std::istreambuf_iterator<char>(x)), {});
    const std::string by((std::istreambuf_iterator<char>(y)), {});
    CHECK_MESSAGE(bx == by, f);
  }
}

TEST_CASE("malformed edge lists report the line number") {
  const fs::path dir = TempDir("edges");
  {
    std::ofstream out(dir / "edges.tsv");
    out << "# comment\n0\t1\n\n1 2\n2\tx\n";
  }
  try {
    ReadEdgeList(dir / "edges.tsv");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidInput);
    CHECK(std::string(e.what()).find(":5") != std::string::npos);
  }
  {
    std::ofstream out(dir / "ok.tsv");
    out << "0\t1\n1 2\n";
  }
  CHECK(ReadEdgeList(dir / "ok.tsv") == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(ReadBundle(dir / "missing"), Error);
}

TEST_CASE("feature blobs round-trip and reject bad headers") {
  const fs::path dir = TempDir("blob");
  FeatureMatrix x(2, 3);
  x << 1.5f, -2, 0, 3, 4, 5.25f;
  WriteFeatureBlob(x, dir / "f.bin");
  CHECK(ReadFeatureBlob(dir / "f.bin") == x);
  {
    std::ofstream out(dir / "bad.bin", std::ios::binary);
    out << "XXXX";
  }
  CHECK_THROWS_AS(ReadFeatureBlob(dir / "bad.bin"), Error);
}

}  // namespace
}  // namespace sggc
