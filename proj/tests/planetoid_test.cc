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

// Fixtures are produced by tests/data/make_fixtures.py.

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "sggc/error.h"
#include "sggc/pickle.h"
#include "sggc/planetoid.h"

namespace sggc {
namespace {

namespace fs = std::filesystem;

const fs::path kData = SGGC_TEST_DATA_DIR;

std::string PicklePath(const std::string& name) {
  return (kData / "pickle" / name).string();
}

TEST_CASE("pickle decodes plain containers across protocols") {
  for (const char* file : {"plain_p0.pkl", "plain_p2.pkl", "plain_p4.pkl"}) {
    CAPTURE(file);
    const pickle::ValuePtr v = pickle::LoadFile(PicklePath(file));
    REQUIRE(v->is(pickle::Value::Kind::kDict));
    REQUIRE(v->entries.size() == 3);
    for (const auto& [key, value] : v->entries) {
      REQUIRE(key->is(pickle::Value::Kind::kText));
      if (key->text == "a") {
        REQUIRE(value->items.size() == 3);
        CHECK(value->items[1]->int_value == -2);
      } else if (key->text == "b") {
        REQUIRE(value->is(pickle::Value::Kind::kTuple));
        CHECK(value->items[0]->float_value == 1.5);
        CHECK(value->items[1]->is(pickle::Value::Kind::kNone));
        CHECK(value->items[2]->is(pickle::Value::Kind::kBool));
        CHECK(value->items[2]->int_value == 1);
      } else {
        CHECK(key->text == "c");
        CHECK(value->text == "text");
      }
    }
  }
}

TEST_CASE("pickle decodes numpy arrays and scipy CSR matrices") {
  for (const char* p : {"p0", "p2", "p4"}) {
    CAPTURE(p);
    const std::string suffix = std::string("_") + p + ".pkl";
    const Eigen::MatrixXd dense =
        pickle::ToDenseMatrix(*pickle::LoadFile(PicklePath("dense" + suffix)));
    REQUIRE(dense.rows() == 2);
    REQUIRE(dense.cols() == 3);
    CHECK(dense(1, 2) == 5.0);
    CHECK(dense(0, 1) == 1.0);
    CHECK(pickle::ToIntVector(*pickle::LoadFile(PicklePath("ints" + suffix))) ==
          std::vector<std::int64_t>{3, -1, 7});
    const Eigen::MatrixXd csr =
        pickle::ToDenseMatrix(*pickle::LoadFile(PicklePath("csr" + suffix)));
    Eigen::MatrixXd expected(2, 3);
    expected << 0, 2, 0, 1, 0, 3;
    CHECK(csr == expected);
  }
  CHECK(pickle::ToIntVector(*pickle::LoadFile(PicklePath("big_p2.pkl"))) ==
        std::vector<std::int64_t>{1LL << 40, -5});
}

TEST_CASE("pickle decodes defaultdict adjacency lists") {
  const auto lists =
      pickle::ToAdjacencyLists(*pickle::LoadFile(PicklePath("graph_p2.pkl")));
  REQUIRE(lists.size() == 2);
  CHECK(lists[0].first == 0);
  CHECK(lists[0].second == std::vector<std::int64_t>{1, 2});
  CHECK(lists[1].second == std::vector<std::int64_t>{0});
}

TEST_CASE("pickle rejects truncated and garbage input") {
  CHECK_THROWS_AS(pickle::Load(std::string_view("\x80\x02]q\x00(K\x01", 8)), Error);
  CHECK_THROWS_AS(pickle::Load("not a pickle"), Error);
  CHECK_THROWS_AS(pickle::LoadFile(PicklePath("missing.pkl")), Error);
}

TEST_CASE("planetoid assembly reorders test rows and pads index gaps") {
  const GraphBundle g = ConvertPlanetoid(kData / "planetoid", "tiny");
  CHECK(g.num_nodes() == 520);
  CHECK(g.feature_dim() == 5);
  CHECK(g.num_classes() == 3);
  CHECK(g.splits().train == std::vector<NodeId>{0, 1, 2});
  CHECK(g.splits().val.size() == 500);
  CHECK(g.splits().val.front() == 3);
  // Labeled nodes from 503 on, except the missing test index 514.
  CHECK(g.splits().test.size() == 16);
  CHECK(g.Label(514) == kUnlabeled);
  CHECK(g.features().row(514).isZero());

  const std::vector<NodeId> test_index = {515, 510, 519, 511, 517,
                                          513, 512, 518, 516};
  for (int k = 0; k < static_cast<int>(test_index.size()); ++k) {
    CAPTURE(k);
    const NodeId node = test_index[k];
    CHECK(g.features()(node, k % 5) == 1000.0f + k);
    CHECK(g.features().row(node).sum() == 1000.0f + k);
    CHECK(g.Label(node) == (k + 1) % 3);
  }
  for (NodeId i : {0, 7, 509}) {
    CHECK(g.features()(i, i % 5) == 1.0f + i);
    CHECK(g.Label(i) == i % 3);
  }
  // Ring minus the edge 514 - 515.
  CHECK(g.num_edges() == 519);
  CHECK(g.Degree(514) == 1);

  const GraphBundle planetoid_split =
      ConvertPlanetoid(kData / "planetoid", "tiny", TestSplit::kPlanetoid);
  CHECK(planetoid_split.splits().test ==
        std::vector<NodeId>{510, 511, 512, 513, 515, 516, 517, 518, 519});
}

TEST_CASE("LINQS text files convert with per-class training splits") {
  const fs::path dir = fs::temp_directory_path() / "sggc_test_linqs";
  fs::create_directories(dir);
  {
    std::ofstream content(dir / "mini.content");
    for (int i = 0; i < 12; ++i) {
      content << "p" << i << "\t" << (i % 2) << "\t" << (i % 3 == 0) << "\t"
              << (i < 6 ? "Theory" : "AI") << "\n";
    }
    std::ofstream cites(dir / "mini.cites");
    cites << "p0\tp1\np1\tp2\np3\tmissing\np4\tp11\n";
  }
  const GraphBundle g =
      ConvertLinqs(dir / "mini.content", dir / "mini.cites", "mini", 2, 3, 0);
  CHECK(g.num_nodes() == 12);
  CHECK(g.num_classes() == 2);
  CHECK(g.num_edges() == 3);
  // Classes are numbered by sorted name.
  CHECK(g.Label(0) == 1);
  CHECK(g.Label(11) == 0);
  CHECK(g.splits().train.size() == 4);
  CHECK(g.splits().val.size() == 3);
  CHECK(g.splits().test.size() == 5);
  CHECK(g.features()(3, 1) == 1.0f);
}

TEST_CASE("random splits respect the per-class quota") {
  const std::vector<int> labels = {0, 1, 0, 1, 0, kUnlabeled, 1, 0, 1, 0};
  const Splits s = RandomSplits(labels, 2, 2, 2, 42);
  CHECK(s.train.size() == 4);
  CHECK(s.val.size() == 2);
  CHECK(s.test.size() == 3);
  int zeros = 0;
  for (NodeId i : s.train) zeros += labels[i] == 0;
  CHECK(zeros == 2);
  const Splits again = RandomSplits(labels, 2, 2, 2, 42);
  CHECK(again.train == s.train);
}

}  // namespace
}  // namespace sggc
