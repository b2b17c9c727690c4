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

#include "sggc/planetoid.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "sggc/error.h"
#include "sggc/graph_io.h"
#include "sggc/pickle.h"
#include "sggc/random.h"

namespace sggc {
namespace {

namespace fs = std::filesystem;

// Row index of the single positive entry, or kUnlabeled for an all-zero row.
int OneHotLabel(const Eigen::MatrixXd& rows, Eigen::Index r) {
  Eigen::Index best = -1;
  double best_value = 0.0;
  for (Eigen::Index c = 0; c < rows.cols(); ++c) {
    if (rows(r, c) > best_value) {
      best_value = rows(r, c);
      best = c;
    }
  }
  return best < 0 ? kUnlabeled : static_cast<int>(best);
}

}  // namespace

std::vector<std::string> PlanetoidFiles(const std::string& name) {
  std::vector<std::string> files;
  for (const char* part : {"x", "y", "tx", "ty", "allx", "ally", "graph",
                           "test.index"}) {
    files.push_back("ind." + name + "." + part);
  }
  return files;
}

GraphBundle ConvertPlanetoid(const fs::path& dir, const std::string& name,
                             TestSplit test_split) {
  auto load = [&](const char* part) {
    return pickle::LoadFile((dir / ("ind." + name + "." + part)).string());
  };
  const Eigen::MatrixXd y = pickle::ToDenseMatrix(*load("y"));
  Eigen::MatrixXd tx = pickle::ToDenseMatrix(*load("tx"));
  Eigen::MatrixXd ty = pickle::ToDenseMatrix(*load("ty"));
  const Eigen::MatrixXd allx = pickle::ToDenseMatrix(*load("allx"));
  const Eigen::MatrixXd ally = pickle::ToDenseMatrix(*load("ally"));
  const auto graph = pickle::ToAdjacencyLists(*load("graph"));

  std::vector<std::int64_t> test_index;
  {
    const fs::path path = dir / ("ind." + name + ".test.index");
    std::ifstream in(path);
    Require(in.good(), ErrorCode::kIo, "cannot open " + path.string());
    std::int64_t id;
    while (in >> id) test_index.push_back(id);
  }
  Require(!test_index.empty() && static_cast<Eigen::Index>(test_index.size()) ==
                                     tx.rows(),
          ErrorCode::kInvalidInput, "test.index does not match tx rows");
  Require(allx.rows() == ally.rows() && tx.cols() == allx.cols() &&
              ty.cols() == ally.cols(),
          ErrorCode::kInvalidInput, "inconsistent Planetoid array shapes");

  std::vector<std::int64_t> test_sorted = test_index;
  std::sort(test_sorted.begin(), test_sorted.end());
  const std::int64_t lo = test_sorted.front(), hi = test_sorted.back();
  Require(lo == allx.rows(), ErrorCode::kInvalidInput,
          "test indices must start right after allx");
  const Eigen::Index span = hi - lo + 1;
  if (span != tx.rows()) {
    // Isolated test nodes are missing from tx/ty; pad them with zero rows.
    Eigen::MatrixXd tx_full = Eigen::MatrixXd::Zero(span, tx.cols());
    Eigen::MatrixXd ty_full = Eigen::MatrixXd::Zero(span, ty.cols());
    for (Eigen::Index k = 0; k < tx.rows(); ++k) {
      tx_full.row(test_sorted[k] - lo) = tx.row(k);
      ty_full.row(test_sorted[k] - lo) = ty.row(k);
    }
    tx = std::move(tx_full);
    ty = std::move(ty_full);
  }

  const auto n = static_cast<NodeId>(allx.rows() + tx.rows());
  Eigen::MatrixXd stacked_x(n, allx.cols());
  stacked_x << allx, tx;
  Eigen::MatrixXd stacked_y(n, ally.cols());
  stacked_y << ally, ty;

  // features[test_index[k]] = stacked[test_sorted[k]] for all k at once.
  Eigen::MatrixXd x = stacked_x;
  Eigen::MatrixXd labels_onehot = stacked_y;
  for (std::size_t k = 0; k < test_index.size(); ++k) {
    x.row(test_index[k]) = stacked_x.row(test_sorted[k]);
    labels_onehot.row(test_index[k]) = stacked_y.row(test_sorted[k]);
  }

  std::vector<int> labels(n);
  for (NodeId i = 0; i < n; ++i) labels[i] = OneHotLabel(labels_onehot, i);

  std::vector<Edge> edges;
  for (const auto& [u, nbrs] : graph) {
    for (std::int64_t v : nbrs) {
      Require(u >= 0 && u < n && v >= 0 && v < n, ErrorCode::kInvalidInput,
              "graph references node outside the feature matrix");
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
  }

  Splits splits;
  const auto num_train = static_cast<NodeId>(y.rows());
  Require(num_train + 500 <= n, ErrorCode::kInvalidInput,
          "dataset too small for the Planetoid split");
  for (NodeId i = 0; i < num_train; ++i) splits.train.push_back(i);
  for (NodeId i = num_train; i < num_train + 500; ++i) splits.val.push_back(i);
  if (test_split == TestSplit::kPlanetoid) {
    for (std::int64_t id : test_sorted) {
      if (labels[id] != kUnlabeled) splits.test.push_back(static_cast<NodeId>(id));
    }
  } else {
    for (NodeId i = num_train + 500; i < n; ++i) {
      if (labels[i] != kUnlabeled) splits.test.push_back(i);
    }
  }

  FeatureMatrix features = x.cast<float>();
  const auto k = static_cast<int>(ally.cols());
  return GraphBundle::Create(name, n, edges, std::move(features),
                             std::move(labels), k, std::move(splits));
}

Splits RandomSplits(std::span<const int> labels, int num_classes,
                    int train_per_class, int num_val, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeId> order;
  for (NodeId i = 0; i < static_cast<NodeId>(labels.size()); ++i) {
    if (labels[i] != kUnlabeled) order.push_back(i);
  }
  Shuffle(order, rng);
  Splits splits;
  std::vector<int> per_class(num_classes, 0);
  std::vector<NodeId> rest;
  for (NodeId i : order) {
    if (per_class[labels[i]] < train_per_class) {
      ++per_class[labels[i]];
      splits.train.push_back(i);
    } else {
      rest.push_back(i);
    }
  }
  const std::size_t val_count =
      std::min(rest.size(), static_cast<std::size_t>(std::max(num_val, 0)));
  splits.val.assign(rest.begin(), rest.begin() + val_count);
  splits.test.assign(rest.begin() + val_count, rest.end());
  return splits;
}

GraphBundle ConvertLinqs(const fs::path& content, const fs::path& cites,
                         const std::string& name, int train_per_class,
                         int num_val, std::uint64_t seed) {
  std::ifstream in(content);
  Require(in.good(), ErrorCode::kIo, "cannot open " + content.string());
  std::unordered_map<std::string, NodeId> ids;
  std::map<std::string, int> class_ids;
  std::vector<std::vector<float>> rows;
  std::vector<std::string> class_names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    Require(tokens.size() >= 3, ErrorCode::kInvalidInput,
            content.string() + ":" + std::to_string(line_no) +
                ": expected id, features and label");
    Require(rows.empty() || tokens.size() - 2 == rows.front().size(),
            ErrorCode::kInvalidInput,
            content.string() + ":" + std::to_string(line_no) +
                ": inconsistent feature count");
    std::vector<float> row;
    for (std::size_t t = 1; t + 1 < tokens.size(); ++t) {
      row.push_back(std::stof(tokens[t]));
    }
    ids.emplace(tokens.front(), static_cast<NodeId>(rows.size()));
    rows.push_back(std::move(row));
    class_names.push_back(tokens.back());
    class_ids.emplace(tokens.back(), 0);
  }
  Require(!rows.empty(), ErrorCode::kInvalidInput, "empty content file");
  int next_class = 0;
  for (auto& [label, id] : class_ids) id = next_class++;

  const auto n = static_cast<NodeId>(rows.size());
  FeatureMatrix features(n, static_cast<Eigen::Index>(rows.front().size()));
  std::vector<int> labels(n);
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      features(i, static_cast<Eigen::Index>(c)) = rows[i][c];
    }
    labels[i] = class_ids.at(class_names[i]);
  }

  std::vector<Edge> edges;
  {
    std::ifstream cin(cites);
    Require(cin.good(), ErrorCode::kIo, "cannot open " + cites.string());
    std::string a, b;
    while (cin >> a >> b) {
      auto ia = ids.find(a), ib = ids.find(b);
      if (ia != ids.end() && ib != ids.end()) {
        edges.push_back({ia->second, ib->second});
      }
    }
  }

  Splits splits = RandomSplits(labels, next_class, train_per_class, num_val,
                               SubSeed(seed, "linqs-split"));
  return GraphBundle::Create(name, n, edges, std::move(features),
                             std::move(labels), next_class, std::move(splits));
}

}  // namespace sggc
