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

#include "sggc/graph_io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sggc/error.h"

namespace sggc {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

static_assert(std::endian::native == std::endian::little,
              "binary formats assume a little-endian host");

std::ifstream OpenInput(const fs::path& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  Require(in.good(), ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

std::ofstream OpenOutput(const fs::path& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc
                                 : std::ios::out | std::ios::trunc);
  Require(out.good(), ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

json ReadJson(const fs::path& path) {
  std::ifstream in = OpenInput(path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kInvalidInput, path.string() + ": " + e.what());
  }
}

bool SkippableLine(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<NodeId> ReadIdArray(const json& j, const char* key) {
  std::vector<NodeId> ids;
  if (!j.contains(key)) return ids;
  for (const auto& v : j.at(key)) ids.push_back(v.get<NodeId>());
  return ids;
}

}  // namespace

std::vector<Edge> ReadEdgeList(const fs::path& path) {
  std::ifstream in = OpenInput(path);
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (SkippableLine(line)) continue;
    std::istringstream fields(line);
    long long u, v;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0) {
      Fail(ErrorCode::kInvalidInput, path.string() + ":" +
                                         std::to_string(line_no) +
                                         ": malformed edge line '" + line + "'");
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  return edges;
}

FeatureMatrix ReadFeatureBlob(const fs::path& path) {
  std::ifstream in = OpenInput(path, /*binary=*/true);
  char magic[4];
  std::uint64_t rows = 0, cols = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&rows), sizeof(rows));
  in.read(reinterpret_cast<char*>(&cols), sizeof(cols));
  Require(in.good() && std::memcmp(magic, "GFB1", 4) == 0,
          ErrorCode::kInvalidInput, path.string() + ": bad feature header");
  FeatureMatrix x(static_cast<Eigen::Index>(rows),
                  static_cast<Eigen::Index>(cols));
  in.read(reinterpret_cast<char*>(x.data()),
          static_cast<std::streamsize>(rows * cols * sizeof(float)));
  Require(in.gcount() == static_cast<std::streamsize>(rows * cols * sizeof(float)),
          ErrorCode::kInvalidInput, path.string() + ": truncated feature data");
  return x;
}

void WriteFeatureBlob(const FeatureMatrix& x, const fs::path& path) {
  std::ofstream out = OpenOutput(path, /*binary=*/true);
  const std::uint64_t rows = x.rows(), cols = x.cols();
  out.write("GFB1", 4);
  out.write(reinterpret_cast<const char*>(&rows), sizeof(rows));
  out.write(reinterpret_cast<const char*>(&cols), sizeof(cols));
  out.write(reinterpret_cast<const char*>(x.data()),
            static_cast<std::streamsize>(rows * cols * sizeof(float)));
  Require(out.good(), ErrorCode::kIo, "failed writing " + path.string());
}

GraphBundle ReadBundle(const fs::path& dir) {
  for (const char* file : {"manifest.json", "edges.tsv", "features.bin",
                           "labels.tsv", "splits.json"}) {
    Require(fs::exists(dir / file), ErrorCode::kIo,
            "bundle " + dir.string() + " is missing " + file);
  }
  const json manifest = ReadJson(dir / "manifest.json");
  const auto n = manifest.at("n").get<std::uint64_t>();
  const auto d = manifest.at("d").get<std::uint64_t>();
  const auto k = manifest.at("k").get<std::uint64_t>();
  const std::string name = manifest.value("name", dir.filename().string());

  FeatureMatrix features = ReadFeatureBlob(dir / "features.bin");
  Require(static_cast<std::uint64_t>(features.rows()) == n &&
              static_cast<std::uint64_t>(features.cols()) == d,
          ErrorCode::kInvalidInput,
          "features.bin is " + std::to_string(features.rows()) + "x" +
              std::to_string(features.cols()) + " but manifest declares " +
              std::to_string(n) + "x" + std::to_string(d));

  std::vector<int> labels(n, kUnlabeled);
  {
    std::ifstream in = OpenInput(dir / "labels.tsv");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (SkippableLine(line)) continue;
      std::istringstream fields(line);
      long long node, cls;
      if (!(fields >> node >> cls) || node < 0 ||
          static_cast<std::uint64_t>(node) >= n) {
        Fail(ErrorCode::kInvalidInput,
             "labels.tsv:" + std::to_string(line_no) + ": malformed line");
      }
      Require(cls >= 0 && static_cast<std::uint64_t>(cls) < k,
              ErrorCode::kInvalidInput,
              "labels.tsv:" + std::to_string(line_no) + ": label " +
                  std::to_string(cls) + " out of range");
      labels[node] = static_cast<int>(cls);
    }
  }

  const json split_json = ReadJson(dir / "splits.json");
  Splits splits{ReadIdArray(split_json, "train"), ReadIdArray(split_json, "val"),
                ReadIdArray(split_json, "test")};

  std::vector<Edge> edges = ReadEdgeList(dir / "edges.tsv");
  return GraphBundle::Create(name, static_cast<NodeId>(n), edges,
                             std::move(features), std::move(labels),
                             static_cast<int>(k), std::move(splits));
}

void WriteBundle(const GraphBundle& g, const fs::path& dir) {
  fs::create_directories(dir);
  {
    json manifest = {{"n", g.num_nodes()},
                     {"d", g.feature_dim()},
                     {"k", g.num_classes()},
                     {"name", g.name()}};
    OpenOutput(dir / "manifest.json") << manifest.dump(2) << "\n";
  }
  {
    std::ofstream out = OpenOutput(dir / "edges.tsv");
    for (const Edge& e : g.UndirectedEdges()) out << e.u << '\t' << e.v << '\n';
  }
  WriteFeatureBlob(g.features(), dir / "features.bin");
  {
    std::ofstream out = OpenOutput(dir / "labels.tsv");
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
      if (g.Label(i) != kUnlabeled) out << i << '\t' << g.Label(i) << '\n';
    }
  }
  {
    json splits = {{"train", g.splits().train},
                   {"val", g.splits().val},
                   {"test", g.splits().test}};
    OpenOutput(dir / "splits.json") << splits.dump() << "\n";
  }
}

}  // namespace sggc
