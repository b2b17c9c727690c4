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

// GCC1 container: "GCC1", u64 manifest length, manifest JSON, then the
// half-precision blobs (little endian) at the manifest's byte offsets.

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "json.hpp"
#include "sggc/compress.h"
#include "sggc/error.h"

namespace sggc {
namespace {

static_assert(std::endian::native == std::endian::little,
              "GCC1 blobs are written in host byte order");

using Json = nlohmann::json;

class BlobWriter {
 public:
  Json Add(const std::vector<std::uint16_t>& values) {
    Json ref = {{"offset", bytes_.size()}, {"count", values.size()}};
    const auto* raw = reinterpret_cast<const char*>(values.data());
    bytes_.insert(bytes_.end(), raw, raw + values.size() * 2);
    return ref;
  }
  const std::string& bytes() const { return bytes_; }

 private:
  std::string bytes_;
};

std::vector<std::uint16_t> ReadBlob(const std::string& blobs, const Json& ref,
                                    std::size_t expected) {
  const auto offset = ref.at("offset").get<std::size_t>();
  const auto count = ref.at("count").get<std::size_t>();
  Require(count == expected, ErrorCode::kInvalidInput,
          "GCC1 blob has an unexpected element count");
  Require(offset <= blobs.size() && count * 2 <= blobs.size() - offset,
          ErrorCode::kInvalidInput, "GCC1 blob extends past end of file");
  std::vector<std::uint16_t> out(count);
  std::memcpy(out.data(), blobs.data() + offset, count * 2);
  return out;
}

}  // namespace

void WriteCompressed(const std::filesystem::path& path,
                     const CompressedCoreset& cc) {
  BlobWriter blobs;
  Json manifest;
  manifest["depth"] = cc.depth;
  manifest["feature_dim"] = cc.feature_dim;
  manifest["num_classes"] = cc.num_classes;
  manifest["centered"] = cc.centered;
  manifest["nodes"] = cc.nodes;
  manifest["degrees"] = cc.original_degrees;
  Json edges = Json::array();
  for (NodeId u = 0; u < cc.adjacency.num_nodes(); ++u) {
    for (NodeId v : cc.adjacency.Neighbors(u)) {
      if (u < v) edges.push_back({u, v});
    }
  }
  manifest["edges"] = std::move(edges);
  manifest["centers"] = cc.centers;
  manifest["weights"] = cc.weights;
  manifest["center_labels"] = cc.center_labels;
  manifest["center_features"] = blobs.Add(cc.center_features);
  Json strata = Json::array();
  for (const auto& s : cc.strata) {
    strata.push_back({{"level", s.level},
                      {"nodes", s.nodes},
                      {"rank", s.rank},
                      {"error_pre", s.error_pre},
                      {"error_post", s.error_post},
                      {"mean", blobs.Add(s.mean)},
                      {"u", blobs.Add(s.u)},
                      {"sigma", blobs.Add(s.sigma)},
                      {"basis", blobs.Add(s.basis)}});
  }
  manifest["strata"] = std::move(strata);
  manifest["stored_values"] = {{"centers", cc.CenterValues()},
                               {"strata", cc.StratumValues()},
                               {"budget", cc.Budget()}};

  const std::string text = manifest.dump();
  std::ofstream out(path, std::ios::binary);
  Require(out.good(), ErrorCode::kIo, "cannot write " + path.string());
  const std::uint64_t length = text.size();
  out.write("GCC1", 4);
  out.write(reinterpret_cast<const char*>(&length), sizeof(length));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.write(blobs.bytes().data(),
            static_cast<std::streamsize>(blobs.bytes().size()));
  Require(out.good(), ErrorCode::kIo, "write failed for " + path.string());
}

CompressedCoreset ReadCompressed(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), ErrorCode::kIo, "cannot open " + path.string());
  const std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  Require(data.size() >= 12 && data.compare(0, 4, "GCC1") == 0,
          ErrorCode::kInvalidInput, path.string() + ": not a GCC1 file");
  std::uint64_t length = 0;
  std::memcpy(&length, data.data() + 4, sizeof(length));
  Require(length <= data.size() - 12, ErrorCode::kInvalidInput,
          path.string() + ": truncated manifest");
  const std::string blobs = data.substr(12 + length);

  CompressedCoreset cc;
  try {
    const Json m = Json::parse(data.substr(12, length));
    cc.depth = m.at("depth").get<int>();
    cc.feature_dim = m.at("feature_dim").get<int>();
    cc.num_classes = m.at("num_classes").get<int>();
    cc.centered = m.at("centered").get<bool>();
    cc.nodes = m.at("nodes").get<std::vector<NodeId>>();
    cc.original_degrees = m.at("degrees").get<std::vector<int>>();
    Require(cc.original_degrees.size() == cc.nodes.size(),
            ErrorCode::kInvalidInput, "degree list does not match nodes");
    std::vector<Edge> edges;
    for (const auto& e : m.at("edges")) {
      const Edge edge{e.at(0).get<NodeId>(), e.at(1).get<NodeId>()};
      Require(edge.u >= 0 && edge.v >= 0 &&
                  edge.u < static_cast<NodeId>(cc.nodes.size()) &&
                  edge.v < static_cast<NodeId>(cc.nodes.size()),
              ErrorCode::kInvalidInput, "GCC1 edge out of range");
      edges.push_back(edge);
    }
    cc.adjacency = BuildAdjacency(static_cast<NodeId>(cc.nodes.size()), edges);
    cc.centers = m.at("centers").get<std::vector<NodeId>>();
    cc.weights = m.at("weights").get<std::vector<double>>();
    cc.center_labels = m.at("center_labels").get<std::vector<int>>();
    Require(cc.weights.size() == cc.centers.size() &&
                cc.center_labels.size() == cc.centers.size(),
            ErrorCode::kInvalidInput, "center arrays misaligned");
    const std::size_t d = static_cast<std::size_t>(cc.feature_dim);
    cc.center_features =
        ReadBlob(blobs, m.at("center_features"), cc.centers.size() * d);
    for (const auto& s : m.at("strata")) {
      CompressedStratum stratum;
      stratum.level = s.at("level").get<int>();
      stratum.nodes = s.at("nodes").get<std::vector<NodeId>>();
      stratum.rank = s.at("rank").get<int>();
      stratum.error_pre = s.at("error_pre").get<double>();
      stratum.error_post = s.at("error_post").get<double>();
      const std::size_t rows = stratum.nodes.size();
      const auto q = static_cast<std::size_t>(stratum.rank);
      const std::size_t mean_count = s.at("mean").at("count").get<std::size_t>();
      Require(mean_count == 0 || mean_count == d, ErrorCode::kInvalidInput,
              "stratum mean has the wrong length");
      stratum.mean = ReadBlob(blobs, s.at("mean"), mean_count);
      stratum.u = ReadBlob(blobs, s.at("u"), rows * q);
      stratum.sigma = ReadBlob(blobs, s.at("sigma"), q);
      stratum.basis = ReadBlob(blobs, s.at("basis"), q * d);
      cc.strata.push_back(std::move(stratum));
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidInput,
         path.string() + ": malformed GCC1 manifest: " + e.what());
  }
  return cc;
}

}  // namespace sggc
