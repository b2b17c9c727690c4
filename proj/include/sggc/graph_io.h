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

// On-disk bundle directory:
//
//   manifest.json  {"n": u64, "d": u64, "k": u64, "name": string}
//   edges.tsv      "u\tv" per line, 0-based, undirected
//   features.bin   "GFB1", u64 n, u64 d, n*d float32 row-major (all LE)
//   labels.tsv     "node\tclass" per line; absent nodes are unlabeled
//   splits.json    {"train": [...], "val": [...], "test": [...]}

#ifndef SGGC_GRAPH_IO_H_
#define SGGC_GRAPH_IO_H_

#include <filesystem>
#include <vector>

#include "sggc/graph.h"

namespace sggc {

GraphBundle ReadBundle(const std::filesystem::path& dir);
void WriteBundle(const GraphBundle& g, const std::filesystem::path& dir);

// Parses "u<TAB>v" lines (any whitespace accepted). Blank lines and lines
// starting with '#' are skipped. Malformed lines throw with the 1-based line
// number in the message.
std::vector<Edge> ReadEdgeList(const std::filesystem::path& path);

FeatureMatrix ReadFeatureBlob(const std::filesystem::path& path);
void WriteFeatureBlob(const FeatureMatrix& x, const std::filesystem::path& path);

}  // namespace sggc

#endif  // SGGC_GRAPH_IO_H_
