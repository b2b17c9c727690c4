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

// Converters from public citation-graph distributions to GraphBundle.

#ifndef SGGC_PLANETOID_H_
#define SGGC_PLANETOID_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sggc/graph.h"

namespace sggc {

enum class TestSplit {
  kRest,       // every labeled node outside train/val
  kPlanetoid,  // the test.index nodes only
};

// Reads ind.<name>.{x,y,tx,ty,allx,ally,graph,test.index} from `dir` using
// the standard Planetoid assembly: features = [allx; tx] with test rows
// reordered by test.index, train = first |y| nodes, val = next 500. Gaps in
// the test index range (Citeseer) become featureless, unlabeled nodes.
GraphBundle ConvertPlanetoid(const std::filesystem::path& dir,
                             const std::string& name,
                             TestSplit test_split = TestSplit::kRest);

// Reads the LINQS <name>.content / <name>.cites text files. Paper ids are
// mapped to dense ids in file order; citations to unknown papers are
// dropped. Splits: `train_per_class` random nodes per class, then `num_val`
// random nodes, rest test.
GraphBundle ConvertLinqs(const std::filesystem::path& content,
                         const std::filesystem::path& cites,
                         const std::string& name, int train_per_class = 20,
                         int num_val = 500, std::uint64_t seed = 0);

// Per class `train_per_class` random labeled nodes, then `num_val` random
// labeled nodes for validation, the remaining labeled nodes for test.
Splits RandomSplits(std::span<const int> labels, int num_classes,
                    int train_per_class, int num_val, std::uint64_t seed);

// File names fetched for a Planetoid dataset.
std::vector<std::string> PlanetoidFiles(const std::string& name);

}  // namespace sggc

#endif  // SGGC_PLANETOID_H_
