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

// Stochastic block model fixtures for offline experiments and tests.

#ifndef SGGC_SYNTHETIC_H_
#define SGGC_SYNTHETIC_H_

#include <cstdint>

#include "sggc/graph.h"

namespace sggc {

struct SbmSpec {
  NodeId num_nodes = 200;
  int num_classes = 4;
  double p_in = 0.05;    // edge probability within a block
  double p_out = 0.005;  // edge probability across blocks
  int feature_dim = 16;
  // Features are mean[y] + noise * N(0, I), with class means drawn from
  // mean_scale * N(0, I). mean_scale = 0 gives pure i.i.d. Gaussian features.
  double mean_scale = 1.0;
  double noise = 1.0;
  NodeId num_train = 40;
  NodeId num_val = 40;  // remaining nodes form the test split
  std::uint64_t seed = 0;
};

// Nodes are assigned to blocks round-robin, so block sizes differ by at most
// one. Training nodes are a uniform random subset.
GraphBundle MakeSbm(const SbmSpec& spec);

}  // namespace sggc

#endif  // SGGC_SYNTHETIC_H_
