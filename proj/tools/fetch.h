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

#ifndef SGGC_TOOLS_FETCH_H_
#define SGGC_TOOLS_FETCH_H_

#include <filesystem>
#include <string>

namespace sggc::cli {

inline constexpr char kPlanetoidMirror[] =
    "https://github.com/kimiyoung/planetoid/raw/master/data/";

// Downloads the raw Planetoid files of `dataset` into `out_dir`, skipping
// files already present.
void FetchPlanetoid(const std::string& dataset, const std::string& base_url,
                    const std::filesystem::path& out_dir);

}  // namespace sggc::cli

#endif  // SGGC_TOOLS_FETCH_H_
