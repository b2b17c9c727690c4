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

#include "fetch.h"

#include <curl/curl.h>

#include <fstream>
#include <iostream>

#include "sggc/error.h"
#include "sggc/planetoid.h"

namespace sggc::cli {
namespace {

std::size_t AppendBody(char* data, std::size_t size, std::size_t count,
                       void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

std::string Download(const std::string& url) {
  CURL* curl = curl_easy_init();
  Require(curl != nullptr, ErrorCode::kIo, "curl initialization failed");
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, AppendBody);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  const CURLcode rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  Require(rc == CURLE_OK, ErrorCode::kIo,
          "download failed for " + url + ": " + curl_easy_strerror(rc));
  return body;
}

}  // namespace

void FetchPlanetoid(const std::string& dataset, const std::string& base_url,
                    const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  curl_global_init(CURL_GLOBAL_DEFAULT);
  for (const std::string& file : PlanetoidFiles(dataset)) {
    const std::filesystem::path target = out_dir / file;
    if (std::filesystem::exists(target)) {
      std::cout << "exists  " << target.string() << "\n";
      continue;
    }
    const std::string body = Download(base_url + file);
    std::ofstream out(target, std::ios::binary);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    Require(out.good(), ErrorCode::kIo, "cannot write " + target.string());
    std::cout << "fetched " << target.string() << " (" << body.size()
              << " bytes)\n";
  }
  curl_global_cleanup();
}

}  // namespace sggc::cli
