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

// A data-only Python pickle decoder (protocols 0-5), sufficient for the
// numpy arrays, scipy CSR matrices and dict-of-lists graphs found in
// Planetoid dataset files. Nothing is executed: recognized callables
// (numpy array reconstruction, dtype, copyreg, defaultdict, _codecs.encode)
// are interpreted, everything else becomes an opaque Object value.

#ifndef SGGC_PICKLE_H_
#define SGGC_PICKLE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace sggc::pickle {

struct Value;
using ValuePtr = std::shared_ptr<Value>;

struct NdArray {
  std::string type_code;  // numpy kind+size, e.g. "f4", "i8", "b1"
  char byte_order = '<';
  std::vector<std::int64_t> shape;
  bool fortran_order = false;
  std::string data;  // raw element bytes
};

struct Value {
  enum class Kind {
    kNone, kBool, kInt, kFloat, kBytes, kText, kTuple, kList, kDict,
    kGlobal, kObject, kArray, kDtype, kMark,
  };

  Kind kind = Kind::kNone;
  std::int64_t int_value = 0;
  double float_value = 0;
  std::string text;  // kBytes/kText payload, kGlobal/kObject qualified name
  std::vector<ValuePtr> items;                          // tuple, list
  std::vector<std::pair<ValuePtr, ValuePtr>> entries;   // dict
  ValuePtr state;  // kObject: argument to BUILD (usually the __dict__)
  NdArray array;   // kArray, and kDtype (type_code/byte_order only)

  bool is(Kind k) const { return kind == k; }
};

// Throws Error(kInvalidInput) on malformed or unsupported input.
ValuePtr Load(std::string_view bytes);
ValuePtr LoadFile(const std::string& path);

// Attribute lookup on an object's state dict; nullptr when absent.
ValuePtr Attribute(const Value& object, std::string_view name);

// Interprets a 1-D or 2-D numeric array or a scipy CSR/CSC matrix object as a
// dense double matrix (1-D arrays become a column).
Eigen::MatrixXd ToDenseMatrix(const Value& value);

std::vector<std::int64_t> ToIntVector(const Value& value);

// Interprets a pickled {node: [neighbors]} mapping.
std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> ToAdjacencyLists(
    const Value& value);

}  // namespace sggc::pickle

#endif  // SGGC_PICKLE_H_
