// nncore/checkpoint.h

// Copyright 2026  The ctxasr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXASR_NNCORE_CHECKPOINT_H_
#define CTXASR_NNCORE_CHECKPOINT_H_

#include <cstdint>
#include <map>
#include <string>

#include "nncore/tensor.h"

namespace ctxasr {

// Named parameter tensors; std::map keeps them ordered lexicographically,
// which the file format requires.
using TensorMap = std::map<std::string, Matrix>;

// Text format: header line "CKPT v1", then per tensor a line
// "name rows cols" followed by `rows` lines of `cols` decimal floats.
// Values are written with enough digits to round-trip exactly.
std::string CheckpointToString(const TensorMap& tensors);
TensorMap CheckpointFromString(const std::string& text);

void WriteCheckpoint(const std::string& path, const TensorMap& tensors);
TensorMap ReadCheckpoint(const std::string& path);

// FNV-1a over the serialized text; equal hashes mean bit-identical tensors.
uint64_t CheckpointHash(const TensorMap& tensors);

// Lookup with a clear error instead of operator[]'s silent insert.
const Matrix& GetTensor(const TensorMap& tensors, const std::string& name);

}  // namespace ctxasr

#endif  // CTXASR_NNCORE_CHECKPOINT_H_
