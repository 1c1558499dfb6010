// nncore/checkpoint.cc

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

#include "nncore/checkpoint.h"

#include <sstream>

#include "util/common.h"
#include "util/rng.h"
#include "util/textio.h"

namespace ctxasr {

namespace {
constexpr const char* kHeader = "CKPT v1";
}

std::string CheckpointToString(const TensorMap& tensors) {
  std::ostringstream os;
  os << kHeader << '\n';
  for (const auto& [name, tensor] : tensors) {
    if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
      throw DataError(Msg("checkpoint: invalid tensor name '", name, "'"));
    if (!tensor.allFinite())
      throw NumericError(Msg("checkpoint: tensor '", name, "' has non-finite entries"));
    os << name << ' ' << tensor.rows() << ' ' << tensor.cols() << '\n';
    for (Eigen::Index r = 0; r < tensor.rows(); ++r) {
      for (Eigen::Index c = 0; c < tensor.cols(); ++c) {
        if (c > 0) os << ' ';
        os << FormatFull(tensor(r, c));
      }
      os << '\n';
    }
  }
  return os.str();
}

TensorMap CheckpointFromString(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw DataError(Msg("checkpoint: bad header '", line, "'"));
  TensorMap tensors;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> head = SplitWhitespace(line);
    if (head.size() != 3)
      throw DataError(Msg("checkpoint: bad tensor header '", line, "'"));
    const std::string& name = head[0];
    int rows = ParseInt(head[1], "checkpoint rows");
    int cols = ParseInt(head[2], "checkpoint cols");
    if (rows < 0 || cols < 0 || tensors.count(name))
      throw DataError(Msg("checkpoint: bad shape or duplicate tensor '", name, "'"));
    Matrix tensor(rows, cols);
    for (int r = 0; r < rows; ++r) {
      if (!std::getline(in, line))
        throw DataError(Msg("checkpoint: truncated tensor '", name, "'"));
      std::vector<std::string> values = SplitWhitespace(line);
      if (static_cast<int>(values.size()) != cols)
        throw DataError(Msg("checkpoint: tensor '", name, "' row ", r, " has ",
                            values.size(), " values, expected ", cols));
      for (int c = 0; c < cols; ++c)
        tensor(r, c) = ParseDouble(values[c], Msg("checkpoint tensor ", name));
    }
    tensors.emplace(name, std::move(tensor));
  }
  return tensors;
}

void WriteCheckpoint(const std::string& path, const TensorMap& tensors) {
  WriteFile(path, CheckpointToString(tensors));
}

TensorMap ReadCheckpoint(const std::string& path) {
  return CheckpointFromString(ReadFile(path));
}

uint64_t CheckpointHash(const TensorMap& tensors) {
  return Fnv1a64(CheckpointToString(tensors));
}

const Matrix& GetTensor(const TensorMap& tensors, const std::string& name) {
  auto it = tensors.find(name);
  if (it == tensors.end())
    throw DataError(Msg("checkpoint: missing tensor '", name, "'"));
  return it->second;
}

}  // namespace ctxasr
