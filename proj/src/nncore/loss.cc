// nncore/loss.cc

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

#include "nncore/loss.h"

#include <cmath>

#include "util/common.h"

namespace ctxasr {

CrossEntropyResult CrossEntropy(const Matrix& probabilities, const std::vector<int>& labels) {
  const Eigen::Index batch = probabilities.rows();
  const Eigen::Index classes = probabilities.cols();
  if (static_cast<Eigen::Index>(labels.size()) != batch)
    throw ContractError(Msg("cross_entropy: ", labels.size(), " labels for ", batch, " rows"));
  if (batch == 0) throw ContractError("cross_entropy: empty batch");
  for (Eigen::Index r = 0; r < batch; ++r) {
    if (std::abs(probabilities.row(r).sum() - 1.0) > 1e-6)
      throw ContractError(Msg("cross_entropy: row ", r, " sums to ",
                              probabilities.row(r).sum(), ", not 1"));
    if (labels[r] < 0 || labels[r] >= classes)
      throw ContractError(Msg("cross_entropy: label ", labels[r], " out of [0,", classes, ")"));
  }

  CrossEntropyResult result;
  result.softmax_grad = probabilities / static_cast<double>(batch);
  double total = 0.0;
  for (Eigen::Index r = 0; r < batch; ++r) {
    double p = probabilities(r, labels[r]);
    if (p < kProbFloor) {
      p = kProbFloor;
      ++result.floored;
    }
    total -= std::log(p);
    result.softmax_grad(r, labels[r]) -= 1.0 / static_cast<double>(batch);
  }
  result.loss = total / static_cast<double>(batch);
  return result;
}

}  // namespace ctxasr
