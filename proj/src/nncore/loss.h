// nncore/loss.h

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

#ifndef CTXASR_NNCORE_LOSS_H_
#define CTXASR_NNCORE_LOSS_H_

#include <vector>

#include "nncore/tensor.h"

namespace ctxasr {

// Probabilities this small are floored before the log; occurrences are
// counted rather than silently hidden.
constexpr double kProbFloor = 1e-12;

struct CrossEntropyResult {
  double loss = 0.0;    // mean negative log-likelihood over the batch
  Matrix softmax_grad;  // (p - onehot) / B, the gradient at the softmax input
  int floored = 0;      // rows whose label probability hit kProbFloor
};

// probabilities: B x K with rows summing to 1 (within 1e-6); labels: one
// class index per row in [0, K).
CrossEntropyResult CrossEntropy(const Matrix& probabilities, const std::vector<int>& labels);

}  // namespace ctxasr

#endif  // CTXASR_NNCORE_LOSS_H_
