// nncore/optim.h

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

#ifndef CTXASR_NNCORE_OPTIM_H_
#define CTXASR_NNCORE_OPTIM_H_

#include <map>
#include <string>
#include <vector>

#include "nncore/tensor.h"

namespace ctxasr {

enum class OptKind { kSgd, kAdagrad };

OptKind OptKindFromString(const std::string& name);

// Scales every gradient by threshold/norm when the global L2 norm exceeds
// the threshold; afterwards the norm is min(norm, threshold).  Returns the
// pre-clip norm.  Idempotent: a second call leaves the gradients untouched.
double ClipGradients(const std::vector<ParamRef>& params, double threshold);

// SGD or Adagrad over a named parameter collection.  Adagrad keeps one
// accumulator per tensor, keyed by name; accumulators never decrease.
class Optimizer {
 public:
  Optimizer(OptKind kind, double learning_rate, double epsilon = 1e-8);

  // One update.  If any gradient entry is non-finite the step is rejected
  // (no parameter is touched) and a NumericError names the tensor.
  void Step(const std::vector<ParamRef>& params);

  double learning_rate() const { return learning_rate_; }
  void set_learning_rate(double lr) { learning_rate_ = lr; }
  OptKind kind() const { return kind_; }

  // Adagrad accumulator for one tensor; empty until the first step.
  const Vector& Accumulator(const std::string& name) const;

 private:
  OptKind kind_;
  double learning_rate_;
  double epsilon_;
  std::map<std::string, Vector> accumulators_;
};

}  // namespace ctxasr

#endif  // CTXASR_NNCORE_OPTIM_H_
