// nncore/gradcheck.h

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

#ifndef CTXASR_NNCORE_GRADCHECK_H_
#define CTXASR_NNCORE_GRADCHECK_H_

#include <functional>
#include <string>
#include <vector>

#include "nncore/tensor.h"

namespace ctxasr {

struct GradCheckReport {
  bool pass = false;
  double max_rel_error = 0.0;
  std::string worst_tensor;
  int worst_index = -1;
};

// Compares analytic gradients against central finite differences.
//
// `loss_fn` recomputes the scalar loss from the current parameter values and
// refreshes every gradient buffer in `params`; it must be deterministic
// (dropout off), which is verified by evaluating it twice up front.
GradCheckReport CheckGradients(const std::function<double()>& loss_fn,
                               const std::vector<ParamRef>& params, double tolerance,
                               double step = 1e-5);

}  // namespace ctxasr

#endif  // CTXASR_NNCORE_GRADCHECK_H_
