// nncore/gradcheck.cc

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

#include "nncore/gradcheck.h"

#include <algorithm>
#include <cmath>

#include "util/common.h"

namespace ctxasr {

GradCheckReport CheckGradients(const std::function<double()>& loss_fn,
                               const std::vector<ParamRef>& params, double tolerance,
                               double step) {
  double loss_a = loss_fn();
  std::vector<std::vector<double>> analytic;
  analytic.reserve(params.size());
  for (const ParamRef& p : params)
    analytic.emplace_back(p.grad, p.grad + p.size);
  double loss_b = loss_fn();
  if (loss_a != loss_b)
    throw ContractError(Msg("grad_check: closure is not deterministic (", loss_a,
                            " vs ", loss_b, ")"));

  GradCheckReport report;
  for (size_t t = 0; t < params.size(); ++t) {
    const ParamRef& p = params[t];
    for (int i = 0; i < p.size; ++i) {
      double saved = p.value[i];
      p.value[i] = saved + step;
      double loss_plus = loss_fn();
      p.value[i] = saved - step;
      double loss_minus = loss_fn();
      p.value[i] = saved;
      double numeric = (loss_plus - loss_minus) / (2.0 * step);
      double a = analytic[t][i];
      double denom = std::max({std::abs(a), std::abs(numeric), 1e-3});
      double rel = std::abs(a - numeric) / denom;
      if (rel > report.max_rel_error) {
        report.max_rel_error = rel;
        report.worst_tensor = p.name;
        report.worst_index = i;
      }
    }
  }
  // Restore the gradients for the unperturbed point.
  loss_fn();
  report.pass = report.max_rel_error < tolerance;
  return report;
}

}  // namespace ctxasr
