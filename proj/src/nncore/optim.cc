// nncore/optim.cc

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

#include "nncore/optim.h"

#include <cmath>

#include "util/common.h"

namespace ctxasr {

OptKind OptKindFromString(const std::string& name) {
  if (name == "sgd") return OptKind::kSgd;
  if (name == "adagrad") return OptKind::kAdagrad;
  throw ConfigError(Msg("unknown optimizer '", name, "' (expected sgd or adagrad)"));
}

double ClipGradients(const std::vector<ParamRef>& params, double threshold) {
  if (threshold <= 0.0)
    throw ContractError(Msg("clip_gradients: threshold must be positive, got ", threshold));
  double sq = 0.0;
  for (const ParamRef& p : params)
    for (int i = 0; i < p.size; ++i) sq += p.grad[i] * p.grad[i];
  double norm = std::sqrt(sq);
  // The relative slack keeps clipping idempotent: rescaling can leave the
  // recomputed norm a few ulps above the threshold.
  if (norm > threshold * (1.0 + 1e-12)) {
    double scale = threshold / norm;
    for (const ParamRef& p : params)
      for (int i = 0; i < p.size; ++i) p.grad[i] *= scale;
  }
  return norm;
}

Optimizer::Optimizer(OptKind kind, double learning_rate, double epsilon)
    : kind_(kind), learning_rate_(learning_rate), epsilon_(epsilon) {
  if (learning_rate <= 0.0)
    throw ContractError(Msg("optimizer: learning rate must be positive, got ", learning_rate));
  if (epsilon <= 0.0)
    throw ContractError(Msg("optimizer: epsilon must be positive, got ", epsilon));
}

void Optimizer::Step(const std::vector<ParamRef>& params) {
  for (const ParamRef& p : params)
    for (int i = 0; i < p.size; ++i)
      if (!std::isfinite(p.grad[i]))
        throw NumericError(Msg("optimizer_step: non-finite gradient in tensor '", p.name,
                               "' at index ", i, "; step rejected"));

  for (const ParamRef& p : params) {
    if (kind_ == OptKind::kSgd) {
      for (int i = 0; i < p.size; ++i) p.value[i] -= learning_rate_ * p.grad[i];
    } else {
      Vector& acc = accumulators_[p.name];
      if (acc.size() == 0) acc = Vector::Zero(p.size);
      if (acc.size() != p.size)
        throw ContractError(Msg("optimizer_step: tensor '", p.name, "' changed size"));
      for (int i = 0; i < p.size; ++i) {
        acc[i] += p.grad[i] * p.grad[i];
        p.value[i] -= learning_rate_ * p.grad[i] / (std::sqrt(acc[i]) + epsilon_);
      }
    }
  }
}

const Vector& Optimizer::Accumulator(const std::string& name) const {
  auto it = accumulators_.find(name);
  if (it == accumulators_.end())
    throw ContractError(Msg("optimizer: no accumulator for tensor '", name, "'"));
  return it->second;
}

}  // namespace ctxasr
