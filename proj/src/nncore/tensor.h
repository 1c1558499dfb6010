// nncore/tensor.h

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

#ifndef CTXASR_NNCORE_TENSOR_H_
#define CTXASR_NNCORE_TENSOR_H_

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace ctxasr {

// All math runs in double precision; gradient checks and cross-run
// determinism depend on it.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Flat view of one named parameter tensor and its gradient, used by the
// optimizer, the gradient clipper, and the finite-difference checker.
struct ParamRef {
  std::string name;
  double* value = nullptr;
  double* grad = nullptr;
  int size = 0;
};

inline ParamRef MakeParamRef(const std::string& name, Matrix* value, Matrix* grad) {
  return ParamRef{name, value->data(), grad->data(), static_cast<int>(value->size())};
}

inline ParamRef MakeParamRef(const std::string& name, Vector* value, Vector* grad) {
  return ParamRef{name, value->data(), grad->data(), static_cast<int>(value->size())};
}

}  // namespace ctxasr

#endif  // CTXASR_NNCORE_TENSOR_H_
