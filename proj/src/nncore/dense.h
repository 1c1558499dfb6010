// nncore/dense.h

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

#ifndef CTXASR_NNCORE_DENSE_H_
#define CTXASR_NNCORE_DENSE_H_

#include <string>

#include "nncore/tensor.h"
#include "util/rng.h"

namespace ctxasr {

enum class Activation { kLinear, kRelu, kTanh, kSigmoid, kSoftmax };

std::string ActivationName(Activation activation);

// Fully connected layer: output = activation(input * W^T + b), rows of the
// input are batch items.
struct DenseLayer {
  Matrix weights;  // out x in
  Vector bias;     // out
  Activation activation = Activation::kLinear;

  int InputDim() const { return static_cast<int>(weights.cols()); }
  int OutputDim() const { return static_cast<int>(weights.rows()); }

  // Glorot-uniform weights, zero bias.
  static DenseLayer Create(int output_dim, int input_dim, Activation activation, Rng* rng);
};

// Glorot-uniform matrix in +/- sqrt(6 / (fan_in + fan_out)).
Matrix GlorotUniform(int rows, int cols, int fan_in, int fan_out, Rng* rng);

struct DenseCache {
  Matrix input;   // B x in
  Matrix output;  // B x out, post-activation
};

// Forward pass; fills `cache` when given so a backward pass can follow.
Matrix DenseForward(const DenseLayer& layer, const Matrix& input, DenseCache* cache = nullptr);

// Backward pass for the composition of DenseForward with an upstream
// gradient.  Returns the gradient with respect to the input and adds the
// weight/bias gradients into dweights/dbias (which must be pre-sized).
Matrix DenseBackward(const DenseLayer& layer, const DenseCache& cache,
                     const Matrix& output_grad, Matrix* dweights, Vector* dbias);

// Row-wise softmax with the usual max-shift; every row sums to 1.
Matrix RowSoftmax(const Matrix& logits);

}  // namespace ctxasr

#endif  // CTXASR_NNCORE_DENSE_H_
