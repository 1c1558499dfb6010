// nncore/dense.cc

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

#include "nncore/dense.h"

#include <cmath>

#include "util/common.h"

namespace ctxasr {

std::string ActivationName(Activation activation) {
  switch (activation) {
    case Activation::kLinear: return "linear";
    case Activation::kRelu: return "relu";
    case Activation::kTanh: return "tanh";
    case Activation::kSigmoid: return "sigmoid";
    case Activation::kSoftmax: return "softmax";
  }
  return "?";
}

Matrix GlorotUniform(int rows, int cols, int fan_in, int fan_out, Rng* rng) {
  double limit = std::sqrt(6.0 / (fan_in + fan_out));
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng->Uniform(-limit, limit);
  return m;
}

DenseLayer DenseLayer::Create(int output_dim, int input_dim, Activation activation, Rng* rng) {
  DenseLayer layer;
  layer.weights = GlorotUniform(output_dim, input_dim, input_dim, output_dim, rng);
  layer.bias = Vector::Zero(output_dim);
  layer.activation = activation;
  return layer;
}

Matrix RowSoftmax(const Matrix& logits) {
  Matrix probs(logits.rows(), logits.cols());
  for (Eigen::Index r = 0; r < logits.rows(); ++r) {
    double max = logits.row(r).maxCoeff();
    Eigen::RowVectorXd e = (logits.row(r).array() - max).exp();
    probs.row(r) = e / e.sum();
  }
  return probs;
}

Matrix DenseForward(const DenseLayer& layer, const Matrix& input, DenseCache* cache) {
  if (input.cols() != layer.weights.cols())
    throw ShapeError(Msg("dense_forward: input is ", input.rows(), "x", input.cols(),
                         " but weights are ", layer.weights.rows(), "x", layer.weights.cols()));
  if (layer.bias.size() != layer.weights.rows())
    throw ShapeError(Msg("dense_forward: bias length ", layer.bias.size(),
                         " != weight rows ", layer.weights.rows()));
  Matrix pre = input * layer.weights.transpose();
  pre.rowwise() += layer.bias.transpose();
  Matrix out;
  switch (layer.activation) {
    case Activation::kLinear: out = pre; break;
    case Activation::kRelu: out = pre.cwiseMax(0.0); break;
    case Activation::kTanh: out = pre.array().tanh(); break;
    case Activation::kSigmoid:
      out = (1.0 / (1.0 + (-pre.array()).exp())).matrix();
      break;
    case Activation::kSoftmax: out = RowSoftmax(pre); break;
  }
  if (cache != nullptr) {
    cache->input = input;
    cache->output = out;
  }
  return out;
}

Matrix DenseBackward(const DenseLayer& layer, const DenseCache& cache,
                     const Matrix& output_grad, Matrix* dweights, Vector* dbias) {
  const Matrix& out = cache.output;
  if (cache.input.rows() != out.rows() || cache.input.cols() != layer.weights.cols() ||
      out.cols() != layer.weights.rows())
    throw ContractError("dense_backward: cache is inconsistent with the layer");
  if (output_grad.rows() != out.rows() || output_grad.cols() != out.cols())
    throw ContractError(Msg("dense_backward: upstream gradient is ", output_grad.rows(),
                            "x", output_grad.cols(), " but output is ", out.rows(), "x",
                            out.cols()));
  if (dweights->rows() != layer.weights.rows() || dweights->cols() != layer.weights.cols() ||
      dbias->size() != layer.bias.size())
    throw ContractError("dense_backward: gradient buffers have wrong shapes");

  Matrix dpre;
  switch (layer.activation) {
    case Activation::kLinear:
      dpre = output_grad;
      break;
    case Activation::kRelu:
      dpre = (out.array() > 0.0).cast<double>() * output_grad.array();
      break;
    case Activation::kTanh:
      dpre = (1.0 - out.array().square()) * output_grad.array();
      break;
    case Activation::kSigmoid:
      dpre = out.array() * (1.0 - out.array()) * output_grad.array();
      break;
    case Activation::kSoftmax: {
      // Row-wise Jacobian: dpre = p .* (g - (g . p)).
      dpre.resize(out.rows(), out.cols());
      for (Eigen::Index r = 0; r < out.rows(); ++r) {
        double dot = output_grad.row(r).dot(out.row(r));
        dpre.row(r) = out.row(r).array() * (output_grad.row(r).array() - dot);
      }
      break;
    }
  }
  *dweights += dpre.transpose() * cache.input;
  *dbias += dpre.colwise().sum().transpose();
  return dpre * layer.weights;
}

}  // namespace ctxasr
