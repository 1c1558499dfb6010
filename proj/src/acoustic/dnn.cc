// acoustic/dnn.cc

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

#include "acoustic/dnn.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nncore/loss.h"
#include "util/common.h"

namespace ctxasr {

namespace {

std::string LayerWeightsName(int index) { return Msg("layer", index, ".weights"); }
std::string LayerBiasName(int index) { return Msg("layer", index, ".bias"); }

std::vector<DenseLayer> BuildLayers(int input_dim, int num_classes, int hidden_layers,
                                    int hidden_units, uint64_t seed) {
  std::vector<DenseLayer> layers;
  int in = input_dim;
  Rng rng(MixSeed(seed, Fnv1a64("acoustic_dnn_init")));
  for (int i = 0; i < hidden_layers; ++i) {
    layers.push_back(DenseLayer::Create(hidden_units, in, Activation::kRelu, &rng));
    in = hidden_units;
  }
  layers.push_back(DenseLayer::Create(num_classes, in, Activation::kSoftmax, &rng));
  return layers;
}

// Normalization statistics over every frame of the corpus.
void ComputeFeatureNorm(const AcousticCorpus& corpus, Vector* mean, Vector* scale) {
  const int dim = corpus.feature_dim;
  Vector sum = Vector::Zero(dim), sumsq = Vector::Zero(dim);
  long total = 0;
  for (const Utterance& utt : corpus.utterances) {
    sum += utt.frames.colwise().sum().transpose();
    sumsq += utt.frames.array().square().matrix().colwise().sum().transpose();
    total += utt.NumFrames();
  }
  *mean = sum / static_cast<double>(total);
  Vector variance = sumsq / static_cast<double>(total) - mean->array().square().matrix();
  scale->resize(dim);
  for (int d = 0; d < dim; ++d)
    (*scale)[d] = 1.0 / std::max(std::sqrt(std::max(variance[d], 0.0)), 1e-8);
}

void CheckCorpus(const AcousticCorpus& corpus) {
  if (corpus.utterances.empty()) throw ContractError("acoustic training: empty corpus");
}

std::vector<ParamRef> DnnParams(AcousticDnn* dnn, std::vector<Matrix>* dweights,
                                std::vector<Vector>* dbiases) {
  std::vector<ParamRef> params;
  for (size_t i = 0; i < dnn->layers.size(); ++i) {
    params.push_back(MakeParamRef(LayerWeightsName(static_cast<int>(i)),
                                  &dnn->layers[i].weights, &(*dweights)[i]));
    params.push_back(
        MakeParamRef(LayerBiasName(static_cast<int>(i)), &dnn->layers[i].bias, &(*dbiases)[i]));
  }
  return params;
}

}  // namespace

Matrix AcousticDnn::Normalize(const Matrix& frames) const {
  if (frames.cols() != raw_dim)
    throw ShapeError(Msg("normalize: frames have dim ", frames.cols(), ", model expects ",
                         raw_dim));
  return ((frames.rowwise() - feature_mean.transpose()).array().rowwise() *
          feature_scale.transpose().array())
      .matrix();
}

Matrix AcousticDnn::Probs(const Matrix& input) const {
  Matrix h = input;
  for (const DenseLayer& layer : layers) h = DenseForward(layer, h);
  return h;
}

TensorMap AcousticDnn::ToTensors() const {
  TensorMap tensors;
  for (size_t i = 0; i < layers.size(); ++i) {
    tensors[LayerWeightsName(static_cast<int>(i))] = layers[i].weights;
    tensors[LayerBiasName(static_cast<int>(i))] = layers[i].bias;
  }
  tensors["norm.mean"] = feature_mean;
  tensors["norm.scale"] = feature_scale;
  Matrix meta(1, 4);
  meta << raw_dim, context_dim, num_classes, static_cast<double>(layers.size());
  tensors["meta"] = meta;
  return tensors;
}

AcousticDnn AcousticDnn::FromTensors(const TensorMap& tensors) {
  const Matrix& meta = GetTensor(tensors, "meta");
  if (meta.rows() != 1 || meta.cols() != 4) throw DataError("acoustic meta tensor malformed");
  AcousticDnn dnn;
  dnn.raw_dim = static_cast<int>(meta(0, 0));
  dnn.context_dim = static_cast<int>(meta(0, 1));
  dnn.num_classes = static_cast<int>(meta(0, 2));
  int layer_count = static_cast<int>(meta(0, 3));
  dnn.feature_mean = GetTensor(tensors, "norm.mean");
  dnn.feature_scale = GetTensor(tensors, "norm.scale");
  for (int i = 0; i < layer_count; ++i) {
    DenseLayer layer;
    layer.weights = GetTensor(tensors, LayerWeightsName(i));
    layer.bias = GetTensor(tensors, LayerBiasName(i));
    layer.activation = (i + 1 == layer_count) ? Activation::kSoftmax : Activation::kRelu;
    dnn.layers.push_back(std::move(layer));
  }
  return dnn;
}

double DnnLoss(const AcousticDnn& dnn, const Matrix& inputs, const std::vector<int>& labels) {
  return CrossEntropy(dnn.Probs(inputs), labels).loss;
}

double TrainDnnEpoch(AcousticDnn* dnn, const Matrix& inputs, const std::vector<int>& labels,
                     int batch_size, Rng* order_rng, Optimizer* optimizer, int* floored) {
  const int total = static_cast<int>(inputs.rows());
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  order_rng->Shuffle(&order);

  const size_t layer_count = dnn->layers.size();
  std::vector<Matrix> dweights(layer_count);
  std::vector<Vector> dbiases(layer_count);
  for (size_t i = 0; i < layer_count; ++i) {
    dweights[i] = Matrix::Zero(dnn->layers[i].weights.rows(), dnn->layers[i].weights.cols());
    dbiases[i] = Vector::Zero(dnn->layers[i].bias.size());
  }
  std::vector<ParamRef> params = DnnParams(dnn, &dweights, &dbiases);

  double loss_sum = 0.0;
  for (int start = 0; start < total; start += batch_size) {
    int size = std::min(batch_size, total - start);
    Matrix batch(size, inputs.cols());
    std::vector<int> batch_labels(size);
    for (int i = 0; i < size; ++i) {
      batch.row(i) = inputs.row(order[start + i]);
      batch_labels[i] = labels[order[start + i]];
    }

    std::vector<DenseCache> caches(layer_count);
    Matrix h = batch;
    for (size_t i = 0; i < layer_count; ++i) h = DenseForward(dnn->layers[i], h, &caches[i]);
    CrossEntropyResult ce = CrossEntropy(h, batch_labels);
    loss_sum += ce.loss * size;
    if (floored != nullptr) *floored += ce.floored;

    for (size_t i = 0; i < layer_count; ++i) {
      dweights[i].setZero();
      dbiases[i].setZero();
    }
    // The cross-entropy gradient is taken at the softmax input, so the
    // output layer backpropagates as if linear.
    Matrix grad = ce.softmax_grad;
    const DenseLayer& out = dnn->layers.back();
    dweights.back() += grad.transpose() * caches.back().input;
    dbiases.back() += grad.colwise().sum().transpose();
    grad = grad * out.weights;
    for (int i = static_cast<int>(layer_count) - 2; i >= 0; --i)
      grad = DenseBackward(dnn->layers[i], caches[i], grad, &dweights[i], &dbiases[i]);

    optimizer->Step(params);
  }
  return loss_sum / total;
}

namespace {

// Stacks per-utterance inputs (normalized, optionally context-extended)
// into one matrix plus a flat label vector.
void StackInputs(const AcousticDnn& dnn, const AcousticCorpus& corpus,
                 const ContextTable* contexts, Matrix* inputs, std::vector<int>* labels) {
  inputs->resize(corpus.TotalFrames(), dnn.InputDim());
  labels->clear();
  labels->reserve(corpus.TotalFrames());
  int row = 0;
  for (const Utterance& utt : corpus.utterances) {
    Matrix x = dnn.Normalize(utt.frames);
    inputs->block(row, 0, x.rows(), x.cols()) = x;
    if (contexts != nullptr) {
      const Vector& ctx = GetContext(*contexts, utt.id).values;
      if (ctx.size() != dnn.context_dim)
        throw ShapeError(Msg("utterance ", utt.id, ": context dim ", ctx.size(),
                             " != model context dim ", dnn.context_dim));
      inputs->block(row, dnn.raw_dim, x.rows(), dnn.context_dim) =
          ctx.transpose().replicate(x.rows(), 1);
    }
    labels->insert(labels->end(), utt.labels.begin(), utt.labels.end());
    row += static_cast<int>(x.rows());
  }
}

AcousticDnn TrainFlatDnn(const AcousticCorpus& corpus, const ContextTable* contexts,
                         int context_dim, const AmTrainConfig& config, AmTrainLog* log) {
  CheckCorpus(corpus);
  AcousticDnn dnn;
  dnn.raw_dim = corpus.feature_dim;
  dnn.context_dim = context_dim;
  dnn.num_classes = corpus.num_classes;
  ComputeFeatureNorm(corpus, &dnn.feature_mean, &dnn.feature_scale);
  dnn.layers = BuildLayers(dnn.InputDim(), dnn.num_classes, config.hidden_layers,
                           config.hidden_units, config.seed);
  if (contexts != nullptr) RequireContexts(*contexts, corpus.UtteranceIds());

  Matrix inputs;
  std::vector<int> labels;
  StackInputs(dnn, corpus, contexts, &inputs, &labels);

  Optimizer optimizer(config.optimizer, config.learning_rate);
  int floored = 0;
  if (log != nullptr) log->initial_loss = DnnLoss(dnn, inputs, labels);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    Rng order_rng(MixSeed(config.seed, Fnv1a64(Msg("am_epoch_", epoch))));
    double loss = TrainDnnEpoch(&dnn, inputs, labels, config.batch_size, &order_rng,
                                &optimizer, &floored);
    if (!std::isfinite(loss)) throw NumericError(Msg("training loss diverged at epoch ", epoch));
    if (log != nullptr) log->epoch_loss.push_back(loss);
  }
  if (log != nullptr) log->floored = floored;
  return dnn;
}

}  // namespace

AcousticDnn TrainSiDnn(const AcousticCorpus& corpus, const AmTrainConfig& config,
                       AmTrainLog* log) {
  return TrainFlatDnn(corpus, nullptr, 0, config, log);
}

AcousticDnn TrainConcatBaseline(const AcousticCorpus& corpus, const ContextTable& contexts,
                                const AmTrainConfig& config, AmTrainLog* log) {
  CheckCorpus(corpus);
  RequireContexts(contexts, corpus.UtteranceIds());
  int context_dim = contexts.begin()->second.Dim();
  return TrainFlatDnn(corpus, &contexts, context_dim, config, log);
}

namespace {

double AccuracyOnInputs(const AcousticDnn& model, const Matrix& inputs,
                        const std::vector<int>& labels) {
  Matrix probs = model.Probs(inputs);
  int correct = 0;
  for (Eigen::Index r = 0; r < probs.rows(); ++r) {
    int best = 0;
    for (Eigen::Index c = 1; c < probs.cols(); ++c)
      if (probs(r, c) > probs(r, best)) best = static_cast<int>(c);  // ties keep lowest index
    if (best == labels[r]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(probs.rows());
}

}  // namespace

double FrameAccuracy(const AcousticDnn& model, const AcousticCorpus& corpus) {
  if (model.context_dim != 0)
    throw ContractError("frame_accuracy: model expects context vectors; none given");
  Matrix inputs;
  std::vector<int> labels;
  StackInputs(model, corpus, nullptr, &inputs, &labels);
  return AccuracyOnInputs(model, inputs, labels);
}

double FrameAccuracy(const AcousticDnn& model, const AcousticCorpus& corpus,
                     const ContextTable& contexts) {
  if (model.context_dim == 0) return FrameAccuracy(model, corpus);
  RequireContexts(contexts, corpus.UtteranceIds());
  Matrix inputs;
  std::vector<int> labels;
  StackInputs(model, corpus, &contexts, &inputs, &labels);
  return AccuracyOnInputs(model, inputs, labels);
}

}  // namespace ctxasr
