// acoustic/adapt.cc

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

#include "acoustic/adapt.h"

#include <cmath>
#include <numeric>

#include "nncore/loss.h"
#include "util/common.h"

namespace ctxasr {

namespace {

std::string AdaptWeightsName(int index) { return Msg("layer", index, ".weights"); }
std::string AdaptBiasName(int index) { return Msg("layer", index, ".bias"); }

int TableContextDim(const ContextTable& contexts) {
  if (contexts.empty()) throw ContractError("context table is empty");
  int dim = contexts.begin()->second.Dim();
  for (const auto& [utt, ctx] : contexts)
    if (ctx.Dim() != dim)
      throw DataError(Msg("context table: utterance ", utt, " has dim ", ctx.Dim(),
                          ", expected ", dim));
  return dim;
}

}  // namespace

Vector AdaptationNetwork::Shift(const Vector& context) const {
  if (context.size() != ContextDim())
    throw ShapeError(Msg("adaptation network: context dim ", context.size(), ", expected ",
                         ContextDim()));
  Matrix h = context.transpose();
  for (const DenseLayer& layer : layers) h = DenseForward(layer, h);
  return h.row(0).transpose();
}

AdaptationNetwork AdaptationNetwork::Create(int context_dim, int output_dim, int hidden_layers,
                                            int hidden_units, uint64_t seed) {
  AdaptationNetwork net;
  Rng rng(MixSeed(seed, Fnv1a64("adaptation_net_init")));
  int in = context_dim;
  for (int i = 0; i < hidden_layers; ++i) {
    net.layers.push_back(DenseLayer::Create(hidden_units, in, Activation::kTanh, &rng));
    in = hidden_units;
  }
  // Zero output layer: a freshly created network is the identity shift,
  // so an untrained VAT model scores exactly like its SI baseline.
  DenseLayer out;
  out.weights = Matrix::Zero(output_dim, in);
  out.bias = Vector::Zero(output_dim);
  out.activation = Activation::kLinear;
  net.layers.push_back(std::move(out));
  return net;
}

TensorMap AdaptationNetwork::ToTensors() const {
  TensorMap tensors;
  for (size_t i = 0; i < layers.size(); ++i) {
    tensors[AdaptWeightsName(static_cast<int>(i))] = layers[i].weights;
    tensors[AdaptBiasName(static_cast<int>(i))] = layers[i].bias;
  }
  tensors["meta"] = Matrix::Constant(1, 1, static_cast<double>(layers.size()));
  return tensors;
}

AdaptationNetwork AdaptationNetwork::FromTensors(const TensorMap& tensors) {
  int layer_count = static_cast<int>(GetTensor(tensors, "meta")(0, 0));
  AdaptationNetwork net;
  for (int i = 0; i < layer_count; ++i) {
    DenseLayer layer;
    layer.weights = GetTensor(tensors, AdaptWeightsName(i));
    layer.bias = GetTensor(tensors, AdaptBiasName(i));
    layer.activation = (i + 1 == layer_count) ? Activation::kLinear : Activation::kTanh;
    net.layers.push_back(std::move(layer));
  }
  return net;
}

Matrix ApplyShift(const AdaptationNetwork& adaptnet, const Vector& context,
                  const Matrix& frames) {
  Vector shift = adaptnet.Shift(context);
  if (frames.cols() != shift.size())
    throw ShapeError(Msg("apply_shift: frames have dim ", frames.cols(), " but the shift is ",
                         shift.size(), "-dimensional"));
  return frames.rowwise() + shift.transpose();
}

std::string VatStageName(VatStage stage) {
  switch (stage) {
    case VatStage::kSi: return "si";
    case VatStage::kAdaptNetTrained: return "adapt-net-trained";
    case VatStage::kVatRetrained: return "vat-retrained";
  }
  return "?";
}

TensorMap VatModel::ToTensors() const {
  TensorMap tensors;
  for (const auto& [name, tensor] : dnn.ToTensors()) tensors["dnn." + name] = tensor;
  for (const auto& [name, tensor] : adaptnet.ToTensors()) tensors["adapt." + name] = tensor;
  tensors["vat.stage"] = Matrix::Constant(1, 1, static_cast<double>(stage));
  return tensors;
}

VatModel VatModel::FromTensors(const TensorMap& tensors) {
  TensorMap dnn_tensors, adapt_tensors;
  for (const auto& [name, tensor] : tensors) {
    if (name.rfind("dnn.", 0) == 0) dnn_tensors[name.substr(4)] = tensor;
    if (name.rfind("adapt.", 0) == 0) adapt_tensors[name.substr(6)] = tensor;
  }
  VatModel model;
  model.dnn = AcousticDnn::FromTensors(dnn_tensors);
  model.adaptnet = AdaptationNetwork::FromTensors(adapt_tensors);
  int stage = static_cast<int>(GetTensor(tensors, "vat.stage")(0, 0));
  if (stage < 0 || stage > 2) throw DataError("vat model: bad stage value");
  model.stage = static_cast<VatStage>(stage);
  return model;
}

double VatLoss(const AcousticDnn& dnn, const AdaptationNetwork& adaptnet,
               const AcousticCorpus& corpus, const ContextTable& contexts) {
  double nll_sum = 0.0;
  long frames = 0;
  for (const Utterance& utt : corpus.utterances) {
    Matrix shifted =
        ApplyShift(adaptnet, GetContext(contexts, utt.id).values, dnn.Normalize(utt.frames));
    nll_sum += CrossEntropy(dnn.Probs(shifted), utt.labels).loss * utt.NumFrames();
    frames += utt.NumFrames();
  }
  return nll_sum / static_cast<double>(frames);
}

AdaptationNetwork TrainAdaptationNet(const AcousticDnn& si, const AcousticCorpus& corpus,
                                     const ContextTable& contexts, const AmTrainConfig& config,
                                     AmTrainLog* log) {
  if (si.context_dim != 0)
    throw ContractError("train_adaptation_net: the frozen model must be an SI model");
  if (corpus.utterances.empty()) throw ContractError("train_adaptation_net: empty corpus");
  RequireContexts(contexts, corpus.UtteranceIds());
  const int context_dim = TableContextDim(contexts);

  AdaptationNetwork adaptnet =
      AdaptationNetwork::Create(context_dim, si.raw_dim, 2, 64, config.seed);
  const size_t adapt_layers = adaptnet.layers.size();

  std::vector<Matrix> dweights(adapt_layers);
  std::vector<Vector> dbiases(adapt_layers);
  std::vector<ParamRef> params;
  for (size_t i = 0; i < adapt_layers; ++i) {
    dweights[i] = Matrix::Zero(adaptnet.layers[i].weights.rows(),
                               adaptnet.layers[i].weights.cols());
    dbiases[i] = Vector::Zero(adaptnet.layers[i].bias.size());
    params.push_back(MakeParamRef(AdaptWeightsName(static_cast<int>(i)),
                                  &adaptnet.layers[i].weights, &dweights[i]));
    params.push_back(MakeParamRef(AdaptBiasName(static_cast<int>(i)),
                                  &adaptnet.layers[i].bias, &dbiases[i]));
  }

  // Scratch gradients for the frozen DNN; accumulated but never applied.
  std::vector<Matrix> si_dweights(si.layers.size());
  std::vector<Vector> si_dbiases(si.layers.size());
  for (size_t i = 0; i < si.layers.size(); ++i) {
    si_dweights[i] = Matrix::Zero(si.layers[i].weights.rows(), si.layers[i].weights.cols());
    si_dbiases[i] = Vector::Zero(si.layers[i].bias.size());
  }

  // Normalized features are fixed; precompute them.
  std::vector<Matrix> normalized;
  normalized.reserve(corpus.utterances.size());
  for (const Utterance& utt : corpus.utterances) normalized.push_back(si.Normalize(utt.frames));

  Optimizer optimizer(config.optimizer, config.learning_rate * config.finetune_lr_factor);
  if (log != nullptr) log->initial_loss = VatLoss(si, adaptnet, corpus, contexts);

  const int total = static_cast<int>(corpus.utterances.size());
  int floored = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::vector<int> order(total);
    std::iota(order.begin(), order.end(), 0);
    Rng order_rng(MixSeed(config.seed, Fnv1a64(Msg("adapt_epoch_", epoch))));
    order_rng.Shuffle(&order);

    double nll_sum = 0.0;
    long frame_count = 0;
    for (int start = 0; start < total; start += config.utterance_batch) {
      int size = std::min(config.utterance_batch, total - start);
      long batch_frames = 0;
      for (int i = 0; i < size; ++i)
        batch_frames += corpus.utterances[order[start + i]].NumFrames();

      for (size_t i = 0; i < adapt_layers; ++i) {
        dweights[i].setZero();
        dbiases[i].setZero();
      }
      for (int i = 0; i < size; ++i) {
        const Utterance& utt = corpus.utterances[order[start + i]];
        const Vector& context = GetContext(contexts, utt.id).values;

        std::vector<DenseCache> adapt_caches(adapt_layers);
        Matrix a = context.transpose();
        for (size_t l = 0; l < adapt_layers; ++l)
          a = DenseForward(adaptnet.layers[l], a, &adapt_caches[l]);

        Matrix shifted = normalized[order[start + i]].rowwise() + a.row(0);
        std::vector<DenseCache> si_caches(si.layers.size());
        Matrix h = shifted;
        for (size_t l = 0; l < si.layers.size(); ++l)
          h = DenseForward(si.layers[l], h, &si_caches[l]);
        CrossEntropyResult ce = CrossEntropy(h, utt.labels);
        nll_sum += ce.loss * utt.NumFrames();
        frame_count += utt.NumFrames();
        floored += ce.floored;

        // Frame-weighted batch objective.
        Matrix grad = ce.softmax_grad *
                      (static_cast<double>(utt.NumFrames()) / static_cast<double>(batch_frames));
        const DenseLayer& out = si.layers.back();
        grad = grad * out.weights;  // cross entropy at the softmax input
        for (int l = static_cast<int>(si.layers.size()) - 2; l >= 0; --l)
          grad = DenseBackward(si.layers[l], si_caches[l], grad, &si_dweights[l],
                               &si_dbiases[l]);

        // The shift is shared by all frames of the utterance.
        Matrix dshift = grad.colwise().sum();
        for (int l = static_cast<int>(adapt_layers) - 1; l >= 0; --l)
          dshift = DenseBackward(adaptnet.layers[l], adapt_caches[l], dshift, &dweights[l],
                                 &dbiases[l]);
      }
      optimizer.Step(params);
    }
    double loss = nll_sum / static_cast<double>(frame_count);
    if (!std::isfinite(loss))
      throw NumericError(Msg("adaptation training loss diverged at epoch ", epoch));
    if (log != nullptr) log->epoch_loss.push_back(loss);
  }
  if (log != nullptr) log->floored = floored;
  return adaptnet;
}

VatModel RetrainVatDnn(const VatModel& model, const AcousticCorpus& corpus,
                       const ContextTable& contexts, const AmTrainConfig& config,
                       AmTrainLog* log) {
  if (model.stage != VatStage::kAdaptNetTrained)
    throw ContractError(Msg("retrain_vat_dnn: stage must be adapt-net-trained, got ",
                            VatStageName(model.stage)));
  if (corpus.utterances.empty()) throw ContractError("retrain_vat_dnn: empty corpus");
  RequireContexts(contexts, corpus.UtteranceIds());

  VatModel result;
  result.dnn = model.dnn;  // warm start
  result.adaptnet = model.adaptnet;
  result.stage = VatStage::kVatRetrained;

  // With the adaptation network frozen, the shifted inputs are fixed.
  Matrix inputs(corpus.TotalFrames(), model.dnn.raw_dim);
  std::vector<int> labels;
  labels.reserve(corpus.TotalFrames());
  int row = 0;
  for (const Utterance& utt : corpus.utterances) {
    Matrix shifted = ApplyShift(result.adaptnet, GetContext(contexts, utt.id).values,
                                result.dnn.Normalize(utt.frames));
    inputs.block(row, 0, shifted.rows(), shifted.cols()) = shifted;
    labels.insert(labels.end(), utt.labels.begin(), utt.labels.end());
    row += static_cast<int>(shifted.rows());
  }

  Optimizer optimizer(config.optimizer, config.learning_rate * config.finetune_lr_factor);
  int floored = 0;
  if (log != nullptr) log->initial_loss = DnnLoss(result.dnn, inputs, labels);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    Rng order_rng(MixSeed(config.seed, Fnv1a64(Msg("vat_epoch_", epoch))));
    double loss = TrainDnnEpoch(&result.dnn, inputs, labels, config.batch_size, &order_rng,
                                &optimizer, &floored);
    if (!std::isfinite(loss))
      throw NumericError(Msg("VAT retraining loss diverged at epoch ", epoch));
    if (log != nullptr) log->epoch_loss.push_back(loss);
  }
  if (log != nullptr) log->floored = floored;
  return result;
}

double FrameAccuracy(const VatModel& model, const AcousticCorpus& corpus,
                     const ContextTable& contexts) {
  RequireContexts(contexts, corpus.UtteranceIds());
  long correct = 0, total = 0;
  for (const Utterance& utt : corpus.utterances) {
    Matrix shifted = ApplyShift(model.adaptnet, GetContext(contexts, utt.id).values,
                                model.dnn.Normalize(utt.frames));
    Matrix probs = model.dnn.Probs(shifted);
    for (Eigen::Index r = 0; r < probs.rows(); ++r) {
      int best = 0;
      for (Eigen::Index c = 1; c < probs.cols(); ++c)
        if (probs(r, c) > probs(r, best)) best = static_cast<int>(c);
      if (best == utt.labels[r]) ++correct;
      ++total;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(total);
}

}  // namespace ctxasr
