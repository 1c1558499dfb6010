// acoustic/adapt.h

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

#ifndef CTXASR_ACOUSTIC_ADAPT_H_
#define CTXASR_ACOUSTIC_ADAPT_H_

#include <string>
#include <vector>

#include "acoustic/dnn.h"

namespace ctxasr {

// Small network turning an utterance's context vector into one additive
// shift over the acoustic feature dimensions.
struct AdaptationNetwork {
  std::vector<DenseLayer> layers;  // tanh hiddens, linear output

  int ContextDim() const { return layers.empty() ? 0 : layers.front().InputDim(); }
  int OutputDim() const { return layers.empty() ? 0 : layers.back().OutputDim(); }

  Vector Shift(const Vector& context) const;

  // Hidden layers default to 2 x 64 tanh; the output layer is linear with
  // zero-initialized weights so an untrained network shifts nothing.
  static AdaptationNetwork Create(int context_dim, int output_dim, int hidden_layers,
                                  int hidden_units, uint64_t seed);

  TensorMap ToTensors() const;
  static AdaptationNetwork FromTensors(const TensorMap& tensors);
};

// One shift per utterance, added to every frame row.
Matrix ApplyShift(const AdaptationNetwork& adaptnet, const Vector& context,
                  const Matrix& frames);

enum class VatStage { kSi, kAdaptNetTrained, kVatRetrained };

std::string VatStageName(VatStage stage);

// Adaptively trained model; `stage` only ever moves forward.
struct VatModel {
  AcousticDnn dnn;
  AdaptationNetwork adaptnet;
  VatStage stage = VatStage::kSi;

  TensorMap ToTensors() const;
  static VatModel FromTensors(const TensorMap& tensors);
};

// Stage 2: trains the adaptation network by backpropagating the frozen
// DNN's cross entropy through the shift; the DNN itself is untouched.
AdaptationNetwork TrainAdaptationNet(const AcousticDnn& si, const AcousticCorpus& corpus,
                                     const ContextTable& contexts, const AmTrainConfig& config,
                                     AmTrainLog* log = nullptr);

// Stage 3: re-updates the DNN in the shifted feature space with the
// adaptation network frozen.  Requires stage == kAdaptNetTrained.
VatModel RetrainVatDnn(const VatModel& model, const AcousticCorpus& corpus,
                       const ContextTable& contexts, const AmTrainConfig& config,
                       AmTrainLog* log = nullptr);

// Frame accuracy of the adapted model (normalize, shift, classify).
double FrameAccuracy(const VatModel& model, const AcousticCorpus& corpus,
                     const ContextTable& contexts);

// Frame-weighted cross entropy of the adapted model over a corpus.
double VatLoss(const AcousticDnn& dnn, const AdaptationNetwork& adaptnet,
               const AcousticCorpus& corpus, const ContextTable& contexts);

}  // namespace ctxasr

#endif  // CTXASR_ACOUSTIC_ADAPT_H_
