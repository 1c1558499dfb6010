// acoustic/dnn.h

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

#ifndef CTXASR_ACOUSTIC_DNN_H_
#define CTXASR_ACOUSTIC_DNN_H_

#include <string>
#include <vector>

#include "acoustic/corpus.h"
#include "ctxfeat/context.h"
#include "nncore/checkpoint.h"
#include "nncore/dense.h"
#include "nncore/optim.h"

namespace ctxasr {

// Frame classifier: a stack of ReLU hidden layers and a softmax output.
// Raw features are normalized with training-set statistics before anything
// else touches them; for concatenation models the (already centered)
// context vector is appended after normalization.
struct AcousticDnn {
  std::vector<DenseLayer> layers;
  Vector feature_mean;   // raw_dim
  Vector feature_scale;  // raw_dim, 1/std
  int raw_dim = 0;
  int context_dim = 0;  // > 0 only for the concatenation baseline
  int num_classes = 0;

  int InputDim() const { return raw_dim + context_dim; }

  Matrix Normalize(const Matrix& frames) const;
  // Full forward pass; input must already be normalized (and shifted or
  // concatenated where applicable).
  Matrix Probs(const Matrix& input) const;

  TensorMap ToTensors() const;
  static AcousticDnn FromTensors(const TensorMap& tensors);
};

struct AmTrainConfig {
  int epochs = 20;
  double learning_rate = 0.2;
  int batch_size = 64;        // frames per update
  int utterance_batch = 8;    // utterances per update in stage 2
  uint64_t seed = 1;
  OptKind optimizer = OptKind::kSgd;
  int hidden_layers = 5;
  int hidden_units = 128;
  // Stage 2/3 run at learning_rate * finetune_lr_factor.
  double finetune_lr_factor = 0.1;
  // How many adapt/retrain rounds; the standard recipe is a single pass.
  int stage_iterations = 1;
};

struct AmTrainLog {
  std::vector<double> epoch_loss;  // frame-weighted cross entropy per epoch
  double initial_loss = -1.0;      // loss before the first update
  int floored = 0;                 // probability-floor hits
};

// Stage 1: speaker/video-independent baseline, cross-entropy minibatch SGD.
AcousticDnn TrainSiDnn(const AcousticCorpus& corpus, const AmTrainConfig& config,
                       AmTrainLog* log = nullptr);

// Feature-concatenation baseline: the utterance's context vector is appended
// to every frame.
AcousticDnn TrainConcatBaseline(const AcousticCorpus& corpus, const ContextTable& contexts,
                                const AmTrainConfig& config, AmTrainLog* log = nullptr);

// Fraction of frames whose argmax class matches the label; ties break
// toward the lowest class index.
double FrameAccuracy(const AcousticDnn& model, const AcousticCorpus& corpus);
double FrameAccuracy(const AcousticDnn& model, const AcousticCorpus& corpus,
                     const ContextTable& contexts);

// Shared by the trainers: one epoch of minibatch updates over a prepared
// input matrix.  Returns the frame-weighted mean loss.
double TrainDnnEpoch(AcousticDnn* dnn, const Matrix& inputs, const std::vector<int>& labels,
                     int batch_size, Rng* order_rng, Optimizer* optimizer, int* floored);

// Frame-weighted cross entropy without updates.
double DnnLoss(const AcousticDnn& dnn, const Matrix& inputs, const std::vector<int>& labels);

}  // namespace ctxasr

#endif  // CTXASR_ACOUSTIC_DNN_H_
