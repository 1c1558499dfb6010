// synth/synth_am.h

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

#ifndef CTXASR_SYNTH_SYNTH_AM_H_
#define CTXASR_SYNTH_SYNTH_AM_H_

#include <map>
#include <string>

#include "acoustic/corpus.h"
#include "ctxfeat/posteriors.h"

namespace ctxasr {

// Synthetic acoustic benchmark.  Classes sit on a grid along feature
// dimension 0 (gap 3 sigma); each context adds a grid-aligned offset to all
// of its frames, so at full shift magnitude a frame's position is ambiguous
// between (class, context) pairs and a context-blind model cannot resolve
// it.  Class priors decay geometrically; the tilt gives the frozen-model
// adaptation stage one consistent alignment to pull toward.
struct SynthAmSpec {
  int contexts = 4;                 // C
  int utterances_per_context = 30;  // training side
  int test_utterances_per_context = 10;
  int frames_per_utterance = 40;
  int classes = 6;  // K
  double shift_magnitude = 3.0;  // context offset per step, in noise sigmas
  int feature_dim = 40;
  int object_dim = 100;
  int place_dim = 50;
  int frames_per_video = 5;
  double class_prior_decay = 0.8;
  double posterior_peak = 0.7;  // mass on the context-identifying coordinate

  // Throws ConfigError listing every invalid field.
  void Validate() const;
};

constexpr double kSynthClassGap = 3.0;  // class separation in sigmas

struct SynthAmData {
  AcousticCorpus train, test;
  std::map<std::string, std::string> manifest_train, manifest_test;  // utt -> video
  PosteriorMap object_videos, place_videos;
  Matrix truth_shifts;                        // C x feature_dim, raw units
  std::map<std::string, int> utt_context;    // every utterance's context index
};

SynthAmData GenerateAmData(const SynthAmSpec& spec, uint64_t seed);

// Writes am_train.txt, am_test.txt, manifest_{train,test}.txt,
// object_posteriors.txt, place_posteriors.txt, truth_shifts.txt,
// utt_contexts.txt into out_dir.  Byte-identical for identical inputs.
void WriteAmData(const SynthAmData& data, const std::string& out_dir);

}  // namespace ctxasr

#endif  // CTXASR_SYNTH_SYNTH_AM_H_
