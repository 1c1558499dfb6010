// acoustic/corpus.h

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

#ifndef CTXASR_ACOUSTIC_CORPUS_H_
#define CTXASR_ACOUSTIC_CORPUS_H_

#include <string>
#include <vector>

#include "nncore/tensor.h"

namespace ctxasr {

// One utterance of frame-level features with per-frame class labels.
struct Utterance {
  std::string id;
  Matrix frames;            // T x D
  std::vector<int> labels;  // T, in [0, K)
  std::vector<std::string> transcript;

  int NumFrames() const { return static_cast<int>(frames.rows()); }
};

struct AcousticCorpus {
  std::vector<Utterance> utterances;
  int feature_dim = 0;
  int num_classes = 0;

  int TotalFrames() const;
  std::vector<std::string> UtteranceIds() const;
};

// Text format, per utterance:
//   utt_id T D K
//   T lines of D floats
//   one line of T integer labels
//   one line of transcript words (may be empty)
AcousticCorpus LoadAcousticCorpus(const std::string& path);
void WriteAcousticCorpus(const std::string& path, const AcousticCorpus& corpus);

}  // namespace ctxasr

#endif  // CTXASR_ACOUSTIC_CORPUS_H_
