// ctxfeat/posteriors.h

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

#ifndef CTXASR_CTXFEAT_POSTERIORS_H_
#define CTXASR_CTXFEAT_POSTERIORS_H_

#include <map>
#include <string>
#include <vector>

#include "nncore/tensor.h"

namespace ctxasr {

enum class PosteriorSource { kObject, kPlace };

// Per-frame classifier posteriors for one video.  Every frame has the same
// dimension, entries are non-negative and sum to 1 (within 1e-4).
struct VideoPosteriors {
  std::string video_id;
  PosteriorSource source = PosteriorSource::kObject;
  std::vector<Vector> frames;

  int Dim() const { return frames.empty() ? 0 : static_cast<int>(frames[0].size()); }
};

using PosteriorMap = std::map<std::string, VideoPosteriors>;

// File format, one frame per line: video_id<TAB>frame_index<TAB>f1 f2 ... fD.
// Frames of a video must appear in order, indexed from 0.
PosteriorMap LoadPosteriorFile(const std::string& path, PosteriorSource source);
void WritePosteriorFile(const std::string& path, const PosteriorMap& videos);

// Throws DataError if the invariants above do not hold.
void ValidatePosteriors(const VideoPosteriors& video);

struct FrameChoice {
  int index = 0;
  Vector posterior;
};

// Picks one frame uniformly, keyed on (seed, video id) only, so adding or
// removing other videos never changes the choice for this one.
FrameChoice SelectContextFrame(const VideoPosteriors& video, uint64_t seed);

}  // namespace ctxasr

#endif  // CTXASR_CTXFEAT_POSTERIORS_H_
