// ctxfeat/context.h

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

#ifndef CTXASR_CTXFEAT_CONTEXT_H_
#define CTXASR_CTXFEAT_CONTEXT_H_

#include <map>
#include <string>
#include <vector>

#include "ctxfeat/pca.h"
#include "ctxfeat/posteriors.h"
#include "nncore/tensor.h"

namespace ctxasr {

enum class ContextKind { kObject, kPlace, kObjectPlace, kPcaProjected };

// Utterance-level visual descriptor: raw posteriors or their PCA projection.
struct ContextVector {
  std::string utterance_id;
  Vector values;
  ContextKind kind = ContextKind::kObject;

  int Dim() const { return static_cast<int>(values.size()); }
};

// Object values followed by place values; both must belong to the same
// utterance.
ContextVector ConcatContext(const ContextVector& object, const ContextVector& place);

// utterance id -> context vector, total over a corpus manifest.
using ContextTable = std::map<std::string, ContextVector>;

// Manifest file: utt_id<TAB>video_id, one utterance per line.
// The map preserves file order for deterministic iteration via std::map.
std::map<std::string, std::string> LoadManifest(const std::string& path);
void WriteManifest(const std::string& path, const std::map<std::string, std::string>& manifest);

// One selected frame per video (same frame for object and place posteriors),
// concatenated when both sources are given.  These are the vectors PCA is
// fit on and that the context table projects.
std::vector<Vector> CollectFrameVectors(const std::map<std::string, std::string>& manifest,
                                        const PosteriorMap& object_videos,
                                        const PosteriorMap* place_videos, uint64_t seed);

// select frame -> (concat) -> pca_transform, for every manifest utterance.
// Missing videos are all listed in one error; nothing partial is returned.
ContextTable BuildContextTable(const std::map<std::string, std::string>& manifest,
                               const PosteriorMap& object_videos,
                               const PosteriorMap* place_videos, const PcaModel& pca,
                               uint64_t seed);

// Table file: utt_id<TAB>c1 c2 ... ck.
void WriteContextTable(const std::string& path, const ContextTable& table);
ContextTable LoadContextTable(const std::string& path);

// Lookup that reports every missing id at once.
const ContextVector& GetContext(const ContextTable& table, const std::string& utterance_id);
void RequireContexts(const ContextTable& table, const std::vector<std::string>& utterance_ids);

}  // namespace ctxasr

#endif  // CTXASR_CTXFEAT_CONTEXT_H_
