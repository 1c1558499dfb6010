// ctxfeat/context.cc

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

#include "ctxfeat/context.h"

#include <sstream>

#include "util/common.h"
#include "util/textio.h"

namespace ctxasr {

ContextVector ConcatContext(const ContextVector& object, const ContextVector& place) {
  if (object.utterance_id != place.utterance_id)
    throw ContractError(Msg("concat_context: utterance ids differ: '", object.utterance_id,
                            "' vs '", place.utterance_id, "'"));
  ContextVector out;
  out.utterance_id = object.utterance_id;
  out.kind = ContextKind::kObjectPlace;
  out.values.resize(object.values.size() + place.values.size());
  out.values << object.values, place.values;
  return out;
}

std::map<std::string, std::string> LoadManifest(const std::string& path) {
  std::map<std::string, std::string> manifest;
  std::vector<std::string> lines = ReadLines(path);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    std::vector<std::string> fields = SplitTab(lines[ln]);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw DataError(Msg(path, ":", ln + 1, ": expected utt_id<TAB>video_id"));
    if (!manifest.emplace(fields[0], fields[1]).second)
      throw DataError(Msg(path, ":", ln + 1, ": duplicate utterance ", fields[0]));
  }
  return manifest;
}

void WriteManifest(const std::string& path, const std::map<std::string, std::string>& manifest) {
  std::ostringstream os;
  for (const auto& [utt, video] : manifest) os << utt << '\t' << video << '\n';
  WriteFile(path, os.str());
}

namespace {

// Reports all missing videos in one pass.
void CheckVideosPresent(const std::map<std::string, std::string>& manifest,
                        const PosteriorMap& object_videos, const PosteriorMap* place_videos) {
  std::string missing;
  for (const auto& [utt, video] : manifest) {
    bool object_ok = object_videos.count(video) > 0;
    bool place_ok = place_videos == nullptr || place_videos->count(video) > 0;
    if (!object_ok || !place_ok) missing += Msg(" ", video, "(", utt, ")");
  }
  if (!missing.empty())
    throw DataError(Msg("missing posterior videos:", missing));
}

}  // namespace

std::vector<Vector> CollectFrameVectors(const std::map<std::string, std::string>& manifest,
                                        const PosteriorMap& object_videos,
                                        const PosteriorMap* place_videos, uint64_t seed) {
  CheckVideosPresent(manifest, object_videos, place_videos);
  std::vector<Vector> vectors;
  vectors.reserve(manifest.size());
  for (const auto& [utt, video] : manifest) {
    const VideoPosteriors& object = object_videos.at(video);
    FrameChoice choice = SelectContextFrame(object, seed);
    if (place_videos == nullptr) {
      vectors.push_back(choice.posterior);
      continue;
    }
    // Object and place posteriors describe the same selected frame.
    const VideoPosteriors& place = place_videos->at(video);
    if (place.frames.size() != object.frames.size())
      throw DataError(Msg("video ", video, ": object has ", object.frames.size(),
                          " frames but place has ", place.frames.size()));
    Vector joint(choice.posterior.size() + place.frames[choice.index].size());
    joint << choice.posterior, place.frames[choice.index];
    vectors.push_back(std::move(joint));
  }
  return vectors;
}

ContextTable BuildContextTable(const std::map<std::string, std::string>& manifest,
                               const PosteriorMap& object_videos,
                               const PosteriorMap* place_videos, const PcaModel& pca,
                               uint64_t seed) {
  std::vector<Vector> raw = CollectFrameVectors(manifest, object_videos, place_videos, seed);
  ContextTable table;
  size_t i = 0;
  for (const auto& [utt, video] : manifest) {
    ContextVector context;
    context.utterance_id = utt;
    context.kind = ContextKind::kPcaProjected;
    context.values = PcaTransform(pca, raw[i++]);
    table.emplace(utt, std::move(context));
  }
  return table;
}

void WriteContextTable(const std::string& path, const ContextTable& table) {
  std::ostringstream os;
  for (const auto& [utt, context] : table) {
    os << utt << '\t';
    for (Eigen::Index i = 0; i < context.values.size(); ++i) {
      if (i > 0) os << ' ';
      os << FormatFull(context.values[i]);
    }
    os << '\n';
  }
  WriteFile(path, os.str());
}

ContextTable LoadContextTable(const std::string& path) {
  ContextTable table;
  std::vector<std::string> lines = ReadLines(path);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    std::vector<std::string> fields = SplitTab(lines[ln]);
    if (fields.size() != 2 || fields[0].empty())
      throw DataError(Msg(path, ":", ln + 1, ": expected utt_id<TAB>values"));
    std::vector<std::string> tokens = SplitWhitespace(fields[1]);
    ContextVector context;
    context.utterance_id = fields[0];
    context.kind = ContextKind::kPcaProjected;
    context.values.resize(tokens.size());
    for (size_t i = 0; i < tokens.size(); ++i)
      context.values[i] = ParseDouble(tokens[i], Msg(path, ":", ln + 1));
    if (!table.emplace(fields[0], std::move(context)).second)
      throw DataError(Msg(path, ":", ln + 1, ": duplicate utterance ", fields[0]));
  }
  return table;
}

const ContextVector& GetContext(const ContextTable& table, const std::string& utterance_id) {
  auto it = table.find(utterance_id);
  if (it == table.end())
    throw DataError(Msg("no context vector for utterance ", utterance_id));
  return it->second;
}

void RequireContexts(const ContextTable& table, const std::vector<std::string>& utterance_ids) {
  std::string missing;
  for (const std::string& utt : utterance_ids)
    if (table.count(utt) == 0) missing += Msg(" ", utt);
  if (!missing.empty())
    throw DataError(Msg("missing context vectors for utterances:", missing));
}

}  // namespace ctxasr
