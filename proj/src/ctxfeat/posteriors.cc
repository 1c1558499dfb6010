// ctxfeat/posteriors.cc

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

#include "ctxfeat/posteriors.h"

#include <cmath>
#include <sstream>

#include "util/common.h"
#include "util/rng.h"
#include "util/textio.h"

namespace ctxasr {

PosteriorMap LoadPosteriorFile(const std::string& path, PosteriorSource source) {
  PosteriorMap videos;
  std::vector<std::string> lines = ReadLines(path);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    std::vector<std::string> fields = SplitTab(lines[ln]);
    if (fields.size() != 3)
      throw DataError(Msg(path, ":", ln + 1, ": expected 3 tab-separated fields"));
    const std::string& video_id = fields[0];
    int frame_index = ParseInt(fields[1], Msg(path, ":", ln + 1));
    std::vector<std::string> tokens = SplitWhitespace(fields[2]);
    if (tokens.empty()) throw DataError(Msg(path, ":", ln + 1, ": empty posterior"));
    Vector posterior(tokens.size());
    for (size_t i = 0; i < tokens.size(); ++i)
      posterior[i] = ParseDouble(tokens[i], Msg(path, ":", ln + 1));

    VideoPosteriors& video = videos[video_id];
    if (video.video_id.empty()) {
      video.video_id = video_id;
      video.source = source;
    }
    if (frame_index != static_cast<int>(video.frames.size()))
      throw DataError(Msg(path, ":", ln + 1, ": frame index ", frame_index,
                          " out of order for video ", video_id));
    video.frames.push_back(std::move(posterior));
  }
  for (const auto& [id, video] : videos) ValidatePosteriors(video);
  return videos;
}

void WritePosteriorFile(const std::string& path, const PosteriorMap& videos) {
  std::ostringstream os;
  for (const auto& [id, video] : videos) {
    for (size_t n = 0; n < video.frames.size(); ++n) {
      os << id << '\t' << n << '\t';
      const Vector& frame = video.frames[n];
      for (Eigen::Index i = 0; i < frame.size(); ++i) {
        if (i > 0) os << ' ';
        os << FormatFull(frame[i]);
      }
      os << '\n';
    }
  }
  WriteFile(path, os.str());
}

void ValidatePosteriors(const VideoPosteriors& video) {
  if (video.frames.empty())
    throw DataError(Msg("video ", video.video_id, " has no posterior frames"));
  const int dim = video.Dim();
  for (size_t n = 0; n < video.frames.size(); ++n) {
    const Vector& frame = video.frames[n];
    if (frame.size() != dim)
      throw DataError(Msg("video ", video.video_id, " frame ", n, " has dim ", frame.size(),
                          ", expected ", dim));
    if ((frame.array() < 0.0).any())
      throw DataError(Msg("video ", video.video_id, " frame ", n, " has a negative entry"));
    if (std::abs(frame.sum() - 1.0) > 1e-4)
      throw DataError(Msg("video ", video.video_id, " frame ", n, " sums to ", frame.sum(),
                          ", not 1"));
  }
}

FrameChoice SelectContextFrame(const VideoPosteriors& video, uint64_t seed) {
  if (video.frames.empty())
    throw ContractError(Msg("select_context_frame: video ", video.video_id, " has no frames"));
  Rng rng = KeyedRng(seed, video.video_id);
  FrameChoice choice;
  choice.index = rng.UniformInt(static_cast<int>(video.frames.size()));
  choice.posterior = video.frames[choice.index];
  return choice;
}

}  // namespace ctxasr
