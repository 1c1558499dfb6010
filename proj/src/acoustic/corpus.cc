// acoustic/corpus.cc

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

#include "acoustic/corpus.h"

#include <sstream>

#include "util/common.h"
#include "util/textio.h"

namespace ctxasr {

int AcousticCorpus::TotalFrames() const {
  int total = 0;
  for (const Utterance& utt : utterances) total += utt.NumFrames();
  return total;
}

std::vector<std::string> AcousticCorpus::UtteranceIds() const {
  std::vector<std::string> ids;
  ids.reserve(utterances.size());
  for (const Utterance& utt : utterances) ids.push_back(utt.id);
  return ids;
}

AcousticCorpus LoadAcousticCorpus(const std::string& path) {
  std::vector<std::string> lines = ReadLines(path);
  AcousticCorpus corpus;
  size_t ln = 0;
  while (ln < lines.size()) {
    if (lines[ln].empty()) {
      ++ln;
      continue;
    }
    std::vector<std::string> head = SplitWhitespace(lines[ln]);
    if (head.size() != 4)
      throw DataError(Msg(path, ":", ln + 1, ": expected 'utt_id T D K' header"));
    Utterance utt;
    utt.id = head[0];
    int frames = ParseInt(head[1], Msg(path, ":", ln + 1, " T"));
    int dim = ParseInt(head[2], Msg(path, ":", ln + 1, " D"));
    int classes = ParseInt(head[3], Msg(path, ":", ln + 1, " K"));
    if (frames < 1 || dim < 1 || classes < 1)
      throw DataError(Msg(path, ":", ln + 1, ": non-positive T, D, or K"));
    if (corpus.feature_dim == 0) {
      corpus.feature_dim = dim;
      corpus.num_classes = classes;
    } else if (dim != corpus.feature_dim || classes != corpus.num_classes) {
      throw DataError(Msg(path, ":", ln + 1, ": utterance ", utt.id,
                          " disagrees on D or K with the rest of the corpus"));
    }
    if (ln + frames + 2 >= lines.size())
      throw DataError(Msg(path, ": truncated utterance ", utt.id));

    utt.frames.resize(frames, dim);
    for (int t = 0; t < frames; ++t) {
      std::vector<std::string> values = SplitWhitespace(lines[ln + 1 + t]);
      if (static_cast<int>(values.size()) != dim)
        throw DataError(Msg(path, ":", ln + 2 + t, ": expected ", dim, " floats"));
      for (int d = 0; d < dim; ++d)
        utt.frames(t, d) = ParseDouble(values[d], Msg(path, ":", ln + 2 + t));
    }
    std::vector<std::string> label_tokens = SplitWhitespace(lines[ln + 1 + frames]);
    if (static_cast<int>(label_tokens.size()) != frames)
      throw DataError(Msg(path, ":", ln + 2 + frames, ": expected ", frames, " labels"));
    utt.labels.resize(frames);
    for (int t = 0; t < frames; ++t) {
      utt.labels[t] = ParseInt(label_tokens[t], Msg(path, ":", ln + 2 + frames));
      if (utt.labels[t] < 0 || utt.labels[t] >= classes)
        throw DataError(Msg(path, ":", ln + 2 + frames, ": label ", utt.labels[t],
                            " out of [0,", classes, ")"));
    }
    utt.transcript = SplitWhitespace(lines[ln + 2 + frames]);
    corpus.utterances.push_back(std::move(utt));
    ln += frames + 3;
  }
  return corpus;
}

void WriteAcousticCorpus(const std::string& path, const AcousticCorpus& corpus) {
  std::ostringstream os;
  for (const Utterance& utt : corpus.utterances) {
    os << utt.id << ' ' << utt.NumFrames() << ' ' << corpus.feature_dim << ' '
       << corpus.num_classes << '\n';
    for (int t = 0; t < utt.NumFrames(); ++t) {
      for (int d = 0; d < corpus.feature_dim; ++d) {
        if (d > 0) os << ' ';
        os << FormatFull(utt.frames(t, d));
      }
      os << '\n';
    }
    for (int t = 0; t < utt.NumFrames(); ++t) {
      if (t > 0) os << ' ';
      os << utt.labels[t];
    }
    os << '\n' << JoinWords(utt.transcript) << '\n';
  }
  WriteFile(path, os.str());
}

}  // namespace ctxasr
