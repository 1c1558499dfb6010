// synth/synth_am.cc

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

#include "synth/synth_am.h"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "ctxfeat/context.h"
#include "util/common.h"
#include "util/rng.h"
#include "util/textio.h"

namespace ctxasr {

void SynthAmSpec::Validate() const {
  std::string bad;
  if (contexts < 2) bad += " contexts(>=2)";
  if (utterances_per_context < 1) bad += " utterances_per_context(>=1)";
  if (test_utterances_per_context < 1) bad += " test_utterances_per_context(>=1)";
  if (frames_per_utterance < 1) bad += " frames_per_utterance(>=1)";
  if (classes < 2) bad += " classes(>=2)";
  if (shift_magnitude < 0.0) bad += " shift_magnitude(>=0)";
  if (feature_dim < 1) bad += " feature_dim(>=1)";
  if (object_dim < contexts) bad += " object_dim(>=contexts)";
  if (place_dim < contexts) bad += " place_dim(>=contexts)";
  if (frames_per_video < 1) bad += " frames_per_video(>=1)";
  if (class_prior_decay <= 0.0 || class_prior_decay > 1.0) bad += " class_prior_decay((0,1])";
  if (posterior_peak <= 0.0 || posterior_peak >= 1.0) bad += " posterior_peak((0,1))";
  if (!bad.empty()) throw ConfigError(Msg("synth-am spec invalid fields:", bad));
}

namespace {

std::string UttId(const char* prefix, int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%04d", prefix, index);
  return buf;
}

// Geometric class priors, normalized.
std::vector<double> ClassPriors(int classes, double decay) {
  std::vector<double> priors(classes);
  double mass = 0.0;
  for (int k = 0; k < classes; ++k) {
    priors[k] = std::pow(decay, k);
    mass += priors[k];
  }
  for (double& p : priors) p /= mass;
  return priors;
}

int SampleClass(const std::vector<double>& priors, Rng* rng) {
  double u = rng->Uniform();
  double acc = 0.0;
  for (size_t k = 0; k < priors.size(); ++k) {
    acc += priors[k];
    if (u < acc) return static_cast<int>(k);
  }
  return static_cast<int>(priors.size()) - 1;
}

Vector NoisyPeakPosterior(int dim, int peak_coord, double peak, Rng* rng) {
  Vector p(dim);
  double sum = 0.0;
  for (int i = 0; i < dim; ++i) {
    p[i] = -std::log(std::max(rng->Uniform(), 1e-12));
    sum += p[i];
  }
  p *= (1.0 - peak) / sum;
  p[peak_coord] += peak;
  return p;
}

}  // namespace

SynthAmData GenerateAmData(const SynthAmSpec& spec, uint64_t seed) {
  spec.Validate();
  SynthAmData data;
  data.train.feature_dim = spec.feature_dim;
  data.train.num_classes = spec.classes;
  data.test.feature_dim = spec.feature_dim;
  data.test.num_classes = spec.classes;

  data.truth_shifts = Matrix::Zero(spec.contexts, spec.feature_dim);
  for (int c = 0; c < spec.contexts; ++c)
    data.truth_shifts(c, 0) = spec.shift_magnitude * c;

  std::vector<double> priors = ClassPriors(spec.classes, spec.class_prior_decay);
  Rng rng(MixSeed(seed, Fnv1a64("synth_am")));

  auto make_split = [&](AcousticCorpus* corpus, std::map<std::string, std::string>* manifest,
                        const char* prefix, int per_context) {
    int index = 0;
    for (int c = 0; c < spec.contexts; ++c) {
      for (int u = 0; u < per_context; ++u, ++index) {
        Utterance utt;
        utt.id = UttId(prefix, index);
        utt.frames.resize(spec.frames_per_utterance, spec.feature_dim);
        utt.labels.resize(spec.frames_per_utterance);
        for (int t = 0; t < spec.frames_per_utterance; ++t) {
          int label = SampleClass(priors, &rng);
          utt.labels[t] = label;
          for (int d = 0; d < spec.feature_dim; ++d) utt.frames(t, d) = rng.Normal();
          utt.frames(t, 0) += kSynthClassGap * label + data.truth_shifts(c, 0);
          utt.transcript.push_back(Msg("w", label));
        }
        std::string video = "vid_" + utt.id;
        (*manifest)[utt.id] = video;
        data.utt_context[utt.id] = c;

        VideoPosteriors object;
        object.video_id = video;
        object.source = PosteriorSource::kObject;
        VideoPosteriors place;
        place.video_id = video;
        place.source = PosteriorSource::kPlace;
        for (int f = 0; f < spec.frames_per_video; ++f) {
          object.frames.push_back(
              NoisyPeakPosterior(spec.object_dim, c, spec.posterior_peak, &rng));
          place.frames.push_back(
              NoisyPeakPosterior(spec.place_dim, c, spec.posterior_peak, &rng));
        }
        data.object_videos[video] = std::move(object);
        data.place_videos[video] = std::move(place);

        corpus->utterances.push_back(std::move(utt));
      }
    }
  };
  make_split(&data.train, &data.manifest_train, "utt", spec.utterances_per_context);
  make_split(&data.test, &data.manifest_test, "tst", spec.test_utterances_per_context);
  return data;
}

void WriteAmData(const SynthAmData& data, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto at = [&](const char* name) { return (std::filesystem::path(out_dir) / name).string(); };
  WriteAcousticCorpus(at("am_train.txt"), data.train);
  WriteAcousticCorpus(at("am_test.txt"), data.test);
  WriteManifest(at("manifest_train.txt"), data.manifest_train);
  WriteManifest(at("manifest_test.txt"), data.manifest_test);
  WritePosteriorFile(at("object_posteriors.txt"), data.object_videos);
  WritePosteriorFile(at("place_posteriors.txt"), data.place_videos);

  std::ostringstream shifts;
  for (Eigen::Index c = 0; c < data.truth_shifts.rows(); ++c) {
    shifts << c << '\t';
    for (Eigen::Index d = 0; d < data.truth_shifts.cols(); ++d) {
      if (d > 0) shifts << ' ';
      shifts << FormatFull(data.truth_shifts(c, d));
    }
    shifts << '\n';
  }
  WriteFile(at("truth_shifts.txt"), shifts.str());

  std::ostringstream contexts;
  for (const auto& [utt, c] : data.utt_context) contexts << utt << '\t' << c << '\n';
  WriteFile(at("utt_contexts.txt"), contexts.str());
}

}  // namespace ctxasr
