// Scratch benchmark for tuning the VAT synthetic pipeline. Not installed.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "acoustic/adapt.h"
#include "acoustic/dnn.h"
#include "ctxfeat/context.h"
#include "ctxfeat/pca.h"
#include "synth/synth_am.h"

using namespace ctxasr;

static double CenteredCosine(const Matrix& learned, const Matrix& truth) {
  Matrix a = learned.rowwise() - learned.colwise().mean();
  Matrix b = truth.rowwise() - truth.colwise().mean();
  double dot = (a.array() * b.array()).sum();
  return dot / (a.norm() * b.norm());
}

static double arg(int argc, char** argv, int i, double dflt) {
  return argc > i ? atof(argv[i]) : dflt;
}

int main(int argc, char** argv) {
  double shift = arg(argc, argv, 1, 3.0);
  uint64_t seed = (uint64_t)arg(argc, argv, 2, 1);
  int si_epochs = (int)arg(argc, argv, 3, 15);
  double si_lr = arg(argc, argv, 4, 0.3);
  int adapt_epochs = (int)arg(argc, argv, 5, 40);
  double adapt_lr = arg(argc, argv, 6, 0.1);  // adagrad, factor 1.0 applied
  int vat_epochs = (int)arg(argc, argv, 7, 15);
  int utts = (int)arg(argc, argv, 8, 40);
  int frames = (int)arg(argc, argv, 9, 80);
  double decay = arg(argc, argv, 10, 0.8);
  int pca_k = (int)arg(argc, argv, 11, 24);
  int hidden = (int)arg(argc, argv, 12, 64);
  int adapt_sgd = (int)arg(argc, argv, 13, 0);

  auto t0 = std::chrono::steady_clock::now();
  SynthAmSpec spec;
  spec.shift_magnitude = shift;
  spec.utterances_per_context = utts;
  spec.frames_per_utterance = frames;
  spec.class_prior_decay = decay;
  SynthAmData data = GenerateAmData(spec, seed);

  std::vector<Vector> vecs = CollectFrameVectors(data.manifest_train, data.object_videos,
                                                 &data.place_videos, seed);
  PcaModel pca = PcaFit(vecs, pca_k);
  ContextTable ctx_train =
      BuildContextTable(data.manifest_train, data.object_videos, &data.place_videos, pca, seed);
  ContextTable ctx_test =
      BuildContextTable(data.manifest_test, data.object_videos, &data.place_videos, pca, seed);

  AmTrainConfig si_cfg;
  si_cfg.epochs = si_epochs;
  si_cfg.learning_rate = si_lr;
  si_cfg.seed = seed;
  si_cfg.hidden_units = hidden;

  AmTrainLog si_log;
  AcousticDnn si = TrainSiDnn(data.train, si_cfg, &si_log);
  double si_train = FrameAccuracy(si, data.train);
  double si_test = FrameAccuracy(si, data.test);
  auto t1 = std::chrono::steady_clock::now();

  AmTrainConfig ad_cfg = si_cfg;
  ad_cfg.epochs = adapt_epochs;
  ad_cfg.learning_rate = adapt_lr;
  ad_cfg.finetune_lr_factor = 1.0;
  ad_cfg.optimizer = adapt_sgd ? OptKind::kSgd : OptKind::kAdagrad;
  ad_cfg.utterance_batch = 4;
  AmTrainLog adapt_log;
  AdaptationNetwork adaptnet = TrainAdaptationNet(si, data.train, ctx_train, ad_cfg, &adapt_log);
  Matrix learned = Matrix::Zero(spec.contexts, spec.feature_dim);
  std::vector<int> counts(spec.contexts, 0);
  for (const auto& [utt, c] : data.utt_context) {
    if (ctx_train.count(utt) == 0) continue;
    learned.row(c) += adaptnet.Shift(ctx_train.at(utt).values).transpose();
    counts[c]++;
  }
  for (int c = 0; c < spec.contexts; ++c) learned.row(c) /= counts[c];
  Matrix truth_norm = data.truth_shifts;
  for (int c = 0; c < spec.contexts; ++c)
    truth_norm.row(c) = (truth_norm.row(c).transpose().array() * si.feature_scale.array())
                            .matrix()
                            .transpose();
  double cosine = shift > 0 ? CenteredCosine(learned, -truth_norm) : 0.0;
  auto t2 = std::chrono::steady_clock::now();

  VatModel stage2{si, adaptnet, VatStage::kAdaptNetTrained};
  AmTrainConfig vat_cfg = si_cfg;
  vat_cfg.epochs = vat_epochs;
  AmTrainLog vat_log;
  VatModel vat = RetrainVatDnn(stage2, data.train, ctx_train, vat_cfg, &vat_log);
  double vat_test = FrameAccuracy(vat, data.test, ctx_test);
  auto t3 = std::chrono::steady_clock::now();

  AmTrainLog cc_log;
  AcousticDnn concat = TrainConcatBaseline(data.train, ctx_train, si_cfg, &cc_log);
  double concat_test = FrameAccuracy(concat, data.test, ctx_test);
  auto t4 = std::chrono::steady_clock::now();

  auto ms = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  };
  std::printf(
      "shift=%.1f seed=%llu | si_tr=%.3f si=%.3f vat=%.3f concat=%.3f cos=%.3f | "
      "adapt %.3f->%.3f | t: %lld %lld %lld %lld ms\n",
      shift, (unsigned long long)seed, si_train, si_test, vat_test, concat_test, cosine,
      adapt_log.initial_loss, adapt_log.epoch_loss.back(), ms(t0, t1), ms(t1, t2), ms(t2, t3),
      ms(t3, t4));
  for (int c = 0; c < spec.contexts; ++c) {
    double off = std::sqrt(learned.row(c).squaredNorm() - learned(c, 0) * learned(c, 0));
    std::printf("  ctx%d: learned_dim0=%+.3f off_axis_norm=%.3f truth_dim0=%+.3f\n", c,
                learned(c, 0), off, -truth_norm(c, 0));
  }
  return 0;
}
